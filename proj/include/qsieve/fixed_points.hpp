// Copyright 2026 The qsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSIEVE_FIXED_POINTS_HPP_
#define QSIEVE_FIXED_POINTS_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qsieve {

// Fixed points of one group element over an enumerated family: objects x
// with act(x) == x.  The plain loop below is the reference; count_fixed is
// the OpenMP kernel over the shared immutable vector (objects are only read,
// every iteration is independent, and + reduction is order-insensitive, so
// the two always agree).

template <typename Obj, typename Act>
std::size_t count_fixed_serial(const std::vector<Obj>& objects, Act&& act) {
  std::size_t count = 0;
  for (const Obj& x : objects) {
    if (act(x) == x) ++count;
  }
  return count;
}

template <typename Obj, typename Act>
std::size_t count_fixed(const std::vector<Obj>& objects, Act&& act) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(objects.size());
  long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (act(objects[i]) == objects[i]) ++count;
  }
  return static_cast<std::size_t>(count);
}

// Orbits of the cyclic group generated by `step` on a canonically sorted
// enumeration.  Each orbit is listed starting from its smallest unvisited
// representative, following repeated applications of step.  Throws
// std::logic_error if step ever leaves the enumerated set (which would mean
// the action is not closed on the family).
template <typename Obj, typename Step>
std::vector<std::vector<Obj>> orbit_decomposition(
    const std::vector<Obj>& sorted_objects, Step&& step) {
  std::vector<char> visited(sorted_objects.size(), 0);
  std::vector<std::vector<Obj>> orbits;
  auto index_of = [&](const Obj& x) -> std::size_t {
    auto it =
        std::lower_bound(sorted_objects.begin(), sorted_objects.end(), x);
    if (it == sorted_objects.end() || !(*it == x)) {
      throw std::logic_error("orbit_decomposition: step left the family");
    }
    return static_cast<std::size_t>(it - sorted_objects.begin());
  };
  for (std::size_t i = 0; i < sorted_objects.size(); ++i) {
    if (visited[i]) continue;
    visited[i] = 1;
    std::vector<Obj> orbit{sorted_objects[i]};
    for (Obj y = step(sorted_objects[i]); !(y == sorted_objects[i]);
         y = step(y)) {
      std::size_t j = index_of(y);
      if (visited[j]) {
        throw std::logic_error("orbit_decomposition: step is not a bijection");
      }
      visited[j] = 1;
      orbit.push_back(y);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// |Fix(g^k)| for a family descriptor (enumerate() + rotate(x, k)); convenience
// wrapper that re-enumerates, for one-off queries.
template <typename Family>
std::size_t fixed_point_count(const Family& family, int k) {
  const auto objects = family.enumerate();
  return count_fixed(objects,
                     [&](const auto& x) { return family.rotate(x, k); });
}

}  // namespace qsieve

#endif  // QSIEVE_FIXED_POINTS_HPP_
