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

#include "qsieve/rotation.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qsieve {

namespace {

// 1-based wrap of i + s into {1, ..., m}; C++ % can be negative, hence the
// extra + m.
inline int shift_point(int i, int s, int m) {
  int r = (i - 1 + s) % m;
  if (r < 0) r += m;
  return r + 1;
}

std::vector<std::pair<int, int>> shift_pairs(
    const std::vector<std::pair<int, int>>& pairs, int s, int m) {
  std::vector<std::pair<int, int>> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    int x = shift_point(a, s, m);
    int y = shift_point(b, s, m);
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Configuration rotate_configuration(const Configuration& c, int s) {
  if (c.ground_size == 0) return c;
  Configuration out;
  out.ground_size = c.ground_size;
  out.balls.reserve(c.balls.size());
  for (int b : c.balls) out.balls.push_back(shift_point(b, s, c.ground_size));
  std::sort(out.balls.begin(), out.balls.end());
  out.arcs = shift_pairs(c.arcs, s, c.ground_size);
  return out;
}

Matching rotate_matching(const Matching& m, int s) {
  if (m.n == 0) return m;
  return Matching{m.n, shift_pairs(m.arcs, s, 2 * m.n)};
}

Triangulation rotate_triangulation(const Triangulation& t, int s) {
  return Triangulation{t.gon, shift_pairs(t.diagonals, s, t.gon)};
}

}  // namespace qsieve
