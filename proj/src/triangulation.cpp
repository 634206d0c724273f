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

#include "qsieve/triangulation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsieve/detail/text.hpp"
#include "qsieve/errors.hpp"

namespace qsieve {

namespace {

// Pick diagonals from the ascending candidate list; a full triangulation of
// a convex polygon is exactly a maximum set of gon - 3 pairwise noncrossing
// diagonals, so no other structure needs checking.
void search(const std::vector<std::pair<int, int>>& candidates,
            std::size_t from, int need,
            std::vector<std::pair<int, int>>& chosen, int gon,
            std::vector<Triangulation>& out) {
  if (need == 0) {
    out.push_back(Triangulation{gon, chosen});
    return;
  }
  for (std::size_t t = from;
       t + static_cast<std::size_t>(need) <= candidates.size(); ++t) {
    const auto& d = candidates[t];
    bool ok = true;
    for (const auto& c : chosen) {
      if (diagonals_cross(c, d)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(d);
    search(candidates, t + 1, need - 1, chosen, gon, out);
    chosen.pop_back();
  }
}

}  // namespace

std::string Triangulation::to_text() const {
  std::ostringstream out;
  out << "gon=" << gon << "; diagonals=" << detail::pair_list(diagonals);
  return out.str();
}

bool diagonals_cross(std::pair<int, int> e, std::pair<int, int> f) {
  const auto [a, b] = e;
  const auto [c, d] = f;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool is_noncrossing(const Triangulation& t) {
  for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < t.diagonals.size(); ++j) {
      if (diagonals_cross(t.diagonals[i], t.diagonals[j])) return false;
    }
  }
  return true;
}

std::vector<Triangulation> enumerate_triangulations(int gon, int cap) {
  if (gon < 3) {
    throw std::invalid_argument(
        "enumerate_triangulations: polygon needs at least 3 vertices");
  }
  if (cap < 3) {
    throw std::invalid_argument("enumerate_triangulations: cap must be >= 3");
  }
  if (gon > cap) {
    std::ostringstream msg;
    msg << "enumerate_triangulations: polygon size " << gon << " exceeds cap "
        << cap;
    throw size_limit_error(msg.str());
  }
  // Diagonals are vertex pairs at cyclic distance >= 2; (1, gon) is the
  // closing side of the polygon, not a diagonal.
  std::vector<std::pair<int, int>> candidates;
  for (int i = 1; i <= gon; ++i) {
    for (int j = i + 2; j <= gon; ++j) {
      if (i == 1 && j == gon) continue;
      candidates.emplace_back(i, j);
    }
  }
  std::vector<Triangulation> out;
  std::vector<std::pair<int, int>> chosen;
  search(candidates, 0, gon - 3, chosen, gon, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qsieve
