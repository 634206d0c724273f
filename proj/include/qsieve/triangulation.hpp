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

#ifndef QSIEVE_TRIANGULATION_HPP_
#define QSIEVE_TRIANGULATION_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qsieve {

// A triangulation of a convex polygon with vertices 1, ..., gon (in cyclic
// order): exactly gon - 3 pairwise noncrossing diagonals.  Canonical form:
// each diagonal stored (min, max); diagonals ascending lexicographically.
struct Triangulation {
  int gon = 3;                                  // number of polygon vertices
  std::vector<std::pair<int, int>> diagonals;   // gon - 3 diagonals

  auto operator<=>(const Triangulation&) const = default;

  // "gon=5; diagonals=[(1,3),(1,4)]"
  std::string to_text() const;
};

// True iff the two diagonals cross in the open interior of the polygon:
// with (a, b) and (c, d) normalized to min-first, exactly when
// a < c < b < d or c < a < d < b.  Shared endpoints do not cross.
bool diagonals_cross(std::pair<int, int> e, std::pair<int, int> f);

// True iff no two stored diagonals cross.
bool is_noncrossing(const Triangulation& t);

// Default cap on the polygon size for enumeration (count is C_{gon-2};
// gon = 12 gives 16796 objects).
inline constexpr int kTriangulationGonCap = 12;

// All triangulations of the convex gon-gon, canonically sorted.  gon = 3
// yields the single empty triangulation.  Throws std::invalid_argument for
// gon < 3, size_limit_error for gon > cap.
std::vector<Triangulation> enumerate_triangulations(
    int gon, int cap = kTriangulationGonCap);

}  // namespace qsieve

#endif  // QSIEVE_TRIANGULATION_HPP_
