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

#ifndef QSIEVE_MATCHING_HPP_
#define QSIEVE_MATCHING_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qsieve {

// A perfect matching of {1, ..., 2n} by noncrossing arcs.  Canonical form:
// each arc stored (min, max); arcs ascending lexicographically (equivalently,
// by left endpoint).
struct Matching {
  int n = 0;                                // ground set is {1, ..., 2n}
  std::vector<std::pair<int, int>> arcs;    // exactly n arcs

  auto operator<=>(const Matching&) const = default;

  // "n=2; arcs=[(1,2),(3,4)]"
  std::string to_text() const;
};

// True iff the arcs use each of 1..2n exactly once (canonical order checked).
bool is_perfect(const Matching& m);

// True iff no two arcs interleave (a < c < b < d linearly).
bool is_noncrossing(const Matching& m);

// Default cap on n for enumeration (count is C_n; n = 8 gives 1430 objects,
// and the point set 2n already reaches 16).
inline constexpr int kMatchingCap = 8;

// All noncrossing perfect matchings of {1, ..., 2n}, canonically sorted.
// n = 0 yields the single empty matching.  Throws std::invalid_argument for
// n < 0, size_limit_error for n > cap.
std::vector<Matching> enumerate_matchings(int n, int cap = kMatchingCap);

}  // namespace qsieve

#endif  // QSIEVE_MATCHING_HPP_
