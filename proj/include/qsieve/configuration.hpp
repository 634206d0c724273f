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

#ifndef QSIEVE_CONFIGURATION_HPP_
#define QSIEVE_CONFIGURATION_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qsieve {

// A point configuration on the ground set {1, ..., m}: a set of marked
// singletons ("balls") plus a set of arcs {a, b}, all pairwise disjoint as
// point sets, with arcs mutually noncrossing.  Points in no feature are
// uncovered.  Canonical form: balls ascending; each arc stored (min, max);
// arcs ascending lexicographically.
struct Configuration {
  int ground_size = 0;                      // m
  std::vector<int> balls;                   // marked singletons
  std::vector<std::pair<int, int>> arcs;    // (a, b) with a < b

  auto operator<=>(const Configuration&) const = default;

  // "m=6; balls=[6]; arcs=[(1,3),(4,5)]"
  std::string to_text() const;
};

// Structural validity: in-range entries, canonical ordering, and pairwise
// disjoint feature point sets.
bool is_disjoint(const Configuration& c);

// True iff no two arcs interleave: arcs (a,b) and (c,d) cross when
// a < c < b < d (linearly).  Does not re-check disjointness.
bool is_noncrossing(const Configuration& c);

// Default ground-size cap for enumeration (the count at m is the Catalan
// number C_{m+1}; m = 16 already means 35,357,670 objects).
inline constexpr int kConfigurationGroundCap = 16;

// All noncrossing configurations on {1, ..., m}, canonically sorted.
// The public entry point partitions the search on point 1's choice and is
// OpenMP-parallel when enabled; the _serial variant is the plain recursive
// reference, kept so tests can compare the two.  Output is identical.
// Throws std::invalid_argument for m < 0, size_limit_error for m > cap.
std::vector<Configuration> enumerate_configurations(
    int m, int cap = kConfigurationGroundCap);
std::vector<Configuration> enumerate_configurations_serial(
    int m, int cap = kConfigurationGroundCap);

}  // namespace qsieve

#endif  // QSIEVE_CONFIGURATION_HPP_
