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

#ifndef QSIEVE_FAMILIES_HPP_
#define QSIEVE_FAMILIES_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsieve/bigint.hpp"
#include "qsieve/closed_forms.hpp"
#include "qsieve/configuration.hpp"
#include "qsieve/matching.hpp"
#include "qsieve/polynomial.hpp"
#include "qsieve/qanalogue.hpp"
#include "qsieve/rotation.hpp"
#include "qsieve/triangulation.hpp"

namespace qsieve {

// A family descriptor bundles everything the verifier needs about one
// Catalan family of size parameter n: the enumeration, the cyclic action on
// it, the candidate sieving polynomial, and (optionally) a per-element
// closed-form prediction.  The three families below share this duck-typed
// surface; tests substitute descriptors with deliberately wrong pieces to
// exercise the violation paths.

// Noncrossing (1,2)-configurations over {1, ..., n-1}, counted by C_n,
// rotated by the cyclic group of order n-1.  n = 1 is the empty ground set
// with the trivial group.
struct ConfigurationFamily {
  using Object = Configuration;

  int n = 1;
  int ground_cap = kConfigurationGroundCap;

  explicit ConfigurationFamily(int n_in,
                               int ground_cap_in = kConfigurationGroundCap)
      : n(n_in), ground_cap(ground_cap_in) {
    if (n < 1) {
      throw std::invalid_argument("ConfigurationFamily: n must be >= 1");
    }
  }

  std::string name() const { return "config"; }
  int size_parameter() const { return n; }
  int group_order() const { return n > 1 ? n - 1 : 1; }
  std::vector<Configuration> enumerate() const {
    return enumerate_configurations(n - 1, ground_cap);
  }
  Configuration rotate(const Configuration& c, int k) const {
    return rotate_configuration(c, k);
  }
  Polynomial sieving_polynomial() const { return q_catalan(n); }
  std::optional<BigInt> closed_form(int k) const {
    if (n == 1) return BigInt(1);
    return rhs_closed_form(n, k);
  }
};

// Noncrossing perfect matchings of {1, ..., 2n}, counted by C_n, rotated by
// the cyclic group of order 2n.  n = 0 is the empty matching with the
// trivial group.
struct MatchingFamily {
  using Object = Matching;

  int n = 0;
  int cap = kMatchingCap;

  explicit MatchingFamily(int n_in, int cap_in = kMatchingCap)
      : n(n_in), cap(cap_in) {
    if (n < 0) throw std::invalid_argument("MatchingFamily: n must be >= 0");
  }

  std::string name() const { return "matching"; }
  int size_parameter() const { return n; }
  int group_order() const { return n > 0 ? 2 * n : 1; }
  std::vector<Matching> enumerate() const {
    return enumerate_matchings(n, cap);
  }
  Matching rotate(const Matching& m, int k) const {
    return rotate_matching(m, k);
  }
  Polynomial sieving_polynomial() const { return q_catalan(n); }
  std::optional<BigInt> closed_form(int) const { return std::nullopt; }
};

// Triangulations of the convex (n+2)-gon, counted by C_n, rotated by the
// cyclic group of order n+2.  The size parameter is the Catalan index n, not
// the polygon size.
struct TriangulationFamily {
  using Object = Triangulation;

  int n = 1;
  int gon_cap = kTriangulationGonCap;

  explicit TriangulationFamily(int n_in, int gon_cap_in = kTriangulationGonCap)
      : n(n_in), gon_cap(gon_cap_in) {
    if (n < 1) {
      throw std::invalid_argument("TriangulationFamily: n must be >= 1");
    }
  }

  std::string name() const { return "triangulation"; }
  int size_parameter() const { return n; }
  int gon() const { return n + 2; }
  int group_order() const { return gon(); }
  std::vector<Triangulation> enumerate() const {
    return enumerate_triangulations(gon(), gon_cap);
  }
  Triangulation rotate(const Triangulation& t, int k) const {
    return rotate_triangulation(t, k);
  }
  Polynomial sieving_polynomial() const { return q_catalan(n); }
  std::optional<BigInt> closed_form(int) const { return std::nullopt; }
};

}  // namespace qsieve

#endif  // QSIEVE_FAMILIES_HPP_
