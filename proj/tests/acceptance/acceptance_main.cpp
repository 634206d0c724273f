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
//
// Acceptance suite: one pass/fail line per criterion, all exact-arithmetic.
// Each criterion carries a wall-clock budget; exceeding it is a failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "qsieve/bigint.hpp"
#include "qsieve/closed_forms.hpp"
#include "qsieve/cyclotomic.hpp"
#include "qsieve/families.hpp"
#include "qsieve/fixed_points.hpp"
#include "qsieve/polynomial.hpp"
#include "qsieve/qanalogue.hpp"
#include "qsieve/verifier.hpp"

namespace {

using qsieve::BigInt;
using qsieve::binomial;
using qsieve::catalan;
using qsieve::ConfigurationFamily;
using qsieve::CspReport;
using qsieve::MatchingFamily;
using qsieve::Polynomial;
using qsieve::TriangulationFamily;

// Reports for the configuration family, shared by criteria 2, 3, 4, and 7.
std::map<int, CspReport> g_config_reports;

const CspReport& config_report(int n) {
  auto it = g_config_reports.find(n);
  if (it == g_config_reports.end()) {
    it = g_config_reports.emplace(n, verify_csp(ConfigurationFamily(n))).first;
  }
  return it->second;
}

bool criterion(int index, const char* label, double budget_seconds,
               const std::function<bool()>& body, int* passed) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", index, e.what());
    ok = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_budget = seconds < budget_seconds;
  const bool pass = ok && in_budget;
  std::printf("[%s] %d %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", index, label,
              seconds, in_budget ? "" : ", over budget");
  std::fflush(stdout);
  if (pass) ++*passed;
  return pass;
}

bool check_cardinality() {
  const BigInt expected[] = {1,    2,    5,     14,    42,    132,
                             429,  1430, 4862,  16796, 58786, 208012};
  for (int n = 1; n <= 12; ++n) {
    const auto objects = qsieve::enumerate_configurations(n - 1);
    if (BigInt(objects.size()) != expected[n - 1]) return false;
    if (catalan(n) != expected[n - 1]) return false;
  }
  return true;
}

bool check_main_theorem() {
  for (int n = 2; n <= 12; ++n) {
    const CspReport& report = config_report(n);
    if (!report.csp_holds) return false;
    if (static_cast<int>(report.rows.size()) != n - 1) return false;
    for (const auto& row : report.rows) {
      if (!row.eval || !row.closed_form) return false;
      const BigInt brute(row.fixed);
      if (brute != *row.eval) return false;
      if (brute != qsieve::rhs_closed_form(n, row.k)) return false;
      if (!row.match) return false;
    }
  }
  return true;
}

bool check_spot_values() {
  for (int n = 2; n <= 12; ++n) {
    const CspReport& report = config_report(n);
    const int order = n - 1;
    if (order % 2 == 0) {
      // The half-turn row carries the central-ish binomial value.
      const auto& half = report.rows[order / 2];
      if (BigInt(half.fixed) != binomial(n, (n - 1) / 2)) return false;
    }
    for (int k = 1; k < order; ++k) {
      if (order % k != 0) continue;
      const int d = order / k;
      if (d <= 2) continue;
      if (BigInt(report.rows[k].fixed) != binomial(2 * k, k)) return false;
    }
  }
  return true;
}

bool check_fixed_count_formula() {
  for (int n = 2; n <= 12; ++n) {
    const CspReport& report = config_report(n);
    const int order = n - 1;
    for (int k = 1; k <= order; ++k) {
      if (order % k != 0) continue;
      const auto breakdown = qsieve::fixed_count_formula(n, k);
      const BigInt brute(report.rows[k % order].fixed);
      if (breakdown.total != brute) return false;
    }
  }
  return true;
}

bool check_companion_families() {
  for (int n = 1; n <= 6; ++n) {
    if (!verify_csp(MatchingFamily(n)).csp_holds) return false;
  }
  for (int n = 1; n <= 8; ++n) {  // polygons with 3..10 vertices
    if (!verify_csp(TriangulationFamily(n)).csp_holds) return false;
  }
  return true;
}

bool check_identity_suite() {
  for (int n = 1; n <= 30; ++n) {
    const auto [sum, reference] = qsieve::catalan_sum_identity(n);
    if (sum != reference) return false;
  }
  for (int n = 1; n <= 15; ++n) {
    const Polynomial difference =
        qsieve::q_binomial(2 * n, n) - qsieve::q_binomial(2 * n, n + 1);
    const Polynomial shifted =
        Polynomial::monomial(n) * qsieve::q_catalan(n);
    if (difference != shifted) return false;
  }
  for (int n = 1; n <= 15; ++n) {
    const Polynomial standard = qsieve::q_catalan(n);
    if (standard != qsieve::q_catalan(n, qsieve::CatalanForm::kNPlusOne)) {
      return false;
    }
    if (standard != qsieve::q_catalan(n, qsieve::CatalanForm::kTwoN)) {
      return false;
    }
  }
  return true;
}

bool check_action_properties() {
  // Bijectivity and order: rotating an enumerated family by one step
  // permutes it, and group_order steps come back to the identity.
  {
    const auto objects = qsieve::enumerate_configurations(6);
    auto rotated = objects;
    for (auto& c : rotated) c = qsieve::rotate_configuration(c, 1);
    std::sort(rotated.begin(), rotated.end());
    if (rotated != objects) return false;
    for (const auto& c : objects) {
      if (!qsieve::is_noncrossing(qsieve::rotate_configuration(c, 5))) {
        return false;
      }
      if (qsieve::rotate_configuration(c, 6) != c) return false;
    }
  }
  {
    const auto matchings = qsieve::enumerate_matchings(4);
    for (const auto& m : matchings) {
      const auto moved = qsieve::rotate_matching(m, 3);
      if (!qsieve::is_noncrossing(moved) || !qsieve::is_perfect(moved)) {
        return false;
      }
      if (qsieve::rotate_matching(m, 8) != m) return false;
    }
  }
  // gcd-reduction of fixed sets and Burnside agreement.
  for (int n : {5, 7, 9, 10}) {
    const CspReport& report = config_report(n);
    const int order = report.group_order;
    for (const auto& row : report.rows) {
      const int reduced = static_cast<int>(std::gcd(row.k, order)) % order;
      if (row.fixed != report.rows[reduced].fixed) return false;
    }
    if (!qsieve::burnside_check(report)) return false;
  }
  // Shape of the sieving polynomial.
  for (int n = 1; n <= 15; ++n) {
    const Polynomial c = qsieve::q_catalan(n);
    if (!qsieve::is_palindromic(c)) return false;
    if (!qsieve::has_nonnegative_coeffs(c)) return false;
  }
  // Exact reduction agrees with direct floating evaluation at the same root.
  std::mt19937 rng(20260818);
  std::uniform_int_distribution<int> degree_dist(0, 12);
  std::uniform_int_distribution<int> coeff_dist(-50, 50);
  std::uniform_int_distribution<int> order_dist(1, 24);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> coeffs(degree_dist(rng) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    const Polynomial p(coeffs);
    const int d = order_dist(rng);
    const auto value = qsieve::eval_at_primitive_root(p, d);
    const std::complex<double> direct = qsieve::eval_complex(p, d, 1);
    const std::complex<double> reduced =
        qsieve::eval_complex(value.residue, d, 1);
    if (std::abs(direct - reduced) >= 1e-6) return false;
  }
  return true;
}

}  // namespace

int main() {
  int passed = 0;
  criterion(1, "configuration counts match Catalan numbers, n=1..12", 10.0,
            check_cardinality, &passed);
  criterion(2, "fixed counts = exact evaluations = closed forms, n=2..12",
            60.0, check_main_theorem, &passed);
  criterion(3, "half-turn and d>2 divisor rows match binomial spot values",
            10.0, check_spot_values, &passed);
  criterion(4, "summation formula agrees with brute force for all k | n-1",
            10.0, check_fixed_count_formula, &passed);
  criterion(5, "matchings n=1..6 and polygons gon=3..10 pass verification",
            60.0, check_companion_families, &passed);
  criterion(6, "identity suite: sum, q-difference, three product forms", 10.0,
            check_identity_suite, &passed);
  criterion(7, "property suite: action, gcd, Burnside, shape, float check",
            30.0, check_action_properties, &passed);
  std::printf("acceptance: %d/7 criteria passed\n", passed);
  return passed == 7 ? 0 : 1;
}
