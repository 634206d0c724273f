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

#include "qsieve/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace qsieve {

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2LL * n, n) / (n + 1);
}

std::pair<BigInt, BigInt> catalan_sum_identity(int n) {
  if (n < 1) throw std::invalid_argument("catalan_sum_identity: n must be >= 1");
  const int m = n - 1;
  BigInt sum = 0;
  for (int a = 0; 2 * a <= m; ++a) {
    sum += binomial(m, 2 * a) * catalan(a) * pow2(m - 2 * a);
  }
  return {sum, catalan(n)};
}

BigInt half_catalan_at_root(int a, int d) {
  if (a < 0) throw std::invalid_argument("half_catalan_at_root: a must be >= 0");
  if (d < 1) throw std::invalid_argument("half_catalan_at_root: d must be >= 1");
  if ((static_cast<long long>(d) * a) % 2 == 1) return 0;
  if (d == 1) return catalan(a / 2);
  if (a % 2 == 0) return binomial(a, a / 2);
  if (d == 2) return binomial(a, (a - 1) / 2);
  return 0;
}

FixedCountBreakdown fixed_count_formula(int n, int k) {
  if (n < 2) throw std::invalid_argument("fixed_count_formula: n must be >= 2");
  if (k < 1 || (n - 1) % k != 0) {
    throw std::invalid_argument(
        "fixed_count_formula: k must be a positive divisor of n - 1");
  }
  FixedCountBreakdown breakdown;
  breakdown.n = n;
  breakdown.k = k;
  breakdown.d = (n - 1) / k;
  breakdown.total = 0;
  for (int a = 0; a <= k; ++a) {
    FixedCountTerm term;
    term.a = a;
    term.binomial_factor = binomial(k, a);
    term.inner_value = half_catalan_at_root(a, breakdown.d);
    term.power_factor = pow2(k - a);
    breakdown.total += term.value();
    breakdown.terms.push_back(std::move(term));
  }
  return breakdown;
}

BigInt rhs_closed_form(int n, long long k) {
  if (n < 2) throw std::invalid_argument("rhs_closed_form: n must be >= 2");
  const long long order = n - 1;
  long long kk = k % order;
  if (kk < 0) kk += order;
  const long long k_prime = std::gcd(kk, order);  // gcd(0, N) = N
  const long long d = order / k_prime;
  if (d == 1) return catalan(n);
  if (d == 2) return binomial(n, (n - 1) / 2);
  return binomial(2 * k_prime, k_prime);
}

}  // namespace qsieve
