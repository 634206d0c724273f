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

#include "qsieve/qanalogue.hpp"

#include <stdexcept>
#include <vector>

namespace qsieve {

Polynomial q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: negative n");
  return Polynomial(std::vector<BigInt>(n, BigInt(1)));
}

Polynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  Polynomial p = Polynomial::one();
  for (int i = 1; i <= n; ++i) p *= q_integer(i);
  return p;
}

Polynomial q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return Polynomial();
  if (n - k < k) k = n - k;
  // Build [n]! / ([k]! [n-k]!) as prod_{i=1..k} [n-k+i]_q / [i]_q; dividing
  // after each multiplication keeps intermediate degrees minimal and each
  // quotient is a polynomial (Gaussian binomial recurrence).
  Polynomial p = Polynomial::one();
  for (int i = 1; i <= k; ++i) {
    p *= q_integer(n - k + i);
    p = p.exact_div(q_integer(i));
  }
  return p;
}

Polynomial q_catalan(int n, CatalanForm form) {
  if (n < 0) throw std::invalid_argument("q_catalan: negative n");
  switch (form) {
    case CatalanForm::kStandard:
      return q_binomial(2 * n, n).exact_div(q_integer(n + 1));
    case CatalanForm::kNPlusOne:
      if (n < 1) {
        throw std::invalid_argument("q_catalan: this form requires n >= 1");
      }
      return q_binomial(2 * n, n + 1).exact_div(q_integer(n));
    case CatalanForm::kTwoN:
      if (n < 1) {
        throw std::invalid_argument("q_catalan: this form requires n >= 1");
      }
      return (q_integer(2 * n) * q_binomial(2 * n - 1, n))
          .exact_div(q_integer(n) * q_integer(n + 1));
  }
  throw std::invalid_argument("q_catalan: unknown form");
}

}  // namespace qsieve
