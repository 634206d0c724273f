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

#ifndef QSIEVE_QANALOGUE_HPP_
#define QSIEVE_QANALOGUE_HPP_

#include "qsieve/polynomial.hpp"

namespace qsieve {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
Polynomial q_integer(int n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
Polynomial q_factorial(int n);

// Gaussian binomial [n choose k]_q: zero for k < 0 or k > n, else the exact
// quotient [n]_q! / ([k]_q! [n-k]_q!), a polynomial of degree k(n-k) with
// nonnegative coefficients.
Polynomial q_binomial(int n, int k);

// The three equivalent quotient presentations of the q-Catalan number; they
// produce identical polynomials and exist so tests can cross-check the
// division pipeline through independent routes.
enum class CatalanForm {
  kStandard,   // [2n choose n]_q / [n+1]_q
  kNPlusOne,   // [2n choose n+1]_q / [n]_q        (n >= 1)
  kTwoN,       // [2n]_q [2n-1 choose n]_q / ([n]_q [n+1]_q)   (n >= 1)
};

// C_n(q), exact in q.  C_0(q) = C_1(q) = 1.  Degree n(n-1) for n >= 1.
Polynomial q_catalan(int n, CatalanForm form = CatalanForm::kStandard);

}  // namespace qsieve

#endif  // QSIEVE_QANALOGUE_HPP_
