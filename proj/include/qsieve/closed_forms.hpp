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

#ifndef QSIEVE_CLOSED_FORMS_HPP_
#define QSIEVE_CLOSED_FORMS_HPP_

#include <utility>
#include <vector>

#include "qsieve/bigint.hpp"

namespace qsieve {

// Catalan number C_n = binom(2n, n) / (n + 1).
BigInt catalan(int n);

// The configuration count identity: for n >= 1,
//   sum_{a >= 0} binom(n-1, 2a) * C_a * 2^(n-1-2a)  ==  C_n
// (choose the 2a arc endpoints, match them noncrossingly, then mark each
// remaining point or not).  Returns {sum, C_n} so callers can compare the
// two sides; they are always equal.
std::pair<BigInt, BigInt> catalan_sum_identity(int n);

// The integer value of the q-Catalan polynomial C_{d*a/2}(q) at a primitive
// d-th root of unity (the point exp(2*pi*i*a/(d*a)) for a >= 1; the a = 0
// term is the empty product 1).  Case analysis:
//   d*a odd           -> 0  (no such polynomial index; vanishing term)
//   d == 1            -> C_{a/2}   (evaluation at q = 1 is the plain Catalan)
//   a even            -> binom(a, a/2)
//   d == 2 (a odd)    -> binom(a, (a-1)/2)
//   otherwise         -> 0
// Requires a >= 0 and d >= 1.
BigInt half_catalan_at_root(int a, int d);

// One term of the fixed-point count expansion below.
struct FixedCountTerm {
  int a = 0;                 // number of arcs meeting the fundamental window
  BigInt binomial_factor;    // binom(k, a)
  BigInt inner_value;        // half_catalan_at_root(a, d)
  BigInt power_factor;       // 2^(k - a)

  BigInt value() const { return binomial_factor * inner_value * power_factor; }
};

// Fixed points of the rotation by k on configurations over {1, ..., n-1},
// expanded combinatorially:
//   |Fix(rot^k)| = sum_{a=0}^{k} binom(k, a) * half_catalan_at_root(a, d)
//                  * 2^(k - a),   where d = (n - 1) / k.
// Requires n >= 2, k >= 1, and k dividing n - 1 (throws std::invalid_argument
// otherwise); non-divisor shifts are handled by rhs_closed_form via the orbit
// order d = (n-1)/gcd(k, n-1).
struct FixedCountBreakdown {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<FixedCountTerm> terms;
  BigInt total;
};

FixedCountBreakdown fixed_count_formula(int n, int k);

// Closed form for the number of configurations over {1, ..., n-1} fixed by
// the rotation by any integer k (n >= 2).  With N = n - 1, k' = gcd(k, N),
// d = N / k' (the order of the rotation):
//   d == 1 -> C_n
//   d == 2 -> binom(n, (n-1)/2)
//   d >= 3 -> binom(2k', k')
BigInt rhs_closed_form(int n, long long k);

}  // namespace qsieve

#endif  // QSIEVE_CLOSED_FORMS_HPP_
