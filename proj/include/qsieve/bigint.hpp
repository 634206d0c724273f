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

#ifndef QSIEVE_BIGINT_HPP_
#define QSIEVE_BIGINT_HPP_

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsieve {

// Exact arbitrary-precision integer; every count and coefficient in this
// library is a BigInt so no result ever sees floating point or overflow.
using BigInt = boost::multiprecision::cpp_int;

// binom(n, k), 0 when k < 0 or k > n.  Multiplicative form: each partial
// product n(n-1)...(n-i+1)/i! is itself a binomial coefficient, so the
// division in every step is exact.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (n - k < k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << e;
}

}  // namespace qsieve

#endif  // QSIEVE_BIGINT_HPP_
