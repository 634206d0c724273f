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

#ifndef QSIEVE_CYCLOTOMIC_HPP_
#define QSIEVE_CYCLOTOMIC_HPP_

#include <complex>
#include <string>

#include "qsieve/polynomial.hpp"

namespace qsieve {

// d-th cyclotomic polynomial, exact integer coefficients, computed by
// dividing q^d - 1 by the cyclotomic polynomials of the proper divisors of d.
// Results are memoized (thread-safe).  Throws std::invalid_argument for
// d < 1 and size_limit_error for d > cyclotomic_order_cap().
Polynomial cyclotomic(int d);

int cyclotomic_order_cap();
// Raises or lowers the cap (default 64); returns the previous value.
int set_cyclotomic_order_cap(int cap);

// The value of an integer polynomial at a primitive d-th root of unity,
// represented exactly as the residue mod the d-th cyclotomic polynomial.
// The value is a rational integer iff the residue is a constant.
struct CyclotomicValue {
  int order = 1;         // d
  Polynomial residue;    // p mod cyclotomic(d), degree < phi(d)

  bool is_integer() const { return residue.is_constant(); }
  // Throws std::logic_error unless is_integer().
  BigInt integer_value() const;
  std::string to_string() const;

  bool operator==(const CyclotomicValue&) const = default;
};

// Exact evaluation of p at any primitive d-th root of unity.
CyclotomicValue eval_at_primitive_root(const Polynomial& p, int d);

// Floating-point evaluation of p at exp(2*pi*i*k/d).  Exists only as a
// cross-check for the exact route; never used to decide a verdict.
std::complex<double> eval_complex(const Polynomial& p, int d, long long k);

}  // namespace qsieve

#endif  // QSIEVE_CYCLOTOMIC_HPP_
