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

#ifndef QSIEVE_POLYNOMIAL_HPP_
#define QSIEVE_POLYNOMIAL_HPP_

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qsieve/bigint.hpp"

namespace qsieve {

// Dense univariate polynomial in q with exact integer coefficients, stored
// in ascending degree order with no trailing zero (canonical form: the zero
// polynomial is the empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const BigInt& constant);
  explicit Polynomial(std::vector<BigInt> coeffs);

  // coeff * q^degree.
  static Polynomial monomial(int degree, const BigInt& coeff = BigInt(1));
  static Polynomial one() { return Polynomial(BigInt(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return degree() <= 0; }

  // Coefficient of q^i; zero outside the stored range (any i is valid).
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  std::complex<double> evaluate(std::complex<double> z) const;
  // Convenience: sum of coefficients.
  BigInt at_one() const { return evaluate(BigInt(1)); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  bool operator==(const Polynomial& rhs) const = default;

  // Exact division over the integers: returns quotient iff divisor * quotient
  // equals *this, otherwise throws std::logic_error.  Throws
  // std::invalid_argument on a zero divisor.
  Polynomial exact_div(const Polynomial& divisor) const;

  // Long division by a monic divisor: returns {quotient, remainder} with
  // deg(remainder) < deg(divisor).  Monic divisors keep every step exact over
  // the integers.  Throws std::invalid_argument unless the divisor's leading
  // coefficient is 1.
  std::pair<Polynomial, Polynomial> divmod_by_monic(
      const Polynomial& divisor) const;

  // Human-readable form, ascending powers: "1 - q + q^2"; "0" when zero.
  std::string to_string() const;
  // Space-separated ascending coefficient list: "1 0 1"; "0" when zero.
  std::string coeff_list_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

// True iff coeff(i) == coeff(deg - i) for all i (zero counts as palindromic).
bool is_palindromic(const Polynomial& p);

// True iff every coefficient is >= 0.
bool has_nonnegative_coeffs(const Polynomial& p);

}  // namespace qsieve

#endif  // QSIEVE_POLYNOMIAL_HPP_
