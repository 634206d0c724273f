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

#include "qsieve/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsieve {

namespace {
const BigInt kZero = 0;
}  // namespace

Polynomial::Polynomial(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, const BigInt& coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  Polynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, BigInt(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + std::complex<double>(it->convert_to<double>(), 0.0);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (BigInt& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  Polynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::invalid_argument("exact_div: division by zero polynomial");
  }
  if (is_zero()) return Polynomial();
  if (degree() < divisor.degree()) {
    throw std::logic_error("exact_div: nonzero remainder (degree too small)");
  }
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1,
                           BigInt(0));
  const std::vector<BigInt>& div = divisor.coeffs_;
  const BigInt& lead = div.back();
  while (rem.size() >= div.size()) {
    // If the original division is exact the running remainder stays a
    // multiple of the divisor, so its leading coefficient is divisible.
    BigInt c = rem.back() / lead;
    if (c * lead != rem.back()) {
      throw std::logic_error("exact_div: nonzero remainder");
    }
    std::size_t shift = rem.size() - div.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < div.size(); ++i) {
      rem[shift + i] -= c * div[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) {
    throw std::logic_error("exact_div: nonzero remainder");
  }
  return Polynomial(std::move(quot));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod_by_monic(
    const Polynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw std::invalid_argument("divmod_by_monic: divisor must be monic");
  }
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot;
  if (rem.size() >= divisor.coeffs_.size()) {
    quot.assign(rem.size() - divisor.coeffs_.size() + 1, BigInt(0));
  }
  const std::vector<BigInt>& div = divisor.coeffs_;
  while (rem.size() >= div.size()) {
    BigInt c = rem.back();
    std::size_t shift = rem.size() - div.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < div.size(); ++i) {
      rem[shift + i] -= c * div[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= degree(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

std::string Polynomial::coeff_list_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << ' ';
    out << coeffs_[i].str();
  }
  return out.str();
}

bool is_palindromic(const Polynomial& p) {
  const std::vector<BigInt>& c = p.coeffs();
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (c[i] != c[n - 1 - i]) return false;
  }
  return true;
}

bool has_nonnegative_coeffs(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigInt& c) { return c >= 0; });
}

}  // namespace qsieve
