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

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"

using qsieve::BigInt;
using qsieve::Polynomial;
using qsieve_test::poly_from;
using qsieve_test::random_poly;

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial(BigInt(0)).is_zero());
  CHECK(poly_from({1, 2, 0, 0}) == poly_from({1, 2}));
  CHECK(poly_from({0, 0, 0}).is_zero());
  CHECK(poly_from({1, 2}).degree() == 1);
  CHECK(Polynomial(BigInt(7)).degree() == 0);
}

TEST_CASE("coefficient access is total") {
  const Polynomial p = poly_from({3, 0, -5});
  CHECK(p.coeff(0) == 3);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -5);
  CHECK(p.coeff(3) == 0);
  CHECK(p.coeff(-1) == 0);
  CHECK(p.coeffs().size() == 3);
}

TEST_CASE("monomial") {
  CHECK(Polynomial::monomial(0) == Polynomial::one());
  CHECK(Polynomial::monomial(3) == poly_from({0, 0, 0, 1}));
  CHECK(Polynomial::monomial(2, BigInt(-4)) == poly_from({0, 0, -4}));
  CHECK(Polynomial::monomial(5, BigInt(0)).is_zero());
  CHECK_THROWS_AS(Polynomial::monomial(-1), std::invalid_argument);
}

TEST_CASE("ring operations") {
  const Polynomial a = poly_from({1, 2, 3});
  const Polynomial b = poly_from({-1, 1});
  CHECK(a + b == poly_from({0, 3, 3}));
  CHECK(a - a == Polynomial());
  CHECK(-b == poly_from({1, -1}));
  CHECK(a * b == poly_from({-1, -1, -1, 3}));
  CHECK(a * Polynomial() == Polynomial());
  CHECK(a * Polynomial::one() == a);
  // Cancellation in the leading coefficient must re-trim.
  CHECK((poly_from({0, 1}) + poly_from({1, -1})).degree() == 0);
}

TEST_CASE("evaluation") {
  const Polynomial p = poly_from({1, -2, 1});  // (q-1)^2
  CHECK(p.evaluate(BigInt(1)) == 0);
  CHECK(p.evaluate(BigInt(4)) == 9);
  CHECK(p.evaluate(BigInt(-1)) == 4);
  CHECK(p.at_one() == 0);
  CHECK(Polynomial().evaluate(BigInt(100)) == 0);
  const std::complex<double> z = p.evaluate(std::complex<double>(0.0, 1.0));
  CHECK(std::abs(z - std::complex<double>(0.0, -2.0)) < 1e-12);
}

TEST_CASE("exact division round-trips random products") {
  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng, 12, 9);
    Polynomial b = random_poly(rng, 8, 9);
    if (b.is_zero()) b = Polynomial::one();
    CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("exact division rejects non-multiples") {
  CHECK_THROWS_AS(poly_from({1, 1, 1}).exact_div(poly_from({1, 1})),
                  std::logic_error);
  CHECK_THROWS_AS(poly_from({1}).exact_div(poly_from({1, 1})),
                  std::logic_error);
  CHECK_THROWS_AS(poly_from({3, 3}).exact_div(poly_from({2})),
                  std::logic_error);
  CHECK_THROWS_AS(poly_from({1}).exact_div(Polynomial()),
                  std::invalid_argument);
  CHECK(Polynomial().exact_div(poly_from({1, 1})) == Polynomial());
}

TEST_CASE("division by a monic polynomial recomposes") {
  std::mt19937 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 14, 20);
    Polynomial divisor = random_poly(rng, 5, 6);
    // Force a monic divisor of degree >= 1.
    std::vector<BigInt> coeffs = divisor.coeffs();
    coeffs.resize(2 + (trial % 5), BigInt(0));
    coeffs.back() = 1;
    divisor = Polynomial(coeffs);
    const auto [quotient, remainder] = p.divmod_by_monic(divisor);
    CHECK(quotient * divisor + remainder == p);
    CHECK(remainder.degree() < divisor.degree());
  }
}

TEST_CASE("division by a non-monic divisor is rejected") {
  CHECK_THROWS_AS(poly_from({1, 1}).divmod_by_monic(poly_from({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_from({1, 1}).divmod_by_monic(Polynomial()),
                  std::invalid_argument);
}

TEST_CASE("string forms") {
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(BigInt(-7)).to_string() == "-7");
  CHECK(poly_from({1, -1, 1}).to_string() == "1 - q + q^2");
  CHECK(poly_from({0, -1}).to_string() == "-q");
  CHECK(poly_from({0, 2, 0, 1}).to_string() == "2q + q^3");
  CHECK(poly_from({1, 0, 1}).coeff_list_string() == "1 0 1");
  CHECK(Polynomial().coeff_list_string() == "0");
}

TEST_CASE("palindromicity and nonnegativity helpers") {
  CHECK(qsieve::is_palindromic(poly_from({1, 0, 1})));
  CHECK(qsieve::is_palindromic(poly_from({2, 5, 5, 2})));
  CHECK_FALSE(qsieve::is_palindromic(poly_from({1, 2})));
  CHECK(qsieve::is_palindromic(Polynomial()));
  CHECK(qsieve::has_nonnegative_coeffs(poly_from({0, 3, 1})));
  CHECK_FALSE(qsieve::has_nonnegative_coeffs(poly_from({1, -1})));
}
