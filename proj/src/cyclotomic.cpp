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

#include "qsieve/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qsieve/errors.hpp"

namespace qsieve {

namespace {

std::atomic<int> g_order_cap{64};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, Polynomial>& cache() {
  static std::map<int, Polynomial> c;
  return c;
}

}  // namespace

int cyclotomic_order_cap() { return g_order_cap.load(); }

int set_cyclotomic_order_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("cyclotomic order cap must be >= 1");
  return g_order_cap.exchange(cap);
}

Polynomial cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: order must be >= 1");
  if (d > cyclotomic_order_cap()) {
    std::ostringstream msg;
    msg << "cyclotomic: order " << d << " exceeds cap "
        << cyclotomic_order_cap();
    throw size_limit_error(msg.str());
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache().find(d);
  if (it != cache().end()) return it->second;
  // Fill the divisor lattice bottom-up: q^e - 1 is the product of the
  // cyclotomic polynomials of all divisors of e, so dividing out the proper
  // divisors (already cached, since they divide d too) leaves order e.
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache().count(e)) continue;
    Polynomial numerator =
        Polynomial::monomial(e) - Polynomial::one();
    Polynomial denominator = Polynomial::one();
    for (int f = 1; f < e; ++f) {
      if (e % f == 0) denominator *= cache().at(f);
    }
    cache().emplace(e, numerator.exact_div(denominator));
  }
  return cache().at(d);
}

BigInt CyclotomicValue::integer_value() const {
  if (!is_integer()) {
    throw std::logic_error(
        "CyclotomicValue: residue is not a rational integer");
  }
  return residue.coeff(0);
}

std::string CyclotomicValue::to_string() const {
  if (is_integer()) return residue.coeff(0).str();
  std::ostringstream out;
  out << "(" << residue.to_string() << " at primitive root of order " << order
      << ")";
  return out.str();
}

CyclotomicValue eval_at_primitive_root(const Polynomial& p, int d) {
  return CyclotomicValue{d, p.divmod_by_monic(cyclotomic(d)).second};
}

std::complex<double> eval_complex(const Polynomial& p, int d, long long k) {
  if (d < 1) throw std::invalid_argument("eval_complex: order must be >= 1");
  const double angle =
      2.0 * std::acos(-1.0) * static_cast<double>(k) / static_cast<double>(d);
  return p.evaluate(std::polar(1.0, angle));
}

}  // namespace qsieve
