// Copyright 2026 The dyckmax Authors
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


#include "asympt.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace dyckmax {

using constants::kEulerGamma;
using constants::kPi;

namespace {

void require_positive(double n, const char* what) {
  if (!(n >= 1.0)) throw DomainError(std::string(what) + ": n must be >= 1");
}

MeanComparison compare(unsigned long n, const BigCount& total, double asympt) {
  const BigCount cat = catalan(n);
  MeanComparison m;
  m.n = n;
  m.exact_mean = decimal_quotient(total, cat, 30);
  m.exact_mean_value = mpq_class(total, cat).get_d();
  m.asympt_mean = asympt;
  m.abs_gap = std::abs(m.exact_mean_value - asympt);
  m.rel_gap = m.abs_gap / m.exact_mean_value;
  return m;
}

}  // namespace

double strict_mean_asympt(double n) {
  require_positive(n, "strict_mean_asympt");
  return std::sqrt(kPi * n) / 2 - std::log(n) / 4 + (1 - 3 * kEulerGamma) / 4;
}

double weak_mean_asympt(double n) {
  require_positive(n, "weak_mean_asympt");
  return std::sqrt(kPi * n) - std::log(n) + (5 - 6 * kEulerGamma) / 2;
}

double catalan_asympt(double n) {
  require_positive(n, "catalan_asympt");
  return (1 - 9 / (8 * n) + 145 / (128 * n * n)) / (std::sqrt(kPi) * std::pow(n, 1.5));
}

double total_strict_coeff_asympt(double n) {
  require_positive(n, "total_strict_coeff_asympt");
  const double denom = 4 * std::sqrt(kPi) * std::pow(n, 1.5);
  return 1 / (2 * n) - std::log(n) / denom + (1 - 3 * kEulerGamma) / denom;
}

double f1_direct(double t) {
  if (!(t > 0)) throw DomainError("f1_direct: t must be > 0");
  double sum = 0;
  for (long r = 2;; ++r) {
    const double q = std::exp(-static_cast<double>(r) * t);
    // -expm1 keeps 1 - e^{-rt} accurate for small rt.
    const double term = q / -std::expm1(-static_cast<double>(r) * t);
    sum += term;
    if (term <= 1e-16 * sum || term == 0) break;
  }
  return sum;
}

double f1_expansion(double t) {
  if (!(t > 0)) throw DomainError("f1_expansion: t must be > 0");
  return (kEulerGamma - 1 - std::log(t)) / t + 0.75 - 13 * t / 144;
}

std::string decimal_quotient(const BigCount& num, const BigCount& den, unsigned digits) {
  if (den == 0) throw DomainError("decimal_quotient: zero denominator");
  BigCount scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const bool negative = (sgn(num) < 0) != (sgn(den) < 0);
  BigCount a = abs(num) * scale;
  const BigCount b = abs(den);
  BigCount q = (2 * a + b) / (2 * b);  // round half up
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, 1, '.');
  }
  if (negative && q != 0) s.insert(0, 1, '-');
  return s;
}

MeanComparison compare_strict_mean(unsigned long n) {
  return compare(n, strict_total(n), strict_mean_asympt(static_cast<double>(n)));
}

MeanComparison compare_weak_mean(unsigned long n) {
  return compare(n, weak_total(n), weak_mean_asympt(static_cast<double>(n)));
}

}  // namespace dyckmax
