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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asympt.hpp"
#include "errors.hpp"
#include "exact.hpp"

using namespace dyckmax;

namespace {

// catalan(n) / 4^n from exact integers
double catalan_over_4n(unsigned long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, n);
  return mpq_class(catalan(n), p).get_d();
}

double strict_over_4n(unsigned long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, n);
  return mpq_class(strict_total(n), p).get_d();
}

}  // namespace

TEST_CASE("strict_mean_asympt") {
  CHECK(std::abs(strict_mean_asympt(200) - 11.0257) < 1e-4);
  const MeanComparison m = compare_strict_mean(200);
  CHECK(std::abs(m.exact_mean_value - 11.0503) < 1e-4);
  CHECK(m.exact_mean.substr(0, 8) == "11.05025");
  CHECK(std::abs(strict_mean_asympt(1e6) / std::sqrt(constants::kPi * 1e6) - 0.5) < 0.01);
  CHECK_THROWS_AS(strict_mean_asympt(0), DomainError);
}

TEST_CASE("weak_mean_asympt") {
  CHECK(std::abs(weak_mean_asympt(200) - 20.536) < 1e-3);
  const MeanComparison m = compare_weak_mean(200);
  CHECK(std::abs(m.exact_mean_value - 20.368) < 1e-3);
  for (double n = 10; n <= 1e6; n *= 1.5) CHECK(weak_mean_asympt(n) < 2 * strict_mean_asympt(n));
}

TEST_CASE("catalan_asympt") {
  auto rel = [](unsigned long n) { return std::abs(catalan_asympt(n) - catalan_over_4n(n)) / catalan_over_4n(n); };
  CHECK(rel(100) < 1e-5);
  // The omitted term -1155/(1024 n^3) dominates the error: 1.142e-3 at n = 10.
  CHECK(rel(10) > 1.1e-3);
  CHECK(rel(10) < 1.2e-3);
  CHECK(rel(200) < rel(50));
}

TEST_CASE("total_strict_coeff_asympt") {
  const double n = 200;
  // Quotient of the two printed expansions keeps the 9/(8n) cross term.
  const double q = total_strict_coeff_asympt(n) / catalan_asympt(n);
  CHECK(std::abs(q - 11.08770) < 1e-4);
  CHECK(std::abs(q - strict_mean_asympt(n)) < 1.0 / std::sqrt(n));
  const double exact = strict_over_4n(200);
  CHECK(std::abs(total_strict_coeff_asympt(n) - exact) / exact < 0.01);
  CHECK(std::abs(1e8 * total_strict_coeff_asympt(1e8) - 0.5) < 1e-3);
}

TEST_CASE("f1") {
  // Reference value: the full sum at 40 digits.
  CHECK(f1_direct(5.0) == doctest::Approx(4.5709968559547e-5).epsilon(1e-12));
  double previous = 0;
  for (double t : {0.2, 0.1, 0.05, 0.025}) {
    const double err = std::abs(f1_direct(t) - f1_expansion(t));
    if (previous > 0) CHECK(previous / err >= 3);
    previous = err;
  }
  CHECK(f1_expansion(1e-8) > f1_expansion(1e-4));
  CHECK(f1_expansion(1e-8) * 1e-8 == doctest::Approx(constants::kEulerGamma - 1 - std::log(1e-8)).epsilon(1e-6));
  CHECK_THROWS_AS(f1_direct(0), DomainError);
  CHECK_THROWS_AS(f1_expansion(-1), DomainError);
}

TEST_CASE("decimal_quotient") {
  CHECK(decimal_quotient(1, 3, 4) == "0.3333");
  CHECK(decimal_quotient(2, 3, 4) == "0.6667");
  CHECK(decimal_quotient(7, 2, 0) == "4");
  CHECK(decimal_quotient(-1, 8, 2) == "-0.13");
  CHECK(decimal_quotient(19, 14, 6) == "1.357143");
  CHECK_THROWS_AS(decimal_quotient(1, 0, 3), DomainError);
}

TEST_CASE("exact mean gap shrinks") {
  CHECK(compare_strict_mean(400).abs_gap < compare_strict_mean(100).abs_gap);
  CHECK(compare_weak_mean(500).abs_gap < compare_weak_mean(200).abs_gap);
}
