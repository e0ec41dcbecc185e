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


#pragma once

#include <string>

#include "exact.hpp"

namespace dyckmax {

namespace constants {
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace constants

// Three-term asymptotic means as n -> infinity.
//   strict: sqrt(pi n)/2 - log(n)/4 + (1 - 3 gamma)/4
//   weak:   sqrt(pi n) - log(n) + (5 - 6 gamma)/2
double strict_mean_asympt(double n);
double weak_mean_asympt(double n);

// catalan(n) / 4^n ~ (1 - 9/(8n) + 145/(128 n^2)) / (sqrt(pi) n^{3/2}).
double catalan_asympt(double n);

// strict_total(n) / 4^n ~ 1/(2n) - log(n)/(4 sqrt(pi) n^{3/2}) + (1 - 3 gamma)/(4 sqrt(pi) n^{3/2}).
double total_strict_coeff_asympt(double n);

// f1(t) = sum_{r>=2} e^{-rt} / (1 - e^{-rt}), summed until terms drop below
// 1e-16 of the running total. Throws DomainError for t <= 0.
double f1_direct(double t);
// (gamma - 1 - log t)/t + 3/4 - 13 t / 144
double f1_expansion(double t);

// num / den rounded half-up to `digits` places after the point.
std::string decimal_quotient(const BigCount& num, const BigCount& den, unsigned digits);

struct MeanComparison {
  unsigned long n = 0;
  std::string exact_mean;  // 30 places, from exact integers
  double exact_mean_value = 0.0;
  double asympt_mean = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
};

MeanComparison compare_strict_mean(unsigned long n);
MeanComparison compare_weak_mean(unsigned long n);

}  // namespace dyckmax
