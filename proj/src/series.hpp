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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dyckmax {

// Exact rational; gmpxx keeps every arithmetic result in lowest terms with a
// positive denominator.
using Rational = mpq_class;

// Formal variable a series is expressed in. kFree marks series that carry no
// variable (constants); they combine with either tag.
enum class Var { kZ, kU, kFree };

std::string_view var_name(Var v) noexcept;

// Truncated power series c_0 + c_1 v + ... + c_N v^N with exact rational
// coefficients. Coefficients above order() are unknown, not zero.
class Series {
 public:
  Series(Var var, std::size_t order);  // zero, known to `order`
  Series(Var var, std::vector<Rational> coeffs);

  static Series constant(Var var, std::size_t order, const Rational& c);
  // c * var^exponent
  static Series monomial(Var var, std::size_t order, const Rational& c, std::size_t exponent);
  // 1 / (1 - var^step) = 1 + var^step + var^{2 step} + ...
  static Series geometric(Var var, std::size_t order, std::size_t step);

  Var var() const noexcept { return var_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  // Throws TruncationError for k > order().
  const Rational& operator[](std::size_t k) const;

  // Index of the first nonzero coefficient, or order()+1 when none is known.
  std::size_t valuation() const noexcept;

  Series truncated(std::size_t order) const;
  Series with_var(Var var) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  Var var_;
  std::vector<Rational> coeffs_;
};

Series operator-(const Series& a);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

// b with a*b = 1; a[0] must be nonzero.
Series invert(const Series& a);
// s with s^2 = 1 + a and s[0] = 1; a[0] must be zero.
Series sqrt_one_plus(const Series& a);
// f(g(.)), tagged with g's variable; g[0] must be zero.
Series compose(const Series& f, const Series& g);
// a * var^k; the order is unchanged.
Series shift(const Series& a, std::size_t k);
Series pow(const Series& a, unsigned exponent);

// True when a and b are equal on the exponents both know.
bool agree(const Series& a, const Series& b);
// First exponent where a and b differ, or -1.
long first_difference(const Series& a, const Series& b);

std::string to_string(const Series& a, std::size_t max_terms = 12);

// First-order jet in a tracker x: the value of an expression at x = 1 and its
// x-derivative there.
struct Jet {
  Series val;
  Series dx;
};

Jet jet_const(const Series& s);    // s
Jet jet_tracker(const Series& s);  // x * s
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_invert(const Jet& a);
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);

inline Jet operator*(const Jet& a, const Jet& b) { return jet_mul(a, b); }
inline Jet operator+(const Jet& a, const Jet& b) { return jet_add(a, b); }
inline Jet operator-(const Jet& a, const Jet& b) { return jet_sub(a, b); }

}  // namespace dyckmax
