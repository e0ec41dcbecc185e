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


#include "series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace dyckmax {

namespace {

Var join(Var a, Var b, const char* op) {
  if (a == Var::kFree) return b;
  if (b == Var::kFree || a == b) return a;
  throw UsageError(std::string(op) + ": variable mismatch (" + std::string(var_name(a)) +
                   " vs " + std::string(var_name(b)) + ")");
}

}  // namespace

std::string_view var_name(Var v) noexcept {
  switch (v) {
    case Var::kZ: return "z";
    case Var::kU: return "u";
    case Var::kFree: return "x-free";
  }
  return "?";
}

Series::Series(Var var, std::size_t order) : var_(var), coeffs_(order + 1) {}

Series::Series(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("Series: at least one coefficient is required");
}

Series Series::constant(Var var, std::size_t order, const Rational& c) {
  Series s(var, order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(Var var, std::size_t order, const Rational& c, std::size_t exponent) {
  Series s(var, order);
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

Series Series::geometric(Var var, std::size_t order, std::size_t step) {
  if (step == 0) throw NonInvertibleError("geometric: 1 - var^0 has zero constant term");
  Series s(var, order);
  for (std::size_t k = 0; k <= order; k += step) s.coeffs_[k] = 1;
  return s;
}

const Rational& Series::operator[](std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw TruncationError("coefficient " + std::to_string(k) + " requested from a series known to order " +
                          std::to_string(order()));
  }
  return coeffs_[k];
}

std::size_t Series::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return k;
  }
  return coeffs_.size();
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw TruncationError("cannot extend a series known to order " + std::to_string(this->order()) +
                          " to order " + std::to_string(order));
  }
  return Series(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::with_var(Var var) const {
  Series s = *this;
  s.var_ = var;
  return s;
}

Series operator-(const Series& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return Series(a.var(), std::move(c));
}

Series add(const Series& a, const Series& b) {
  const Var v = join(a.var(), b.var(), "add");
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
  return Series(v, std::move(c));
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return add(a, -b); }

Series mul(const Series& a, const Series& b) {
  const Var v = join(a.var(), b.var(), "mul");
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  Rational t;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(bc[j]) == 0) continue;
      t = ac[i] * bc[j];
      c[i + j] += t;
    }
  }
  return Series(v, std::move(c));
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series operator*(const Rational& k, const Series& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return Series(a.var(), std::move(c));
}

Series invert(const Series& a) {
  const auto ac = a.coeffs();
  if (sgn(ac[0]) == 0) throw NonInvertibleError("invert: constant term is zero");
  const std::size_t n = a.order();
  // Nonzero tail of a, so sparse denominators such as 1 - u^k cost O(n).
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k <= n; ++k) {
    if (sgn(ac[k]) != 0) support.push_back(k);
  }
  const Rational inv0 = 1 / ac[0];
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  Rational acc;
  Rational t;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (const std::size_t k : support) {
      if (k > m) break;
      if (sgn(b[m - k]) == 0) continue;
      t = ac[k] * b[m - k];
      acc += t;
    }
    b[m] = -acc * inv0;
  }
  return Series(a.var(), std::move(b));
}

Series sqrt_one_plus(const Series& a) {
  const auto ac = a.coeffs();
  if (sgn(ac[0]) != 0) throw UsageError("sqrt_one_plus: argument must have zero constant term");
  const std::size_t n = a.order();
  std::vector<Rational> s(n + 1);
  s[0] = 1;
  // 2 s_m + sum_{k=1}^{m-1} s_k s_{m-k} = a_m
  Rational acc;
  Rational t;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = ac[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (sgn(s[k]) == 0 || sgn(s[m - k]) == 0) continue;
      t = s[k] * s[m - k];
      acc -= t;
    }
    s[m] = acc / 2;
  }
  return Series(a.var(), std::move(s));
}

Series compose(const Series& f, const Series& g) {
  if (sgn(g.coeffs()[0]) != 0) {
    throw DivergentCompositionError("compose: inner series has nonzero constant term");
  }
  // f is known through v^N; unknown terms enter at g^{N+1}, i.e. at exponent
  // (N+1) * val(g).
  const std::size_t val = g.valuation();
  std::size_t order = g.order();
  if (val <= g.order()) order = std::min(order, (f.order() + 1) * val - 1);
  const Series inner = g.truncated(order);
  const auto fc = f.coeffs();
  Series acc = Series::constant(g.var(), order, fc[f.order()]);
  for (std::size_t k = f.order(); k-- > 0;) {
    acc = acc * inner;
    std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += fc[k];
    acc = Series(g.var(), std::move(c));
  }
  return acc;
}

Series shift(const Series& a, std::size_t k) {
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t i = 0; i + k <= a.order(); ++i) c[i + k] = a.coeffs()[i];
  return Series(a.var(), std::move(c));
}

Series pow(const Series& a, unsigned exponent) {
  Series result = Series::constant(a.var(), a.order(), 1);
  Series base = a;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

long first_difference(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (a.coeffs()[k] != b.coeffs()[k]) return static_cast<long>(k);
  }
  return -1;
}

bool agree(const Series& a, const Series& b) {
  return (a.var() == b.var() || a.var() == Var::kFree || b.var() == Var::kFree) &&
         first_difference(a, b) < 0;
}

std::string to_string(const Series& a, std::size_t max_terms) {
  std::ostringstream os;
  const std::string_view v = a.var() == Var::kFree ? "" : var_name(a.var());
  std::size_t written = 0;
  for (std::size_t k = 0; k <= a.order() && written < max_terms; ++k) {
    const Rational& c = a.coeffs()[k];
    if (sgn(c) == 0) continue;
    if (written > 0) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << '-';
    const Rational mag = abs(c);
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) os << v;
    if (k > 1) os << '^' << k;
    ++written;
  }
  if (written == 0) os << '0';
  os << " + O(" << (v.empty() ? "1" : v) << '^' << a.order() + 1 << ')';
  return os.str();
}

Jet jet_const(const Series& s) { return {s, Series(s.var(), s.order())}; }

Jet jet_tracker(const Series& s) { return {s, s}; }

Jet jet_mul(const Jet& a, const Jet& b) {
  return {a.val * b.val, a.dx * b.val + a.val * b.dx};
}

Jet jet_invert(const Jet& a) {
  Series inv = invert(a.val);
  Series d = -(a.dx * inv * inv);
  return {std::move(inv), std::move(d)};
}

Jet jet_add(const Jet& a, const Jet& b) { return {a.val + b.val, a.dx + b.dx}; }

Jet jet_sub(const Jet& a, const Jet& b) { return {a.val - b.val, a.dx - b.dx}; }

}  // namespace dyckmax
