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


#include "genfun.hpp"

#include "errors.hpp"

namespace dyckmax {

namespace {

Series one(std::size_t order) { return Series::constant(Var::kU, order, 1); }

Series u_pow(std::size_t k, std::size_t order) { return Series::monomial(Var::kU, order, 1, k); }

// 1 - u^k
Series one_minus_u_pow(std::size_t k, std::size_t order) { return one(order) - u_pow(k, order); }

// 1 / (1 - u^k)
Series geom(std::size_t k, std::size_t order) { return Series::geometric(Var::kU, order, k); }

Series one_plus_u(std::size_t order) { return one(order) + u_pow(1, order); }

}  // namespace

ZForm z_power(unsigned k, std::size_t order) {
  return {k % 2 == 1, pow(z_squared(order), k / 2)};
}

ZForm operator*(const ZForm& a, const ZForm& b) {
  Series body = a.body * b.body;
  if (a.odd && b.odd) body = body * z_squared(body.order());
  return {a.odd != b.odd, std::move(body)};
}

Series even_part(const ZForm& f) {
  if (f.odd) throw UsageError("expected an even power of z");
  return f.body;
}

Series to_z_series(const ZForm& f, std::size_t z_order) {
  Series s = compose(f.body, u_of_z(z_order));
  if (f.odd) s = shift(s, 1);
  return s;
}

Series z_squared(std::size_t order) {
  return u_pow(1, order) * invert(pow(one_plus_u(order), 2));
}

Series sqrt_discriminant(std::size_t order) {
  return (one(order) - u_pow(1, order)) * invert(one_plus_u(order));
}

Series lambda1(std::size_t order) { return invert(one_plus_u(order)); }

Series lambda2(std::size_t order) { return u_pow(1, order) * invert(one_plus_u(order)); }

Series A_h(unsigned h, std::size_t order) {
  return one_plus_u(order) * one_minus_u_pow(h + 1, order) * geom(h + 2, order);
}

Series A_h_lambda(unsigned h, std::size_t order) {
  const Series l1 = lambda1(order);
  const Series l2 = lambda2(order);
  return (pow(l1, h + 1) - pow(l2, h + 1)) * invert(pow(l1, h + 2) - pow(l2, h + 2));
}

ZForm C_h(unsigned h, std::size_t order) {
  const Series l1 = lambda1(order);
  const Series l2 = lambda2(order);
  const Series rest = sqrt_discriminant(order) * invert(pow(l1, h + 2) - pow(l2, h + 2));
  return z_power(h, order) * ZForm{false, rest};
}

Jet F_strict(unsigned r, std::size_t order) {
  if (r == 0) throw UsageError("F_strict: height must be >= 1");
  Jet acc = jet_tracker(even_part(z_power(r, order) * C_h(r, order)));
  const Jet unit = jet_const(one(order));
  for (unsigned h = 1; h < r; ++h) acc = acc * (unit + jet_tracker(A_h(h, order) - one(order)));
  return acc;
}

std::vector<Jet> F_strict_all(std::size_t order) {
  std::vector<Jet> out;
  out.reserve(order);
  const Jet unit = jet_const(one(order));
  Jet prod = unit;  // prod_{h<r} (1 + x (A(h) - 1))
  for (unsigned r = 1; r <= order; ++r) {
    if (r > 1) prod = prod * (unit + jet_tracker(A_h(r - 1, order) - one(order)));
    out.push_back(jet_tracker(even_part(z_power(r, order) * C_h(r, order))) * prod);
  }
  return out;
}

Series T_strict(unsigned r, std::size_t order) {
  if (r == 0) throw UsageError("T_strict: height must be >= 1");
  const Series om = one_minus_u_pow(1, order);
  const Series lead = om * om * u_pow(r, order) * one_plus_u(order) * geom(r + 1, order) * geom(r + 2, order);
  Series bracket = Series::constant(Var::kU, order, r);
  const Series inv_1pu = invert(one_plus_u(order));
  for (unsigned i = 1; i < r; ++i) {
    bracket = bracket - one_minus_u_pow(i + 2, order) * inv_1pu * geom(i + 1, order);
  }
  return lead * bracket;
}

Series Tot_raw(std::size_t order) {
  Series acc(Var::kU, order);
  for (unsigned r = 1; r <= order; ++r) acc = acc + T_strict(r, order);
  return acc;
}

Series Tot_simplified(std::size_t order) {
  Series acc(Var::kU, order);
  const Series om = one_minus_u_pow(1, order);
  for (unsigned r = 1; r <= order; ++r) acc = acc + om * shift(geom(r + 1, order), r);
  return acc;
}

Series D_h(unsigned h, std::size_t order) {
  if (h == 0) throw UsageError("D_h: height must be >= 1");
  return z_squared(order) * A_h(h - 1, order);
}

Jet E_h(unsigned h, std::size_t order) {
  return jet_invert(jet_const(one(order)) - jet_tracker(D_h(h, order)));
}

Jet F_weak(unsigned r, std::size_t order) {
  if (r == 0) throw UsageError("F_weak: height must be >= 1");
  Jet acc = jet_tracker(even_part(z_power(r + 1, order) * C_h(r - 1, order)));
  for (unsigned h = 1; h <= r; ++h) acc = acc * E_h(h, order);
  return acc;
}

std::vector<Jet> F_weak_all(std::size_t order) {
  std::vector<Jet> out;
  out.reserve(order);
  Jet prod = jet_const(one(order));  // prod_{h<=r} E(h)
  for (unsigned r = 1; r <= order; ++r) {
    prod = prod * E_h(r, order);
    out.push_back(jet_tracker(even_part(z_power(r + 1, order) * C_h(r - 1, order))) * prod);
  }
  return out;
}

Series WTot_raw(std::size_t order) {
  const Series om = one_minus_u_pow(1, order);
  const Series om2 = one_minus_u_pow(2, order);
  const Series opu = one_plus_u(order);
  Series acc(Var::kU, order);
  Series inner(Var::kU, order);  // sum_{i=1}^{r} (1-u^{1+i}) / (1-u^{2+i})
  for (unsigned r = 1; r <= order; ++r) {
    inner = inner + one_minus_u_pow(r + 1, order) * geom(r + 2, order);
    const Series lead = om * u_pow(r, order) * om2 * geom(r + 1, order) * geom(r + 2, order);
    const Series bracket = Series::constant(Var::kU, order, Rational(1) - r) + opu * inner;
    acc = acc + lead * bracket;
  }
  return acc;
}

Series WTot_simplified(std::size_t order) {
  Series acc(Var::kU, order);
  const Series om2 = one_minus_u_pow(2, order);
  for (unsigned r = 1; r <= order; ++r) acc = acc + om2 * shift(geom(r + 2, order), r);
  return acc;
}

std::vector<BigCount> to_z_coeffs(const Series& f, std::size_t n_max) {
  if (f.order() < n_max) {
    throw TruncationError("to_z_coeffs: series known to u^" + std::to_string(f.order()) + ", need u^" +
                          std::to_string(n_max));
  }
  std::vector<BigCount> out;
  out.reserve(n_max);
  const auto fc = f.coeffs();
  Rational acc;
  Rational t;
  for (std::size_t n = 1; n <= n_max; ++n) {
    // [u^k] (1-u)(1+u)^{2n-1} = C(2n-1, k) - C(2n-1, k-1)
    const std::vector<BigCount> row = binomial_row(2 * n - 1, n);
    acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (sgn(fc[n - k]) == 0) continue;
      BigCount w = row[k];
      if (k > 0) w -= row[k - 1];
      t = fc[n - k] * Rational(w);
      acc += t;
    }
    if (acc.get_den() != 1) {
      throw UsageError("to_z_coeffs: coefficient of z^" + std::to_string(2 * n) + " is not an integer (" +
                       acc.get_str() + ")");
    }
    out.push_back(acc.get_num());
  }
  return out;
}

Series u_of_z(std::size_t z_order) {
  if (z_order < 2) throw UsageError("u_of_z: order must be >= 2");
  const std::size_t work = z_order + 2;
  const Series root = sqrt_one_plus(Series::monomial(Var::kZ, work, -4, 2));
  const Series num = Series::constant(Var::kZ, work, 1) - Series::monomial(Var::kZ, work, 2, 2) - root;
  // num = 2z^4 + ..., so dividing by 2z^2 is an exact downward shift by 2.
  std::vector<Rational> c(z_order + 1);
  for (std::size_t k = 0; k <= z_order; ++k) c[k] = num.coeffs()[k + 2] / 2;
  return Series(Var::kZ, std::move(c));
}

Series lambert_divisor_series(std::size_t order) {
  Series acc(Var::kU, order);
  for (std::size_t r = 1; r <= order; ++r) acc = acc + shift(geom(r, order), r);
  return acc;
}

Series divisor_series(const DivisorTable& d, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t r = 1; r <= order; ++r) c[r] = d(r);
  return Series(Var::kU, std::move(c));
}

}  // namespace dyckmax
