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
#include <vector>

#include "exact.hpp"
#include "series.hpp"

namespace dyckmax {

// Generating functions of left-to-right maxima, held in the variable u with
// z^2 = u / (1+u)^2. Under this change sqrt(1-4z^2) = (1-u)/(1+u),
// lambda1 = 1/(1+u) and lambda2 = u/(1+u), so every object is rational in u.
// Sums over the path height r stop at r = N: each summand is O(u^r).

// z^odd * body(u). Odd powers of z are kept as a parity bit because only
// z^2 has a rational image in u.
struct ZForm {
  bool odd = false;
  Series body;
};

ZForm z_power(unsigned k, std::size_t order);
ZForm operator*(const ZForm& a, const ZForm& b);
// The u-series of an even form; throws UsageError when odd.
Series even_part(const ZForm& f);
// Expansion in z through z^{z_order}.
Series to_z_series(const ZForm& f, std::size_t z_order);

Series z_squared(std::size_t order);       // u/(1+u)^2
Series sqrt_discriminant(std::size_t order);  // (1-u)/(1+u)
Series lambda1(std::size_t order);
Series lambda2(std::size_t order);

// Dyck paths of height <= h: (1+u)(1-u^{h+1})/(1-u^{h+2}).
Series A_h(unsigned h, std::size_t order);
// Same quantity from (l1^{h+1} - l2^{h+1}) / (l1^{h+2} - l2^{h+2}).
Series A_h_lambda(unsigned h, std::size_t order);
// Paths of height <= h that end at height h:
// z^h sqrt(1-4z^2) / (l1^{h+2} - l2^{h+2}).
ZForm C_h(unsigned h, std::size_t order);

// z^r x C(r) prod_{h=1}^{r-1} (1 + x (A(h) - 1)) at x = 1: val counts paths of
// height exactly r, dx counts their strict maxima.
Jet F_strict(unsigned r, std::size_t order);
// F_strict(1..order), built with one running product.
std::vector<Jet> F_strict_all(std::size_t order);

// Closed u-form of F_strict(r).dx:
// (1-u)^2 u^r (1+u) / ((1-u^{1+r})(1-u^{2+r})) * (r - sum_{i<r} 1/A(i)).
Series T_strict(unsigned r, std::size_t order);

Series Tot_raw(std::size_t order);         // sum_r T_strict(r)
Series Tot_simplified(std::size_t order);  // sum_r (1-u) u^r / (1-u^{1+r})

Series D_h(unsigned h, std::size_t order);  // z^2 A(h-1): one return, height <= h
Jet E_h(unsigned h, std::size_t order);     // 1 / (1 - x D(h))

// z^{r+1} x C(r-1) prod_{h=1}^{r} E(h) at x = 1.
Jet F_weak(unsigned r, std::size_t order);
std::vector<Jet> F_weak_all(std::size_t order);

// sum_r (1-u) u^r (1-u^2) / ((1-u^{1+r})(1-u^{2+r}))
//       * (1 - r + (1+u) sum_{i=1}^{r} (1-u^{1+i}) / (1-u^{2+i}))
Series WTot_raw(std::size_t order);
Series WTot_simplified(std::size_t order);  // sum_r (1-u^2) u^r / (1-u^{2+r})

// c_n = [z^{2n}] f for n = 1..n_max via
//   [z^{2n}] f = [u^n] (1-u) (1+u)^{2n-1} f(u).
// Throws TruncationError if f is not known to u^{n_max}, UsageError if a
// coefficient is not an integer.
std::vector<BigCount> to_z_coeffs(const Series& f, std::size_t n_max);

// u = (1 - 2z^2 - sqrt(1-4z^2)) / (2z^2) through z^{z_order}.
Series u_of_z(std::size_t z_order);

// sum_{r=1}^{N} u^r / (1 - u^r) and sum_{r=1}^{N} d(r) u^r.
Series lambert_divisor_series(std::size_t order);
Series divisor_series(const DivisorTable& d, std::size_t order);

}  // namespace dyckmax
