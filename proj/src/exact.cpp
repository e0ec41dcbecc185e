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


#include "exact.hpp"

#include <string>

#include "errors.hpp"

namespace dyckmax {

namespace {

// sum_{r=1}^{n} w(r) (B[n-r] - B[n-r-1]) over the row B = C(2n-1, .),
// regrouped as sum_k B[k] (w(n-k) - w(n-k-1)) with w(0) = 0.
template <typename Weight>
BigCount ballot_sum(unsigned long n, Weight&& w) {
  if (n == 0) throw UsageError("semi-length must be >= 1");
  const unsigned long m = 2 * n - 1;
  BigCount acc = 0;
  BigCount b = 1;  // C(m, k)
  for (unsigned long k = 0; k < n; ++k) {
    const long coef = w(n - k) - (n - k - 1 >= 1 ? w(n - k - 1) : 0);
    if (coef > 0) mpz_addmul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(coef));
    else if (coef < 0) mpz_submul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-coef));
    mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), m - k);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
  }
  return acc;
}

BigCount total_with_shift(unsigned long n, unsigned shift, const DivisorTable& d) {
  if (d.capacity() < n + shift) {
    throw UsageError("divisor table of capacity " + std::to_string(d.capacity()) + " cannot serve n = " +
                     std::to_string(n));
  }
  return ballot_sum(n, [&](unsigned long r) {
    return static_cast<long>(d(r + shift)) - static_cast<long>(d(r));
  });
}

std::vector<BigCount> totals_with_shift(unsigned long n_max, unsigned shift) {
  const DivisorTable d(n_max + shift);
  std::vector<BigCount> out;
  out.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) out.push_back(total_with_shift(n, shift, d));
  return out;
}

}  // namespace

DivisorTable::DivisorTable(std::size_t capacity) : d_(capacity, 0) {
  for (std::size_t k = 1; k <= capacity; ++k) {
    for (std::size_t j = k; j <= capacity; j += k) ++d_[j - 1];
  }
}

DivisorTable DivisorTable::from_values(std::vector<std::uint32_t> values) {
  DivisorTable t;
  t.d_ = std::move(values);
  return t;
}

std::uint32_t DivisorTable::operator()(std::size_t r) const {
  if (r == 0 || r > d_.size()) {
    throw UsageError("d(" + std::to_string(r) + ") outside table of capacity " + std::to_string(d_.size()));
  }
  return d_[r - 1];
}

DivisorTable divisors(std::size_t capacity) {
  if (capacity == 0) throw UsageError("divisor table capacity must be >= 1");
  return DivisorTable(capacity);
}

BigCount binomial(long a, long b) {
  if (a < 0) throw UsageError("binomial: a must be non-negative");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount c = 1;
  for (long k = 0; k < b; ++k) {
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a - k));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return c;
}

std::vector<BigCount> binomial_row(unsigned long m, unsigned long upto) {
  std::vector<BigCount> row;
  row.reserve(upto + 1);
  BigCount c = 1;
  for (unsigned long k = 0; k <= upto; ++k) {
    if (k > m) {
      row.emplace_back(0);
      continue;
    }
    row.push_back(c);
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), m - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
  }
  return row;
}

BigCount catalan(unsigned long n) {
  BigCount c = binomial(static_cast<long>(2 * n), static_cast<long>(n));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
  return c;
}

ExactCounts exact_counts(unsigned long n, const DivisorTable& d) {
  if (n == 0) throw UsageError("semi-length must be >= 1");
  if (d.capacity() < n + 2) {
    throw UsageError("divisor table of capacity " + std::to_string(d.capacity()) + " cannot serve n = " +
                     std::to_string(n));
  }
  auto strict_w = [&](unsigned long r) { return static_cast<long>(d(r + 1)) - static_cast<long>(d(r)); };
  auto weak_w = [&](unsigned long r) { return static_cast<long>(d(r + 2)) - static_cast<long>(d(r)); };
  auto addmul = [](BigCount& acc, const BigCount& b, long coef) {
    if (coef > 0) mpz_addmul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(coef));
    else if (coef < 0) mpz_submul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-coef));
  };
  const unsigned long m = 2 * n - 1;
  ExactCounts out{0, 0, 0};
  BigCount b = 1;  // C(m, k)
  for (unsigned long k = 0; k < n; ++k) {
    const unsigned long r = n - k;
    addmul(out.strict_total, b, strict_w(r) - (r > 1 ? strict_w(r - 1) : 0));
    addmul(out.weak_total, b, weak_w(r) - (r > 1 ? weak_w(r - 1) : 0));
    if (k + 1 < n) {
      mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), m - k);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
    }
  }
  // b = C(2n-1, n-1)
  out.catalan = 2 * b;
  mpz_divexact_ui(out.catalan.get_mpz_t(), out.catalan.get_mpz_t(), n + 1);
  return out;
}

BigCount strict_total(unsigned long n, const DivisorTable& d) { return total_with_shift(n, 1, d); }
BigCount weak_total(unsigned long n, const DivisorTable& d) { return total_with_shift(n, 2, d); }
BigCount strict_total(unsigned long n) { return strict_total(n, DivisorTable(n + 1)); }
BigCount weak_total(unsigned long n) { return weak_total(n, DivisorTable(n + 2)); }

std::vector<BigCount> strict_totals(unsigned long n_max) { return totals_with_shift(n_max, 1); }
std::vector<BigCount> weak_totals(unsigned long n_max) { return totals_with_shift(n_max, 2); }

}  // namespace dyckmax
