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
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace dyckmax {

using BigCount = mpz_class;

// d(r), the number of positive divisors of r, for 1 <= r <= capacity.
class DivisorTable {
 public:
  // Sieve: every k marks its multiples, O(capacity log capacity) marks.
  explicit DivisorTable(std::size_t capacity);

  // Wraps precomputed values; values[r-1] = d(r). Used for fault injection.
  static DivisorTable from_values(std::vector<std::uint32_t> values);

  std::size_t capacity() const noexcept { return d_.size(); }
  // Throws UsageError outside 1..capacity().
  std::uint32_t operator()(std::size_t r) const;

 private:
  DivisorTable() = default;
  std::vector<std::uint32_t> d_;
};

DivisorTable divisors(std::size_t capacity);

// C(a, b); zero when b < 0 or b > a. Requires a >= 0.
BigCount binomial(long a, long b);

// C(m, 0..upto) by the multiplicative recurrence.
std::vector<BigCount> binomial_row(unsigned long m, unsigned long upto);

BigCount catalan(unsigned long n);

// Total number of strict (weak) left-to-right maxima over all Dyck paths of
// semi-length n >= 1:
//   sum_{r=1}^{n} (d(r+s) - d(r)) (C(2n-1, n-r) - C(2n-1, n-r-1))
// with s = 1 (strict) or s = 2 (weak). The table must cover n + s.
BigCount strict_total(unsigned long n);
BigCount weak_total(unsigned long n);
BigCount strict_total(unsigned long n, const DivisorTable& d);
BigCount weak_total(unsigned long n, const DivisorTable& d);

struct ExactCounts {
  BigCount catalan;
  BigCount strict_total;
  BigCount weak_total;
};

// All three counts for semi-length n >= 1 from a single pass over the row
// C(2n-1, .); catalan(n) = 2 C(2n-1, n-1) / (n+1). The table must cover n + 2.
ExactCounts exact_counts(unsigned long n, const DivisorTable& d);

// c_1..c_{n_max} for either kind, sharing one sieve.
std::vector<BigCount> strict_totals(unsigned long n_max);
std::vector<BigCount> weak_totals(unsigned long n_max);

}  // namespace dyckmax
