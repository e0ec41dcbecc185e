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

#include "brute_force.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "genfun.hpp"
#include "paths.hpp"

using namespace dyckmax;

TEST_CASE("divisors") {
  const DivisorTable d = divisors(200);
  const std::vector<std::uint32_t> first{1, 2, 2, 3, 2, 4};
  for (std::size_t r = 1; r <= 6; ++r) CHECK(d(r) == first[r - 1]);
  CHECK(d(12) == 6);
  for (unsigned r = 1; r <= 200; ++r) CHECK(d(r) == dyckmax::testing::divisor_count_naive(r));
  CHECK_THROWS_AS(d(0), UsageError);
  CHECK_THROWS_AS(d(201), UsageError);
  CHECK_THROWS_AS(divisors(0), UsageError);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), UsageError);
  for (unsigned m = 0; m <= 40; ++m) {
    const auto row = dyckmax::testing::pascal_row(m);
    const auto fast = binomial_row(m, m + 2);
    for (unsigned k = 0; k <= m; ++k) {
      CHECK(binomial(m, k) == row[k]);
      CHECK(fast[k] == row[k]);
    }
    CHECK(fast[m + 1] == 0);
  }
  // ballot differences are non-negative and equal 1 at r = n
  for (long n = 1; n <= 30; ++n) {
    for (long r = 1; r <= n; ++r) CHECK(binomial(2 * n - 1, n - r) >= binomial(2 * n - 1, n - r - 1));
    CHECK(binomial(2 * n - 1, 0) - binomial(2 * n - 1, -1) == 1);
  }
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(14) == 2674440);
  const auto rec = dyckmax::testing::catalan_recurrence(60);
  for (unsigned n = 0; n <= 60; ++n) CHECK(catalan(n) == rec[n]);
}

TEST_CASE("strict_total and weak_total") {
  CHECK(strict_total(4) == 19);
  CHECK(strict_total(10) == 35698);
  CHECK(weak_total(4) == 29);
  CHECK(weak_total(10) == 58276);
  CHECK_THROWS_AS(strict_total(0), UsageError);
  CHECK_THROWS_AS(strict_total(10, divisors(10)), UsageError);  // needs d(11)

  for (unsigned n = 1; n <= 12; ++n) {
    const PathTotals t = totals(n);
    CHECK(strict_total(n).get_ui() == t.strict_total);
    CHECK(weak_total(n).get_ui() == t.weak_total);
  }
  CHECK(weak_total(4) - strict_total(4) == 10);
}

TEST_CASE("batch totals match single evaluations and the series") {
  const auto s = strict_totals(30);
  const auto w = weak_totals(30);
  const auto gs = to_z_coeffs(Tot_simplified(30), 30);
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(s[n - 1] == strict_total(n));
    CHECK(w[n - 1] == weak_total(n));
    CHECK(s[n - 1] == gs[n - 1]);
    CHECK(s[n - 1] <= w[n - 1]);
  }
}

TEST_CASE("mean strict maxima stays below the largest height") {
  for (unsigned n = 1; n <= 12; ++n) {
    const PathTotals t = totals(n);
    const unsigned max_height = t.by_height.rbegin()->first;
    CHECK(mpq_class(strict_total(n), catalan(n)) <= max_height);
  }
}

TEST_CASE("exact_counts matches the separate sums") {
  const dyckmax::DivisorTable d(302);
  for (unsigned long n = 1; n <= 300; n += 7) {
    const auto c = dyckmax::exact_counts(n, d);
    CHECK(c.catalan == dyckmax::catalan(n));
    CHECK(c.strict_total == dyckmax::strict_total(n, d));
    CHECK(c.weak_total == dyckmax::weak_total(n, d));
  }
  CHECK_THROWS_AS(dyckmax::exact_counts(0, d), dyckmax::UsageError);
  CHECK_THROWS_AS(dyckmax::exact_counts(301, d), dyckmax::UsageError);
}
