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

#include <cstdlib>

#include "brute_force.hpp"
#include "errors.hpp"
#include "paths.hpp"

using namespace dyckmax;

namespace {

std::vector<std::string> enumerate_words(unsigned n) {
  std::vector<std::string> out;
  PathEnumerator e(n);
  while (auto p = e.next()) out.push_back(p->str());
  return out;
}

}  // namespace

TEST_CASE("enumerate: counts and order") {
  CHECK(enumerate_words(0) == std::vector<std::string>{""});
  CHECK(enumerate_words(4).size() == 14);
  CHECK(enumerate_words(3) == std::vector<std::string>{"uuuddd", "uududd", "uuddud", "uduudd", "ududud"});

  const auto cat = dyckmax::testing::catalan_recurrence(14);
  for (unsigned n = 0; n <= 14; ++n) {
    std::uint64_t count = 0;
    PathEnumerator e(n);
    while (e.advance()) ++count;
    CHECK(mpz_class(std::to_string(count)) == cat[n]);
  }
  CHECK(cat[10] == 16796);
}

TEST_CASE("enumerate matches brute-force filtering of all words") {
  for (unsigned n = 0; n <= 8; ++n) CHECK(enumerate_words(n) == dyckmax::testing::dyck_words_brute(n));
}

TEST_CASE("enumerate guard") {
  CHECK_THROWS_AS(PathEnumerator(17), ResourceGuardError);
}

TEST_CASE("DyckPath validation") {
  CHECK_THROWS_AS(DyckPath::parse("du"), UsageError);
  CHECK_THROWS_AS(DyckPath::parse("uud"), UsageError);
  CHECK_THROWS_AS(DyckPath::parse("uxd"), UsageError);
  CHECK(DyckPath::parse("UD").str() == "ud");
}

TEST_CASE("strict maxima") {
  CHECK(strict_maxima(DyckPath::parse("ud")) == 1);
  CHECK(strict_maxima(DyckPath::parse("udud")) == 1);
  // left path of the two height-3 illustrations: maxima at the apexes of heights 2 and 3
  CHECK(strict_maxima(DyckPath::parse("uuduuddudduudd")) == 2);
  CHECK(strict_maxima(DyckPath()) == 0);
}

TEST_CASE("weak maxima") {
  CHECK(weak_maxima(DyckPath::parse("ud")) == 1);
  CHECK(weak_maxima(DyckPath::parse("udud")) == 2);
  CHECK(weak_maxima(DyckPath::parse("uudd")) == 1);
  CHECK(weak_maxima(DyckPath::parse("ududud")) == 3);
  CHECK(weak_maxima(DyckPath()) == 0);
}

TEST_CASE("stats") {
  const PathStats s = stats(DyckPath::parse("uduudduudd"));
  CHECK(s.semi_length == 5);
  CHECK(s.height == 2);
  CHECK(s.returns == 3);
  CHECK(s.peaks == 3);
  CHECK(s.strict_ltr == 2);
  CHECK(s.weak_ltr == 3);
}

TEST_CASE("totals") {
  const PathTotals t4 = totals(4);
  CHECK(t4.catalan == 14);
  CHECK(t4.strict_total == 19);
  CHECK(t4.weak_total == 29);
  CHECK(t4.weak_total - t4.strict_total == 10);
  REQUIRE(t4.by_height.size() == 4);
  CHECK(t4.by_height.at(1).paths == 1);
  CHECK(t4.by_height.at(2).paths == 7);
  CHECK(t4.by_height.at(3).paths == 5);
  CHECK(t4.by_height.at(4).paths == 1);

  const PathTotals t1 = totals(1);
  CHECK((t1.catalan == 1 && t1.strict_total == 1 && t1.weak_total == 1));

  const PathTotals t6 = totals(6);
  CHECK((t6.catalan == 132 && t6.strict_total == 216 && t6.weak_total == 341));

  const PathTotals t0 = totals(0);
  CHECK((t0.catalan == 1 && t0.strict_total == 0 && t0.weak_total == 0));
}

TEST_CASE("per-path invariants") {
  for (unsigned n = 1; n <= 10; ++n) {
    PathEnumerator e(n);
    while (e.advance()) {
      const auto steps = e.current();
      const PathStats s = stats(steps);
      REQUIRE(s.strict_ltr >= 1);
      REQUIRE(s.strict_ltr <= s.weak_ltr);
      REQUIRE(s.weak_ltr <= s.peaks);
      REQUIRE(s.strict_ltr <= s.height);
      REQUIRE(strict_maxima(steps) == s.strict_ltr);
      REQUIRE(weak_maxima(steps) == s.weak_ltr);
      REQUIRE(strict_maxima_by_points(steps) == s.strict_ltr);
    }
  }
}

TEST_CASE("weak-but-not-strict maxima at n=4") {
  // The 10 extra weak maxima are exactly the peaks equal to an earlier maximum.
  unsigned extra = 0;
  for (const auto& w : dyckmax::testing::dyck_words_brute(4)) {
    const DyckPath p = DyckPath::parse(w);
    extra += weak_maxima(p) - strict_maxima(p);
  }
  CHECK(extra == 10);
}

TEST_CASE("DYCKMAX_MAX_N overrides the enumeration guard") {
  ::setenv("DYCKMAX_MAX_N", "3", 1);
  CHECK_THROWS_AS(PathEnumerator(4), ResourceGuardError);
  ::setenv("DYCKMAX_MAX_N", "bogus", 1);
  CHECK_THROWS_AS(PathEnumerator(2), UsageError);
  ::unsetenv("DYCKMAX_MAX_N");
  CHECK_NOTHROW(PathEnumerator(16));
}
