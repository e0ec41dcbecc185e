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

#include "errors.hpp"
#include "verify.hpp"

using namespace dyckmax;

TEST_CASE("default verification passes") {
  const VerifyReport r = run_verification({});
  CHECK(r.all_passed());
  CHECK(r.checks.size() >= 10);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("small oracle run") {
  VerifyOptions o;
  o.n_max_oracle = 4;
  o.order = 12;
  CHECK(run_verification(o).all_passed());
}

TEST_CASE("injected divisor fault is caught") {
  VerifyOptions o;
  o.inject_divisor_fault = true;
  const VerifyReport r = run_verification(o);
  CHECK_FALSE(r.all_passed());
  bool divisor_failed = false;
  for (const auto& c : r.checks) {
    if (c.name.rfind("divisor identity", 0) == 0) divisor_failed = !c.passed;
  }
  CHECK(divisor_failed);
}

TEST_CASE("guards") {
  VerifyOptions o;
  o.n_max_oracle = 15;
  CHECK_THROWS_AS(run_verification(o), ResourceGuardError);
  o.n_max_oracle = 3;
  o.order = 1;
  CHECK_THROWS_AS(run_verification(o), UsageError);
}
