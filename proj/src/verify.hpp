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
#include <string>
#include <vector>

namespace dyckmax {

struct VerifyOptions {
  std::size_t n_max_oracle = 10;  // paths are enumerated for n <= this
  std::size_t order = 50;         // u-order for series identities
  bool inject_divisor_fault = false;  // corrupt one sieve entry (negative test)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // summary on success, first discrepancy on failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const noexcept;
};

// Cross-checks enumeration, generating functions and closed forms.
// Throws ResourceGuardError if n_max_oracle exceeds limit(Guard::kVerifyOracle).
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace dyckmax
