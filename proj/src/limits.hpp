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

#include <cstdint>

namespace dyckmax {

enum class Guard {
  kEnumerate,    // semi-length for path enumeration (default 16)
  kListPaths,    // semi-length for listing individual paths (default 14)
  kVerifyOracle, // oracle semi-length inside verification (default 14)
  kSeriesOrder,  // number of series coefficients printed (default 500)
  kTableRows,    // largest n in a table (default 10000)
};

std::uint32_t default_limit(Guard g) noexcept;

// Effective limit: DYCKMAX_MAX_N, when set to a positive integer, replaces
// every default.
std::uint32_t limit(Guard g);

// Throws ResourceGuardError when value > limit(g).
void check_guard(Guard g, std::uint64_t value, const char* what);

}  // namespace dyckmax
