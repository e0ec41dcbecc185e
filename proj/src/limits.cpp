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


#include "limits.hpp"

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace dyckmax {

std::uint32_t default_limit(Guard g) noexcept {
  switch (g) {
    case Guard::kEnumerate: return 16;
    case Guard::kListPaths: return 14;
    case Guard::kVerifyOracle: return 14;
    case Guard::kSeriesOrder: return 500;
    case Guard::kTableRows: return 10000;
  }
  return 0;
}

std::uint32_t limit(Guard g) {
  if (const char* env = std::getenv("DYCKMAX_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 && v <= 0xffffffffUL) {
      return static_cast<std::uint32_t>(v);
    }
    throw UsageError("DYCKMAX_MAX_N must be a positive integer, got '" + std::string(env) + "'");
  }
  return default_limit(g);
}

void check_guard(Guard g, std::uint64_t value, const char* what) {
  const std::uint32_t cap = limit(g);
  if (value > cap) {
    throw ResourceGuardError(std::string(what) + " " + std::to_string(value) +
                             " exceeds limit " + std::to_string(cap) +
                             " (set DYCKMAX_MAX_N to override)");
  }
}

}  // namespace dyckmax
