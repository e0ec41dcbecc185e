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

#include <stdexcept>
#include <string>

namespace dyckmax {

// Bad arguments: mismatched variable tags, out-of-range parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard (path enumeration, table length, series order) was exceeded.
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Inversion of a series whose constant term is zero.
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Substitution of a series with a nonzero constant term.
class DivergentCompositionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument outside the domain of a real function (e.g. t <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A coefficient was requested beyond the order a series is known to.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace dyckmax
