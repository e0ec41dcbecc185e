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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckmax {

enum class Step : std::uint8_t { kUp, kDown };

// Balanced u/d word whose running height never goes negative.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);  // throws UsageError if unbalanced

  // "uudd" style; throws UsageError on any other character or invalid word.
  static DyckPath parse(std::string_view word);

  std::size_t semi_length() const noexcept { return steps_.size() / 2; }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::string str() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

struct PathStats {
  std::size_t semi_length = 0;
  unsigned height = 0;
  unsigned strict_ltr = 0;
  unsigned weak_ltr = 0;
  unsigned returns = 0;
  unsigned peaks = 0;
};

// Peaks whose apex is strictly above every earlier apex. Equivalent to the
// "above every earlier lattice point" reading; see strict_maxima_by_points.
unsigned strict_maxima(std::span<const Step> steps);
// Peaks whose apex is strictly above every lattice point before it.
unsigned strict_maxima_by_points(std::span<const Step> steps);
// Peaks whose apex is at least as high as every earlier apex.
unsigned weak_maxima(std::span<const Step> steps);

PathStats stats(std::span<const Step> steps);

inline unsigned strict_maxima(const DyckPath& p) { return strict_maxima(p.steps()); }
inline unsigned weak_maxima(const DyckPath& p) { return weak_maxima(p.steps()); }
inline PathStats stats(const DyckPath& p) { return stats(p.steps()); }

// Yields every Dyck path of semi-length n once, in lexicographic order with
// Up < Down, starting from u^n d^n.
class PathEnumerator {
 public:
  // Throws ResourceGuardError when n exceeds limit(Guard::kEnumerate).
  explicit PathEnumerator(std::size_t n);

  std::optional<DyckPath> next();

  // Buffer-reusing form: advance() moves to the next path (false when done)
  // and current() views it until the following advance().
  bool advance();
  std::span<const Step> current() const noexcept { return buf_; }

 private:
  std::size_t n_;
  std::vector<Step> buf_;
  bool started_ = false;
  bool done_ = false;
};

struct HeightBin {
  std::uint64_t paths = 0;
  std::uint64_t strict = 0;
  std::uint64_t weak = 0;
};

struct PathTotals {
  std::size_t semi_length = 0;
  std::uint64_t catalan = 0;
  std::uint64_t strict_total = 0;
  std::uint64_t weak_total = 0;
  std::map<unsigned, HeightBin> by_height;
};

PathTotals totals(std::size_t n);

}  // namespace dyckmax
