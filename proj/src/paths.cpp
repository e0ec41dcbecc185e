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


#include "paths.hpp"

#include <algorithm>

#include "errors.hpp"
#include "limits.hpp"

namespace dyckmax {

namespace {

bool is_dyck(std::span<const Step> steps) {
  long h = 0;
  for (const Step s : steps) {
    h += s == Step::kUp ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool is_peak(std::span<const Step> steps, std::size_t i) {
  return steps[i] == Step::kUp && i + 1 < steps.size() && steps[i + 1] == Step::kDown;
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (!is_dyck(steps_)) throw UsageError("not a Dyck path: " + str());
}

DyckPath DyckPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (const char c : word) {
    if (c == 'u' || c == 'U') steps.push_back(Step::kUp);
    else if (c == 'd' || c == 'D') steps.push_back(Step::kDown);
    else throw UsageError("invalid step '" + std::string(1, c) + "' in path word");
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (const Step st : steps_) s.push_back(st == Step::kUp ? 'u' : 'd');
  return s;
}

unsigned strict_maxima(std::span<const Step> steps) {
  unsigned count = 0;
  unsigned h = 0;
  unsigned best_apex = 0;  // every apex is >= 1
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::kUp) {
      ++h;
      if (is_peak(steps, i) && h > best_apex) {
        ++count;
        best_apex = h;
      }
    } else {
      --h;
    }
  }
  return count;
}

unsigned strict_maxima_by_points(std::span<const Step> steps) {
  unsigned count = 0;
  unsigned h = 0;
  unsigned highest_point = 0;  // max height over lattice points seen so far
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const unsigned before = h;
    h = steps[i] == Step::kUp ? h + 1 : h - 1;
    if (is_peak(steps, i) && h > std::max(highest_point, before)) ++count;
    highest_point = std::max(highest_point, before);
  }
  return count;
}

unsigned weak_maxima(std::span<const Step> steps) {
  unsigned count = 0;
  unsigned h = 0;
  unsigned best_apex = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::kUp) {
      ++h;
      if (is_peak(steps, i) && h >= best_apex) {
        ++count;
        best_apex = h;
      }
    } else {
      --h;
    }
  }
  return count;
}

PathStats stats(std::span<const Step> steps) {
  PathStats st;
  st.semi_length = steps.size() / 2;
  unsigned h = 0;
  unsigned best_apex = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::kUp) {
      ++h;
      st.height = std::max(st.height, h);
      if (is_peak(steps, i)) {
        ++st.peaks;
        if (h > best_apex) ++st.strict_ltr;
        if (h >= best_apex) {
          ++st.weak_ltr;
          best_apex = h;
        }
      }
    } else {
      --h;
      if (h == 0) ++st.returns;
    }
  }
  return st;
}

PathEnumerator::PathEnumerator(std::size_t n) : n_(n) {
  check_guard(Guard::kEnumerate, n, "semi-length");
  buf_.assign(n, Step::kUp);
  buf_.resize(2 * n, Step::kDown);
}

bool PathEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // Rightmost Up that can become Down; the suffix then becomes the smallest
  // completion: all remaining Ups, then Downs.
  const std::size_t len = buf_.size();
  long suffix_height = 0;   // downs minus ups over buf_[i..len)
  std::size_t suffix_ups = 0;
  for (std::size_t i = len; i-- > 0;) {
    if (buf_[i] == Step::kUp) {
      ++suffix_ups;
      --suffix_height;
    } else {
      ++suffix_height;
    }
    // Height before position i is suffix_height; the path must stay >= 0
    // after turning this Up into a Down.
    if (buf_[i] != Step::kUp || suffix_height < 1) continue;
    const std::size_t need = suffix_ups;
    if (need > len - i - 1) continue;
    buf_[i] = Step::kDown;
    const auto mid = buf_.begin() + static_cast<std::ptrdiff_t>(i + 1 + need);
    std::fill(buf_.begin() + static_cast<std::ptrdiff_t>(i + 1), mid, Step::kUp);
    std::fill(mid, buf_.end(), Step::kDown);
    return true;
  }
  done_ = true;
  return false;
}

std::optional<DyckPath> PathEnumerator::next() {
  if (!advance()) return std::nullopt;
  return DyckPath(std::vector<Step>(buf_.begin(), buf_.end()));
}

PathTotals totals(std::size_t n) {
  PathTotals t;
  t.semi_length = n;
  PathEnumerator e(n);
  while (e.advance()) {
    const PathStats st = stats(e.current());
    ++t.catalan;
    t.strict_total += st.strict_ltr;
    t.weak_total += st.weak_ltr;
    HeightBin& bin = t.by_height[st.height];
    ++bin.paths;
    bin.strict += st.strict_ltr;
    bin.weak += st.weak_ltr;
  }
  return t;
}

}  // namespace dyckmax
