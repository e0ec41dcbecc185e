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


// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "asympt.hpp"
#include "exact.hpp"
#include "genfun.hpp"
#include "paths.hpp"

using namespace dyckmax;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const std::vector<long> kStrict{1, 2, 6, 19, 63, 216, 758, 2705, 9777, 35698};
const std::vector<long> kWeak{1, 3, 9, 29, 98, 341, 1210, 4356, 15860, 58276};

std::string join(const std::vector<BigCount>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

bool equals(const std::vector<BigCount>& got, const std::vector<long>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] != want[i]) return false;
  }
  return true;
}

Outcome fixture_n4() {
  const PathTotals t = totals(4);
  std::ostringstream os;
  os << "paths=" << t.catalan << " strict=" << t.strict_total << " weak=" << t.weak_total;
  return {t.catalan == 14 && t.strict_total == 19 && t.weak_total == 29, os.str()};
}

Outcome series_check(bool weak) {
  const auto& want = weak ? kWeak : kStrict;
  const auto gf = to_z_coeffs(weak ? WTot_simplified(10) : Tot_simplified(10), 10);
  const auto raw = to_z_coeffs(weak ? WTot_raw(10) : Tot_raw(10), 10);
  const auto closed = weak ? weak_totals(10) : strict_totals(10);
  const bool ok = equals(gf, want) && equals(raw, want) && equals(closed, want);
  return {ok, "simplified GF: " + join(gf) + (ok ? " (raw GF and closed form identical)" : "; closed: " + join(closed))};
}

Outcome triple_agreement() {
  const std::size_t n_max = 12;
  const auto s_gf = to_z_coeffs(Tot_simplified(n_max), n_max);
  const auto w_gf = to_z_coeffs(WTot_simplified(n_max), n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const PathTotals t = totals(n);
    const BigCount s_oracle(std::to_string(t.strict_total));
    const BigCount w_oracle(std::to_string(t.weak_total));
    if (s_oracle != s_gf[n - 1] || s_oracle != strict_total(n) || w_oracle != w_gf[n - 1] ||
        w_oracle != weak_total(n)) {
      return {false, "mismatch at n=" + std::to_string(n)};
    }
  }
  return {true, "n=1..12 strict and weak, incl. 208012 paths at n=12"};
}

Outcome raw_vs_simplified() {
  const long s = first_difference(Tot_raw(50), Tot_simplified(50));
  const long w = first_difference(WTot_raw(50), WTot_simplified(50));
  return {s < 0 && w < 0, "first differences: strict " + std::to_string(s) + ", weak " + std::to_string(w) +
                              " (-1 = identical through u^50)"};
}

Outcome divisor_identity() {
  const long k = first_difference(lambert_divisor_series(200), divisor_series(divisors(200), 200));
  return {k < 0, k < 0 ? "identical through u^200" : "differs at u^" + std::to_string(k)};
}

Outcome height_partition() {
  const std::size_t n_max = 12;
  const auto cat_s = [&] {
    Series acc(Var::kU, n_max);
    for (const Jet& j : F_strict_all(n_max)) acc = acc + j.val;
    return to_z_coeffs(acc, n_max);
  }();
  const auto cat_w = [&] {
    Series acc(Var::kU, n_max);
    for (const Jet& j : F_weak_all(n_max)) acc = acc + j.val;
    return to_z_coeffs(acc, n_max);
  }();
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (cat_s[n - 1] != catalan(n) || cat_w[n - 1] != catalan(n)) {
      return {false, "mismatch at n=" + std::to_string(n)};
    }
  }
  return {true, "sum over heights = catalan(n), n=1..12, both constructions"};
}

Outcome means_n200() {
  const MeanComparison s = compare_strict_mean(200);
  const MeanComparison w = compare_weak_mean(200);
  const bool ok = std::abs(s.exact_mean_value - 11.0503) <= 0.0005 && std::abs(s.asympt_mean - 11.0257) <= 0.0005 &&
                  std::abs(w.exact_mean_value - 20.368) <= 0.002 && std::abs(w.asympt_mean - 20.536) <= 0.002;
  char buf[200];
  std::snprintf(buf, sizeof buf, "strict exact %.6f asympt %.6f; weak exact %.6f asympt %.6f", s.exact_mean_value,
                s.asympt_mean, w.exact_mean_value, w.asympt_mean);
  return {ok, buf};
}

Outcome mellin() {
  std::vector<double> errs;
  for (double t : {0.2, 0.1, 0.05, 0.025}) errs.push_back(std::abs(f1_direct(t) - f1_expansion(t)));
  bool ok = true;
  std::string detail = "halving ratios:";
  for (std::size_t i = 1; i < errs.size(); ++i) {
    const double ratio = errs[i - 1] / errs[i];
    ok = ok && ratio >= 3;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3f", ratio);
    detail += buf;
  }
  return {ok, detail};
}

Outcome catalan_n100() {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, 100);
  const double exact = mpq_class(catalan(100), p).get_d();
  const double rel = std::abs(catalan_asympt(100) - exact) / exact;
  char buf[64];
  std::snprintf(buf, sizeof buf, "relative error %.3e", rel);
  return {rel < 1e-5, buf};
}

Outcome half_height() {
  const double n = 1e6;
  const double ratio = strict_mean_asympt(n) / std::sqrt(constants::kPi * n);
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratio %.6f", ratio);
  return {std::abs(ratio - 0.5) <= 0.01, buf};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double time_limit_s;  // 0 = none
  };
  const std::vector<Criterion> criteria{
      {1, "fixture n=4: 14 paths, 19 strict, 29 weak", fixture_n4, 1.0},
      {2, "strict series z^2..z^20", [] { return series_check(false); }, 0},
      {3, "weak series z^2..z^20", [] { return series_check(true); }, 0},
      {4, "oracle = GF = closed form, n <= 12", triple_agreement, 60.0},
      {5, "raw = simplified GFs to order 50", raw_vs_simplified, 0},
      {6, "divisor identity to order 200", divisor_identity, 0},
      {7, "height partition reproduces Catalan, n <= 12", height_partition, 0},
      {8, "asymptotic and exact means at n=200", means_n200, 0},
      {9, "f1 expansion error shrinks >= 3x per halving", mellin, 0},
      {10, "Catalan asymptotic rel. error < 1e-5 at n=100", catalan_n100, 0},
      {11, "half-height law at n=1e6", half_height, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += " (too slow)";
    }
    if (!o.pass) ++failures;
    std::printf("%s  [%2d] %s: %s (%.3fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
