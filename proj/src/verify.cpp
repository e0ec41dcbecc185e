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


#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "exact.hpp"
#include "genfun.hpp"
#include "limits.hpp"
#include "paths.hpp"

namespace dyckmax {

namespace {

std::string mismatch(const char* what, std::size_t n, const std::string& lhs, const std::string& rhs) {
  std::ostringstream os;
  os << what << " differ at n=" << n << ": " << lhs << " vs " << rhs;
  return os.str();
}

CheckResult series_check(std::string name, const Series& a, const Series& b) {
  const long k = first_difference(a, b);
  if (k < 0) {
    return {std::move(name), true, "equal through u^" + std::to_string(std::min(a.order(), b.order()))};
  }
  const auto i = static_cast<std::size_t>(k);
  return {std::move(name), false,
          "first difference at u^" + std::to_string(k) + ": " + a.coeffs()[i].get_str() + " vs " +
              b.coeffs()[i].get_str()};
}

// Sum of jet values (or derivatives) across heights.
Series sum_jets(const std::vector<Jet>& jets, bool derivative, std::size_t order) {
  Series acc(Var::kU, order);
  for (const Jet& j : jets) acc = acc + (derivative ? j.dx : j.val);
  return acc;
}

DivisorTable make_table(std::size_t capacity, bool corrupt) {
  const DivisorTable clean = divisors(capacity);
  if (!corrupt) return clean;
  std::vector<std::uint32_t> values(capacity);
  for (std::size_t r = 1; r <= capacity; ++r) values[r - 1] = clean(r);
  values[(capacity + 1) / 2 - 1] += 1;
  return DivisorTable::from_values(std::move(values));
}

}  // namespace

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  check_guard(Guard::kVerifyOracle, options.n_max_oracle, "oracle semi-length");
  if (options.order < 2) throw UsageError("verification order must be >= 2");
  const std::size_t n_oracle = options.n_max_oracle;
  const std::size_t order = std::max(options.order, n_oracle + 2);

  VerifyReport report;
  auto& out = report.checks;

  const DivisorTable d = make_table(order + 2, options.inject_divisor_fault);

  // Oracle totals.
  std::vector<PathTotals> oracle;
  for (std::size_t n = 0; n <= n_oracle; ++n) oracle.push_back(totals(n));

  {
    CheckResult c{"oracle path count = catalan(n)", true, ""};
    for (std::size_t n = 0; n <= n_oracle && c.passed; ++n) {
      const BigCount cat = catalan(n);
      if (BigCount(std::to_string(oracle[n].catalan)) != cat) {
        c.passed = false;
        c.detail = mismatch("counts", n, std::to_string(oracle[n].catalan), cat.get_str());
      }
    }
    if (c.passed) c.detail = "n <= " + std::to_string(n_oracle);
    out.push_back(std::move(c));
  }

  {
    // Ensures the fixture reading of both maxima definitions.
    CheckResult c{"strict maxima: peak-apex rule = lattice-point rule", true, ""};
    for (std::size_t n = 0; n <= n_oracle && c.passed; ++n) {
      PathEnumerator e(n);
      while (e.advance()) {
        const auto steps = e.current();
        if (strict_maxima(steps) != strict_maxima_by_points(steps)) {
          c.passed = false;
          c.detail = "disagreement on " + DyckPath(std::vector<Step>(steps.begin(), steps.end())).str();
          break;
        }
      }
    }
    if (c.passed) c.detail = "every path with n <= " + std::to_string(n_oracle);
    out.push_back(std::move(c));
  }

  const Series tot = Tot_simplified(order);
  const Series wtot = WTot_simplified(order);
  const std::vector<BigCount> tot_z = to_z_coeffs(tot, order);
  const std::vector<BigCount> wtot_z = to_z_coeffs(wtot, order);

  auto triple = [&](const char* name, const std::vector<BigCount>& gf, bool weak) {
    CheckResult c{name, true, ""};
    for (std::size_t n = 1; n <= order && c.passed; ++n) {
      const BigCount closed = weak ? weak_total(n, d) : strict_total(n, d);
      if (closed != gf[n - 1]) {
        c.passed = false;
        c.detail = mismatch("closed form and generating function", n, closed.get_str(), gf[n - 1].get_str());
      } else if (n <= n_oracle) {
        const std::uint64_t o = weak ? oracle[n].weak_total : oracle[n].strict_total;
        if (BigCount(std::to_string(o)) != closed) {
          c.passed = false;
          c.detail = mismatch("oracle and closed form", n, std::to_string(o), closed.get_str());
        }
      }
    }
    if (c.passed) {
      c.detail = "oracle n <= " + std::to_string(n_oracle) + ", closed form = GF n <= " + std::to_string(order);
    }
    out.push_back(std::move(c));
  };
  triple("strict totals: oracle = GF = closed form", tot_z, false);
  triple("weak totals: oracle = GF = closed form", wtot_z, true);

  out.push_back(series_check("Tot raw = Tot simplified", Tot_raw(order), tot));
  out.push_back(series_check("WTot raw = WTot simplified", WTot_raw(order), wtot));
  out.push_back(series_check("divisor identity: sum u^r/(1-u^r) = sum d(r) u^r", lambert_divisor_series(order),
                             divisor_series(d, order)));

  {
    const std::vector<Jet> fs = F_strict_all(order);
    const std::vector<Jet> fw = F_weak_all(order);
    out.push_back(series_check("strict jets: sum_r F_strict(r).dx = Tot", sum_jets(fs, true, order), tot));
    out.push_back(series_check("weak jets: sum_r F_weak(r).dx = WTot", sum_jets(fw, true, order), wtot));

    CheckResult c{"jet consistency: T_strict(r) = F_strict(r).dx", true, ""};
    const std::size_t r_max = std::min<std::size_t>(8, order);
    for (std::size_t r = 1; r <= r_max && c.passed; ++r) {
      const long k = first_difference(T_strict(static_cast<unsigned>(r), order), fs[r - 1].dx);
      if (k >= 0) {
        c.passed = false;
        c.detail = "r=" + std::to_string(r) + " differs at u^" + std::to_string(k);
      }
    }
    if (c.passed) c.detail = "r <= " + std::to_string(r_max);
    out.push_back(std::move(c));

    auto partition = [&](const char* name, const std::vector<Jet>& jets, bool weak) {
      CheckResult p{name, true, ""};
      const std::vector<BigCount> all = to_z_coeffs(sum_jets(jets, false, order), order);
      for (std::size_t n = 1; n <= order && p.passed; ++n) {
        if (all[n - 1] != catalan(n)) {
          p.passed = false;
          p.detail = mismatch("path counts", n, all[n - 1].get_str(), catalan(n).get_str());
        }
      }
      // Per-height counts and maxima against the oracle histogram.
      for (std::size_t r = 1; r <= n_oracle && p.passed; ++r) {
        const std::vector<BigCount> paths = to_z_coeffs(jets[r - 1].val, n_oracle);
        const std::vector<BigCount> maxima = to_z_coeffs(jets[r - 1].dx, n_oracle);
        for (std::size_t n = 1; n <= n_oracle && p.passed; ++n) {
          HeightBin bin;
          if (auto it = oracle[n].by_height.find(static_cast<unsigned>(r)); it != oracle[n].by_height.end()) {
            bin = it->second;
          }
          const std::uint64_t m = weak ? bin.weak : bin.strict;
          if (BigCount(std::to_string(bin.paths)) != paths[n - 1] ||
              BigCount(std::to_string(m)) != maxima[n - 1]) {
            p.passed = false;
            p.detail = "height " + std::to_string(r) + ": " +
                       mismatch("oracle and GF", n, std::to_string(bin.paths) + "/" + std::to_string(m),
                                paths[n - 1].get_str() + "/" + maxima[n - 1].get_str());
          }
        }
      }
      if (p.passed) {
        p.detail = "catalan n <= " + std::to_string(order) + ", oracle histogram n <= " + std::to_string(n_oracle);
      }
      out.push_back(std::move(p));
    };
    partition("height partition (strict construction)", fs, false);
    partition("height partition (weak construction)", fw, true);
  }

  {
    // Residue rule against direct substitution of u(z).
    const std::size_t n_sub = std::min<std::size_t>(20, order);
    const Series uz = u_of_z(2 * n_sub);
    auto residue = [&](const char* name, const Series& f, const std::vector<BigCount>& via_rule) {
      CheckResult c{name, true, ""};
      const Series direct = compose(f.truncated(n_sub), uz);
      for (std::size_t n = 1; n <= n_sub && c.passed; ++n) {
        const Rational& v = direct.coeffs()[2 * n];
        if (v != Rational(via_rule[n - 1])) {
          c.passed = false;
          c.detail = mismatch("residue rule and substitution", n, via_rule[n - 1].get_str(), v.get_str());
        }
      }
      if (c.passed) c.detail = "n <= " + std::to_string(n_sub);
      out.push_back(std::move(c));
    };
    residue("residue rule = substitution (strict)", tot, tot_z);
    residue("residue rule = substitution (weak)", wtot, wtot_z);
  }

  return report;
}

}  // namespace dyckmax
