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


#include "dyckmax/dyckmax.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <thread>
#include <algorithm>
#include <vector>

#include "asympt.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "genfun.hpp"
#include "limits.hpp"
#include "paths.hpp"
#include "verify.hpp"

struct dm_bigseq {
  std::vector<std::string> values;
};

struct dm_table {
  struct Row {
    std::uint32_t n;
    std::string catalan, strict_total, weak_total, strict_mean, weak_mean;
    double strict_asympt, weak_asympt;
  };
  std::vector<Row> rows;
};

struct dm_path_iter {
  explicit dm_path_iter(std::size_t n) : e(n) {}
  dyckmax::PathEnumerator e;
  std::string word;
};

struct dm_totals {
  dyckmax::PathTotals t;
  std::vector<dm_height_bin> bins;
};

struct dm_report {
  dyckmax::VerifyReport r;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
dm_status guarded(Fn&& fn) noexcept {
  g_last_error.clear();
  try {
    fn();
    return DM_OK;
  } catch (const dyckmax::ResourceGuardError& e) {
    g_last_error = e.what();
    return DM_ERR_RESOURCE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DM_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DM_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return DM_ERR_USAGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DM_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DM_ERR_INTERNAL;
  }
}

dm_status null_arg(const char* what) noexcept {
  g_last_error = std::string("null argument: ") + what;
  return DM_ERR_USAGE;
}

dyckmax::Guard to_guard(dm_guard g) {
  switch (g) {
    case DM_GUARD_ENUMERATE: return dyckmax::Guard::kEnumerate;
    case DM_GUARD_LIST_PATHS: return dyckmax::Guard::kListPaths;
    case DM_GUARD_VERIFY_ORACLE: return dyckmax::Guard::kVerifyOracle;
    case DM_GUARD_SERIES_ORDER: return dyckmax::Guard::kSeriesOrder;
    case DM_GUARD_TABLE_ROWS: return dyckmax::Guard::kTableRows;
  }
  throw dyckmax::UsageError("unknown guard");
}

void check_kind(dm_kind kind) {
  if (kind != DM_STRICT && kind != DM_WEAK) throw dyckmax::UsageError("kind must be strict or weak");
}

void fill_info(const dyckmax::PathStats& st, const char* word, dm_path_info* out) {
  out->steps = word;
  out->semi_length = static_cast<std::uint32_t>(st.semi_length);
  out->height = st.height;
  out->strict_ltr = st.strict_ltr;
  out->weak_ltr = st.weak_ltr;
  out->returns = st.returns;
  out->peaks = st.peaks;
}

}  // namespace

extern "C" {

const char* dm_version(void) { return "1.0.0"; }

const char* dm_last_error(void) { return g_last_error.c_str(); }

dm_status dm_limit(dm_guard guard, uint32_t* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dyckmax::limit(to_guard(guard)); });
}

dm_status dm_series(dm_kind kind, uint32_t order, dm_route route, dm_bigseq** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_kind(kind);
    if (order == 0) throw dyckmax::UsageError("order must be >= 1");
    std::vector<dyckmax::BigCount> coeffs;
    if (route == DM_ROUTE_EXACT) {
      coeffs = kind == DM_STRICT ? dyckmax::strict_totals(order) : dyckmax::weak_totals(order);
    } else if (route == DM_ROUTE_GENFUN) {
      const dyckmax::Series f =
          kind == DM_STRICT ? dyckmax::Tot_simplified(order) : dyckmax::WTot_simplified(order);
      coeffs = dyckmax::to_z_coeffs(f, order);
    } else {
      throw dyckmax::UsageError("unknown route");
    }
    auto seq = std::make_unique<dm_bigseq>();
    seq->values.reserve(coeffs.size());
    for (const auto& c : coeffs) seq->values.push_back(c.get_str());
    *out = seq.release();
  });
}

size_t dm_bigseq_size(const dm_bigseq* seq) { return seq == nullptr ? 0 : seq->values.size(); }

const char* dm_bigseq_get(const dm_bigseq* seq, size_t index) {
  if (seq == nullptr || index >= seq->values.size()) return nullptr;
  return seq->values[index].c_str();
}

void dm_bigseq_free(dm_bigseq* seq) { delete seq; }

dm_status dm_table_build(uint32_t n_max, uint32_t mean_digits, dm_table** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (n_max == 0) throw dyckmax::UsageError("n_max must be >= 1");
    dyckmax::check_guard(dyckmax::Guard::kTableRows, n_max, "table size");
    const dyckmax::DivisorTable d(n_max + 2);
    auto table = std::make_unique<dm_table>();
    table->rows.resize(n_max);
    // Rows are independent; threads take n = first, first + stride, ...
    auto fill = [&](std::uint32_t first, std::uint32_t stride) {
      for (std::uint32_t n = first; n <= n_max; n += stride) {
        const dyckmax::ExactCounts c = dyckmax::exact_counts(n, d);
        table->rows[n - 1] = {n,
                              c.catalan.get_str(),
                              c.strict_total.get_str(),
                              c.weak_total.get_str(),
                              dyckmax::decimal_quotient(c.strict_total, c.catalan, mean_digits),
                              dyckmax::decimal_quotient(c.weak_total, c.catalan, mean_digits),
                              dyckmax::strict_mean_asympt(n),
                              dyckmax::weak_mean_asympt(n)};
      }
    };
    const std::uint32_t workers =
        n_max < 256 ? 1U : std::max(1U, std::min(16U, std::thread::hardware_concurrency()));
    if (workers == 1) {
      fill(1, 1);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (std::uint32_t w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            try {
              fill(w + 1, workers);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
      }
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    *out = table.release();
  });
}

size_t dm_table_size(const dm_table* table) { return table == nullptr ? 0 : table->rows.size(); }

dm_status dm_table_get(const dm_table* table, size_t index, dm_record* out) {
  if (table == nullptr) return null_arg("table");
  if (out == nullptr) return null_arg("out");
  if (index >= table->rows.size()) {
    g_last_error = "table index out of range";
    return DM_ERR_USAGE;
  }
  const auto& r = table->rows[index];
  *out = {r.n, r.catalan.c_str(), r.strict_total.c_str(), r.weak_total.c_str(), r.strict_mean.c_str(),
          r.weak_mean.c_str(), r.strict_asympt, r.weak_asympt};
  return DM_OK;
}

void dm_table_free(dm_table* table) { delete table; }

dm_status dm_paths_open(uint32_t n, dm_path_iter** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new dm_path_iter(n); });
}

dm_status dm_paths_next(dm_path_iter* it, dm_path_info* out) {
  if (it == nullptr) return null_arg("iterator");
  if (out == nullptr) return null_arg("out");
  bool more = false;
  const dm_status st = guarded([&] {
    more = it->e.advance();
    if (!more) return;
    const auto steps = it->e.current();
    it->word.resize(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) it->word[i] = steps[i] == dyckmax::Step::kUp ? 'u' : 'd';
    fill_info(dyckmax::stats(steps), it->word.c_str(), out);
  });
  if (st != DM_OK) return st;
  return more ? DM_OK : DM_DONE;
}

void dm_paths_close(dm_path_iter* it) { delete it; }

dm_status dm_path_stats(const char* word, dm_path_info* out) {
  if (word == nullptr) return null_arg("word");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { fill_info(dyckmax::stats(dyckmax::DyckPath::parse(word)), word, out); });
}

dm_status dm_paths_totals(uint32_t n, dm_totals** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto t = std::make_unique<dm_totals>();
    t->t = dyckmax::totals(n);
    for (const auto& [h, bin] : t->t.by_height) t->bins.push_back({h, bin.paths, bin.strict, bin.weak});
    *out = t.release();
  });
}

uint64_t dm_totals_catalan(const dm_totals* t) { return t == nullptr ? 0 : t->t.catalan; }
uint64_t dm_totals_strict(const dm_totals* t) { return t == nullptr ? 0 : t->t.strict_total; }
uint64_t dm_totals_weak(const dm_totals* t) { return t == nullptr ? 0 : t->t.weak_total; }
size_t dm_totals_heights(const dm_totals* t) { return t == nullptr ? 0 : t->bins.size(); }

dm_status dm_totals_height(const dm_totals* t, size_t index, dm_height_bin* out) {
  if (t == nullptr) return null_arg("totals");
  if (out == nullptr) return null_arg("out");
  if (index >= t->bins.size()) {
    g_last_error = "height index out of range";
    return DM_ERR_USAGE;
  }
  *out = t->bins[index];
  return DM_OK;
}

void dm_totals_free(dm_totals* t) { delete t; }

dm_status dm_mean_asympt(dm_kind kind, double n, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    check_kind(kind);
    *out = kind == DM_STRICT ? dyckmax::strict_mean_asympt(n) : dyckmax::weak_mean_asympt(n);
  });
}

dm_status dm_catalan_asympt(double n, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dyckmax::catalan_asympt(n); });
}

dm_status dm_f1_direct(double t, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dyckmax::f1_direct(t); });
}

dm_status dm_f1_expansion(double t, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dyckmax::f1_expansion(t); });
}

dm_status dm_exact_mean(dm_kind kind, uint32_t n, uint32_t digits, char* buf, size_t buf_len) {
  if (buf == nullptr) return null_arg("buf");
  return guarded([&] {
    check_kind(kind);
    if (n == 0) throw dyckmax::UsageError("n must be >= 1");
    const dyckmax::BigCount total = kind == DM_STRICT ? dyckmax::strict_total(n) : dyckmax::weak_total(n);
    const std::string s = dyckmax::decimal_quotient(total, dyckmax::catalan(n), digits);
    if (s.size() + 1 > buf_len) {
      throw dyckmax::UsageError("buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

void dm_verify_options_init(dm_verify_options* opts) {
  if (opts == nullptr) return;
  const dyckmax::VerifyOptions defaults;
  opts->n_max_oracle = static_cast<uint32_t>(defaults.n_max_oracle);
  opts->order = static_cast<uint32_t>(defaults.order);
  opts->inject_divisor_fault = 0;
}

dm_status dm_verify(const dm_verify_options* opts, dm_report** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    dyckmax::VerifyOptions o;
    if (opts != nullptr) {
      o.n_max_oracle = opts->n_max_oracle;
      o.order = opts->order;
      o.inject_divisor_fault = opts->inject_divisor_fault != 0;
    }
    auto rep = std::make_unique<dm_report>();
    rep->r = dyckmax::run_verification(o);
    *out = rep.release();
  });
}

size_t dm_report_size(const dm_report* report) { return report == nullptr ? 0 : report->r.checks.size(); }

dm_status dm_report_get(const dm_report* report, size_t index, const char** name, int* passed,
                        const char** detail) {
  if (report == nullptr) return null_arg("report");
  if (index >= report->r.checks.size()) {
    g_last_error = "report index out of range";
    return DM_ERR_USAGE;
  }
  const auto& c = report->r.checks[index];
  if (name != nullptr) *name = c.name.c_str();
  if (passed != nullptr) *passed = c.passed ? 1 : 0;
  if (detail != nullptr) *detail = c.detail.c_str();
  return DM_OK;
}

int dm_report_passed(const dm_report* report) { return report != nullptr && report->r.all_passed() ? 1 : 0; }

void dm_report_free(dm_report* report) { delete report; }

}  // extern "C"
