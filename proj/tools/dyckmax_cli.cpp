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


// dyckmax: tables, series and checks for left-to-right maxima in Dyck paths.
//
// Exit codes: 0 success, 1 verification failure (or internal error),
// 2 usage error (bad arguments, size guards).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckmax/dyckmax.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliFailure {
  int code;
  std::string message;
};

void check(dm_status st) {
  if (st == DM_OK || st == DM_DONE) return;
  const int code = (st == DM_ERR_USAGE || st == DM_ERR_RESOURCE || st == DM_ERR_DOMAIN) ? kExitUsage : kExitVerifyFailed;
  throw CliFailure{code, dm_last_error()};
}

uint32_t limit_of(dm_guard g) {
  uint32_t v = 0;
  check(dm_limit(g, &v));
  return v;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// ---- series ---------------------------------------------------------------

struct SeriesArgs {
  std::string kind = "strict";
  int order = 10;
  std::string format = "plain";
  std::string via = "exact";
};

int run_series(const SeriesArgs& a) {
  const uint32_t cap = limit_of(DM_GUARD_SERIES_ORDER);
  if (a.order < 1 || static_cast<uint32_t>(a.order) > cap) {
    throw CliFailure{kExitUsage, "--order must be in 1.." + std::to_string(cap)};
  }
  const dm_kind kind = a.kind == "weak" ? DM_WEAK : DM_STRICT;
  const dm_route route = a.via == "genfun" ? DM_ROUTE_GENFUN : DM_ROUTE_EXACT;
  dm_bigseq* seq = nullptr;
  check(dm_series(kind, static_cast<uint32_t>(a.order), route, &seq));
  std::unique_ptr<dm_bigseq, decltype(&dm_bigseq_free)> guard(seq, &dm_bigseq_free);

  const size_t count = dm_bigseq_size(seq);
  std::ostringstream os;
  if (a.format == "json") {
    os << "{\"kind\": \"" << a.kind << "\", \"records\": [";
    for (size_t i = 0; i < count; ++i) {
      os << (i ? ", " : "") << "{\"n\": " << i + 1 << ", \"value\": " << dm_bigseq_get(seq, i) << '}';
    }
    os << "]}\n";
  } else if (a.format == "csv") {
    os << "n,value\n";
    for (size_t i = 0; i < count; ++i) os << i + 1 << ',' << dm_bigseq_get(seq, i) << '\n';
  } else {
    for (size_t i = 0; i < count; ++i) os << (i ? " " : "") << dm_bigseq_get(seq, i);
    os << '\n';
  }
  std::cout << os.str();
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  int n_max = 20;
  std::string format = "plain";
};

int run_table(const TableArgs& a) {
  if (a.n_max < 1) throw CliFailure{kExitUsage, "--n-max must be >= 1"};
  dm_table* table = nullptr;
  check(dm_table_build(static_cast<uint32_t>(a.n_max), 6, &table));
  std::unique_ptr<dm_table, decltype(&dm_table_free)> guard(table, &dm_table_free);

  static const char* const kFields[] = {"n",         "catalan",     "strict_total",  "weak_total",
                                        "strict_mean", "weak_mean", "strict_asympt", "weak_asympt"};
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < dm_table_size(table); ++i) {
    dm_record r{};
    check(dm_table_get(table, i, &r));
    rows.push_back({std::to_string(r.n), r.catalan, r.strict_total, r.weak_total, r.strict_mean, r.weak_mean,
                    fixed6(r.strict_asympt), fixed6(r.weak_asympt)});
  }

  std::ostringstream os;
  if (a.format == "json") {
    os << "{\"kind\": \"table\", \"records\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << (i ? ", " : "") << '{';
      for (size_t f = 0; f < 8; ++f) os << (f ? ", " : "") << '"' << kFields[f] << "\": " << rows[i][f];
      os << '}';
    }
    os << "]}\n";
  } else if (a.format == "csv") {
    for (size_t f = 0; f < 8; ++f) os << (f ? "," : "") << kFields[f];
    os << '\n';
    for (const auto& row : rows) {
      for (size_t f = 0; f < 8; ++f) os << (f ? "," : "") << row[f];
      os << '\n';
    }
  } else {
    std::vector<size_t> width(8);
    for (size_t f = 0; f < 8; ++f) {
      width[f] = std::string(kFields[f]).size();
      for (const auto& row : rows) width[f] = std::max(width[f], row[f].size());
    }
    auto line = [&](auto&& cell) {
      for (size_t f = 0; f < 8; ++f) {
        const std::string s = cell(f);
        os << (f ? "  " : "") << std::string(width[f] - s.size(), ' ') << s;
      }
      os << '\n';
    };
    line([&](size_t f) { return std::string(kFields[f]); });
    for (const auto& row : rows) line([&](size_t f) { return row[f]; });
  }
  std::cout << os.str();
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  int n_max_oracle = 10;
  int order = 50;
  std::string inject_fault;
};

int run_verify(const VerifyArgs& a) {
  if (a.n_max_oracle < 0 || a.order < 2) throw CliFailure{kExitUsage, "invalid --n-max-oracle or --order"};
  dm_verify_options opts;
  dm_verify_options_init(&opts);
  opts.n_max_oracle = static_cast<uint32_t>(a.n_max_oracle);
  opts.order = static_cast<uint32_t>(a.order);
  opts.inject_divisor_fault = a.inject_fault == "divisor" ? 1 : 0;
  dm_report* rep = nullptr;
  check(dm_verify(&opts, &rep));
  std::unique_ptr<dm_report, decltype(&dm_report_free)> guard(rep, &dm_report_free);

  size_t failed = 0;
  const size_t total = dm_report_size(rep);
  for (size_t i = 0; i < total; ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    check(dm_report_get(rep, i, &name, &passed, &detail));
    if (!passed) ++failed;
    std::cout << (passed ? "PASS  " : "FAIL  ") << name << ": " << detail << '\n';
  }
  if (failed == 0) {
    std::cout << "verification passed (" << total << " checks)\n";
    return kExitOk;
  }
  std::cout << "verification FAILED (" << failed << " of " << total << " checks)\n";
  return kExitVerifyFailed;
}

// ---- paths ----------------------------------------------------------------

struct PathsArgs {
  int n = 4;
  bool list = false;
};

int run_paths(const PathsArgs& a) {
  if (a.n < 0) throw CliFailure{kExitUsage, "--n must be >= 0"};
  const auto n = static_cast<uint32_t>(a.n);
  std::ostringstream os;
  if (a.list) {
    const uint32_t cap = limit_of(DM_GUARD_LIST_PATHS);
    if (n > cap) throw CliFailure{kExitUsage, "--list requires n <= " + std::to_string(cap)};
    dm_path_iter* it = nullptr;
    check(dm_paths_open(n, &it));
    std::unique_ptr<dm_path_iter, decltype(&dm_paths_close)> guard(it, &dm_paths_close);
    dm_path_info info{};
    while (true) {
      const dm_status st = dm_paths_next(it, &info);
      check(st);
      if (st == DM_DONE) break;
      os << info.steps << " h=" << info.height << " strict=" << info.strict_ltr << " weak=" << info.weak_ltr
         << '\n';
    }
  } else {
    dm_totals* t = nullptr;
    check(dm_paths_totals(n, &t));
    std::unique_ptr<dm_totals, decltype(&dm_totals_free)> guard(t, &dm_totals_free);
    os << "n=" << n << " paths=" << dm_totals_catalan(t) << " strict=" << dm_totals_strict(t)
       << " weak=" << dm_totals_weak(t) << '\n';
    for (size_t i = 0; i < dm_totals_heights(t); ++i) {
      dm_height_bin bin{};
      check(dm_totals_height(t, i, &bin));
      os << "  height=" << bin.height << " paths=" << bin.paths << " strict=" << bin.strict
         << " weak=" << bin.weak << '\n';
    }
  }
  std::cout << os.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-to-right maxima in Dyck paths: exact counts, generating functions, asymptotics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dm_version()));

  const std::vector<std::string> formats{"json", "csv", "plain"};

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Total maxima c_n = [z^{2n}] for n = 1..order");
  series->add_option("--kind", series_args.kind, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
  series->add_option("--order", series_args.order, "Number of coefficients");
  series->add_option("--format", series_args.format, "json, csv or plain")->check(CLI::IsMember(formats));
  series->add_option("--via", series_args.via, "exact (closed form) or genfun (series extraction)")
      ->check(CLI::IsMember({"exact", "genfun"}));

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Counts, exact means and asymptotic means for n = 1..n-max");
  table->add_option("--n-max", table_args.n_max, "Largest semi-length");
  table->add_option("--format", table_args.format, "json, csv or plain")->check(CLI::IsMember(formats));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check enumeration, generating functions and closed forms");
  verify->add_option("--n-max-oracle", verify_args.n_max_oracle, "Largest enumerated semi-length");
  verify->add_option("--order", verify_args.order, "Series order for identities");
  verify->add_option("--inject-fault", verify_args.inject_fault, "Test mode: corrupt a component (divisor)")
      ->check(CLI::IsMember({"divisor"}));

  PathsArgs paths_args;
  auto* paths = app.add_subcommand("paths", "Enumerate Dyck paths of semi-length n");
  paths->add_option("--n", paths_args.n, "Semi-length");
  paths->add_flag("--list", paths_args.list, "Print every path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*series) return run_series(series_args);
    if (*table) return run_table(table_args);
    if (*verify) return run_verify(verify_args);
    if (*paths) return run_paths(paths_args);
  } catch (const CliFailure& f) {
    std::cerr << "dyckmax: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}
