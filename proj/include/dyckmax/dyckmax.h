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


/*
 * dyckmax C API.
 *
 * Every function that can fail returns a dm_status. On failure the message is
 * available from dm_last_error() on the calling thread until the next call
 * into the library on that thread. Objects handed out through `**out`
 * parameters are owned by the caller and released with the matching _free or
 * _close function. Strings returned by accessors stay valid until their owner
 * is freed (for dm_paths_next: until the next call on that iterator).
 *
 * Big integers cross the boundary as NUL-terminated decimal strings.
 */
#ifndef DYCKMAX_DYCKMAX_H
#define DYCKMAX_DYCKMAX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DYCKMAX_BUILDING)
#    define DYCKMAX_API __declspec(dllexport)
#  else
#    define DYCKMAX_API __declspec(dllimport)
#  endif
#else
#  define DYCKMAX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dm_status {
  DM_OK = 0,
  DM_DONE = 1,            /* iterator exhausted; not an error */
  DM_ERR_USAGE = -1,      /* bad argument */
  DM_ERR_RESOURCE = -2,   /* a size guard was exceeded */
  DM_ERR_DOMAIN = -3,     /* argument outside a function's domain */
  DM_ERR_INTERNAL = -4
} dm_status;

typedef enum dm_kind { DM_STRICT = 0, DM_WEAK = 1 } dm_kind;

/* How series coefficients are produced. */
typedef enum dm_route {
  DM_ROUTE_EXACT = 0,   /* divisor-function closed form */
  DM_ROUTE_GENFUN = 1   /* coefficient extraction from the u-series */
} dm_route;

typedef enum dm_guard {
  DM_GUARD_ENUMERATE = 0,
  DM_GUARD_LIST_PATHS = 1,
  DM_GUARD_VERIFY_ORACLE = 2,
  DM_GUARD_SERIES_ORDER = 3,
  DM_GUARD_TABLE_ROWS = 4
} dm_guard;

DYCKMAX_API const char* dm_version(void);
DYCKMAX_API const char* dm_last_error(void);

/* Effective ceiling for a guard (DYCKMAX_MAX_N overrides every default). */
DYCKMAX_API dm_status dm_limit(dm_guard guard, uint32_t* out);

/* ---- integer sequences ------------------------------------------------- */

typedef struct dm_bigseq dm_bigseq;

/* c_1..c_order with c_n the total number of maxima over paths of semi-length n. */
DYCKMAX_API dm_status dm_series(dm_kind kind, uint32_t order, dm_route route, dm_bigseq** out);
DYCKMAX_API size_t dm_bigseq_size(const dm_bigseq* seq);
DYCKMAX_API const char* dm_bigseq_get(const dm_bigseq* seq, size_t index);
DYCKMAX_API void dm_bigseq_free(dm_bigseq* seq);

/* ---- tables ------------------------------------------------------------ */

typedef struct dm_record {
  uint32_t n;
  const char* catalan;
  const char* strict_total;
  const char* weak_total;
  const char* strict_mean;   /* exact quotient rounded to mean_digits places */
  const char* weak_mean;
  double strict_asympt;
  double weak_asympt;
} dm_record;

typedef struct dm_table dm_table;

/* Rows n = 1..n_max. */
DYCKMAX_API dm_status dm_table_build(uint32_t n_max, uint32_t mean_digits, dm_table** out);
DYCKMAX_API size_t dm_table_size(const dm_table* table);
DYCKMAX_API dm_status dm_table_get(const dm_table* table, size_t index, dm_record* out);
DYCKMAX_API void dm_table_free(dm_table* table);

/* ---- path enumeration -------------------------------------------------- */

typedef struct dm_path_info {
  const char* steps;  /* "u"/"d" word */
  uint32_t semi_length;
  uint32_t height;
  uint32_t strict_ltr;
  uint32_t weak_ltr;
  uint32_t returns;
  uint32_t peaks;
} dm_path_info;

typedef struct dm_path_iter dm_path_iter;

/* Lexicographic order, Up before Down. */
DYCKMAX_API dm_status dm_paths_open(uint32_t n, dm_path_iter** out);
/* DM_OK with *out filled, or DM_DONE. */
DYCKMAX_API dm_status dm_paths_next(dm_path_iter* it, dm_path_info* out);
DYCKMAX_API void dm_paths_close(dm_path_iter* it);

/* Statistics of one path given as a u/d word; out->steps aliases `word`. */
DYCKMAX_API dm_status dm_path_stats(const char* word, dm_path_info* out);

typedef struct dm_height_bin {
  uint32_t height;
  uint64_t paths;
  uint64_t strict;
  uint64_t weak;
} dm_height_bin;

typedef struct dm_totals dm_totals;

DYCKMAX_API dm_status dm_paths_totals(uint32_t n, dm_totals** out);
DYCKMAX_API uint64_t dm_totals_catalan(const dm_totals* t);
DYCKMAX_API uint64_t dm_totals_strict(const dm_totals* t);
DYCKMAX_API uint64_t dm_totals_weak(const dm_totals* t);
DYCKMAX_API size_t dm_totals_heights(const dm_totals* t);
DYCKMAX_API dm_status dm_totals_height(const dm_totals* t, size_t index, dm_height_bin* out);
DYCKMAX_API void dm_totals_free(dm_totals* t);

/* ---- asymptotics ------------------------------------------------------- */

DYCKMAX_API dm_status dm_mean_asympt(dm_kind kind, double n, double* out);
DYCKMAX_API dm_status dm_catalan_asympt(double n, double* out);
DYCKMAX_API dm_status dm_f1_direct(double t, double* out);
DYCKMAX_API dm_status dm_f1_expansion(double t, double* out);

/* Exact mean total/catalan(n) as a decimal with `digits` places, written to
 * buf (NUL-terminated). DM_ERR_USAGE if buf_len is too small. */
DYCKMAX_API dm_status dm_exact_mean(dm_kind kind, uint32_t n, uint32_t digits, char* buf, size_t buf_len);

/* ---- verification ------------------------------------------------------ */

typedef struct dm_verify_options {
  uint32_t n_max_oracle;       /* default 10 */
  uint32_t order;              /* default 50 */
  int inject_divisor_fault;    /* nonzero corrupts one d(r) entry */
} dm_verify_options;

typedef struct dm_report dm_report;

DYCKMAX_API void dm_verify_options_init(dm_verify_options* opts);
DYCKMAX_API dm_status dm_verify(const dm_verify_options* opts, dm_report** out);
DYCKMAX_API size_t dm_report_size(const dm_report* report);
DYCKMAX_API dm_status dm_report_get(const dm_report* report, size_t index, const char** name, int* passed,
                                    const char** detail);
DYCKMAX_API int dm_report_passed(const dm_report* report);
DYCKMAX_API void dm_report_free(dm_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DYCKMAX_DYCKMAX_H */
