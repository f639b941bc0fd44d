// Copyright 2026 The bme Authors.
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

/* C interface to the bme library. All strings returned through `char**`
 * are heap-allocated and must be released with bme_string_free. On failure
 * a function returns a non-zero status and bme_last_error() describes it;
 * output parameters are left untouched. */

#ifndef BME_BME_H_
#define BME_BME_H_

#include <stddef.h>

#if defined(__GNUC__)
#define BME_API __attribute__((visibility("default")))
#else
#define BME_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BME_OK = 0,
  BME_ERR_ARGUMENT = 1,
  BME_ERR_STRUCTURE = 2,
  BME_ERR_CAPACITY = 3,
  BME_ERR_PARSE = 4,
  BME_ERR_NUMERIC = 5,
  BME_ERR_INTERNAL = 6,
} bme_status;

typedef enum {
  BME_FORMAT_JSON = 0,
  BME_FORMAT_CSV = 1,
  BME_FORMAT_TEXT = 2, /* graph6 lines; family and enumerate only */
} bme_format;

typedef enum {
  BME_METHOD_ROOTS = 0,
  BME_METHOD_COULSON = 1,
  BME_METHOD_BOTH = 2,
} bme_method;

/* Closed interval [lo, hi]. */
typedef struct {
  int lo;
  int hi;
} bme_range;

typedef struct bme_graph bme_graph;

BME_API const char* bme_version(void);
BME_API const char* bme_status_name(bme_status status);
/* Message for the most recent failure on this thread ("" if none). */
BME_API const char* bme_last_error(void);
BME_API void bme_string_free(char* s);

/* Accepts an optional ">>graph6<<" header and trailing whitespace. */
BME_API bme_status bme_graph_from_graph6(const char* text, bme_graph** out);
/* `endpoints` holds 2 * edge_count vertex indices. */
BME_API bme_status bme_graph_from_edges(int order, const int* endpoints,
                                size_t edge_count, bme_graph** out);
BME_API void bme_graph_free(bme_graph* g);
BME_API int bme_graph_order(const bme_graph* g);
BME_API int bme_graph_edge_count(const bme_graph* g);
BME_API bme_status bme_graph_to_graph6(const bme_graph* g, char** out);
/* Canonically relabeled copy. */
BME_API bme_status bme_graph_canonical(const bme_graph* g, bme_graph** out);

/* `kind` is one of path, cycle, star, cvc, theta, t_tree, B_nab_t,
 * Bp_nab_t, B_nxyc_t, Bp_nxyc_t. `params` holds 1 (n), 2 (a, b) or 3
 * (x, y, c) values. attach_pos is ignored (pass -1) for unprimed kinds. */
BME_API bme_status bme_family_build(const char* kind, const int* params,
                            int param_count, int t, int attach_pos,
                            bme_graph** out);
BME_API bme_status bme_family_describe(const char* kind, const int* params,
                               int param_count, int t, int attach_pos,
                               bme_format format, char** out);

/* Exact matching counts; `counts` receives floor(n/2)+1 decimal strings
 * joined by spaces. */
BME_API bme_status bme_match_sequence(const bme_graph* g, char** counts);
/* {graph6, n, m_sequence, alpha_coefficients}; CSV gives one row. */
BME_API bme_status bme_mpoly(const bme_graph* g, bme_format format, char** out);
BME_API const char* bme_mpoly_csv_header(void);

/* `tolerance` <= 0 selects the method default (roots 1e-10, Coulson 1e-6).
 * BME_METHOD_BOTH returns the root value. */
BME_API bme_status bme_me_value(const bme_graph* g, bme_method method,
                        double tolerance, double* value, double* error_bound);
/* {graph6, me, method, error_bound}; with BME_METHOD_BOTH also "roots",
 * "coulson", "difference" and "agree" (|difference| <= tolerance). */
BME_API bme_status bme_me(const bme_graph* g, bme_method method, double tolerance,
                  bme_format format, char** out);
BME_API const char* bme_me_csv_header(void);

BME_API bme_status bme_classify(const bme_graph* g, char** label);
BME_API bme_status bme_enumerate(int n, int classify, bme_format format, char** out);
BME_API bme_status bme_rank(int n, int workers, bme_format format, char** out);

/* "N" or "LO:HI". */
BME_API bme_status bme_parse_range(const char* text, bme_range* out);

/* Verification sweeps. `passed` is set to 1 iff every check passed. */
BME_API bme_status bme_verify_lemma31(bme_range a, bme_range b, bme_range t,
                              bme_format format, char** out, int* passed);
BME_API bme_status bme_verify_lemma32(bme_range x, bme_range yc, bme_range t,
                              bme_format format, char** out, int* passed);
BME_API bme_status bme_verify_lemma33(bme_range n, bme_format format, char** out,
                              int* passed);
BME_API bme_status bme_verify_thm34(bme_range a, bme_range b, bme_range t,
                            bme_format format, char** out, int* passed);
BME_API bme_status bme_verify_thm35(bme_range x, bme_range yc, bme_range t,
                            bme_format format, char** out, int* passed);
BME_API bme_status bme_verify_thm36(bme_range n, int coefficient_n_max, int workers,
                            bme_format format, char** out, int* passed);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* BME_BME_H_ */
