// Copyright 2026 The c4free Authors
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

/* C interface to the c4free library.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Functions return a c4_status; on failure c4_last_error() describes the
 * problem (the text is thread-local and valid until the next call on the
 * same thread). Strings returned through char** are owned by the caller and
 * released with c4_string_free; strings returned as const char* are owned
 * by the handle they came from. */

#ifndef C4FREE_C4FREE_H_
#define C4FREE_C4FREE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(C4FREE_BUILDING_LIBRARY)
#define C4_API __attribute__((visibility("default")))
#else
#define C4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c4_status {
  C4_OK = 0,
  C4_ERR_INVALID_ARGUMENT = 1,
  C4_ERR_CAP_EXCEEDED = 2,
  C4_ERR_NO_CONVERGENCE = 3,
  C4_ERR_PARSE = 4,
  C4_ERR_IO = 5,
  C4_ERR_PRECONDITION = 6,
  C4_ERR_INTERNAL = 7
} c4_status;

typedef enum c4_check {
  C4_CHECK_THEOREM1 = 0,
  C4_CHECK_THEOREM2 = 1,
  C4_CHECK_SMALL_M = 2,
  C4_CHECK_IN3 = 3,
  C4_CHECK_CONJECTURE = 4,
  C4_CHECK_K2K1 = 5
} c4_check;

typedef enum c4_format { C4_FORMAT_JSONL = 0, C4_FORMAT_CSV = 1 } c4_format;

typedef enum c4_enum_mode { C4_BY_EDGES = 0, C4_BY_ORDER = 1 } c4_enum_mode;

typedef struct c4_graph c4_graph;
typedef struct c4_report c4_report;
typedef struct c4_search c4_search;

typedef struct c4_options {
  double tol;      /* eigensolver residual tolerance, in (0, 1e-6] */
  int workers;     /* worker threads for enumeration and restarts */
  int edge_cap;    /* largest m accepted by by-edges enumeration */
  int order_cap;   /* largest n accepted by by-order enumeration */
  uint64_t seed;   /* search master seed */
  int restarts;    /* search restarts */
} c4_options;

/* Fills in the defaults: tol 1e-12, 1 worker, caps 16 / 10, seed 1,
 * 4 restarts. */
C4_API void c4_options_init(c4_options* opts);

C4_API const char* c4_last_error(void);
C4_API const char* c4_version(void);
C4_API void c4_string_free(char* s);

/* Graphs. */
C4_API c4_status c4_graph_from_graph6(const char* text, c4_graph** out);
/* endpoints holds 2 * num_edges vertex indices. */
C4_API c4_status c4_graph_from_edges(int n, const int* endpoints,
                                     size_t num_edges, c4_graph** out);
C4_API c4_status c4_make_star(int n, c4_graph** out);
C4_API c4_status c4_make_snk(int n, int k, c4_graph** out);
C4_API c4_status c4_make_friendship(int k, c4_graph** out);
C4_API void c4_graph_free(c4_graph* g);
C4_API int c4_graph_order(const c4_graph* g);
C4_API int c4_graph_size(const c4_graph* g);
C4_API c4_status c4_graph_to_graph6(const c4_graph* g, char** out);
C4_API c4_status c4_graph_canonical_form(const c4_graph* g, char** out);
C4_API c4_status c4_graph_common_neighbors(const c4_graph* g, int u, int v,
                                           int* out);
/* *out = 1 iff some vertex pair has at least k+1 common neighbors; k = 1
 * tests for a 4-cycle. */
C4_API c4_status c4_graph_has_k2kp1(const c4_graph* g, int k, int* out);

/* Spectral radius. vec may be NULL, otherwise it receives order() entries. */
C4_API c4_status c4_spectral_radius(const c4_graph* g, double tol, double* mu,
                                    double* vec, double* residual,
                                    long* iters);
C4_API c4_status c4_snk_mu(int n, int k, double* mu);
C4_API c4_status c4_snk_report_json(int n, int k, char** out);

/* Enumeration. The callback receives one graph6 string per class; a
 * nonzero return stops the enumeration early. count may be NULL. */
typedef int (*c4_graph_callback)(const char* graph6, void* user);
C4_API c4_status c4_enumerate(c4_enum_mode mode, int value, int max_codegree,
                              const c4_options* opts, c4_graph_callback cb,
                              void* user, long* count);

/* Verification. `value` is m for the theorem and small-m checks and n for
 * the others; k is used by C4_CHECK_K2K1 only. Records are streamed to
 * records_path ("-" for stdout, NULL for none). */
C4_API c4_status c4_verify(c4_check check, int value, int k,
                           const c4_options* opts, const char* records_path,
                           c4_format format, c4_report** out);
C4_API void c4_report_free(c4_report* r);
C4_API const char* c4_report_summary_json(const c4_report* r);
/* 0 consistent, 2 violation or anomaly certificates produced. */
C4_API int c4_report_exit_code(const c4_report* r);
C4_API long c4_report_graph_count(const c4_report* r);
C4_API double c4_report_max_mu(const c4_report* r);
C4_API c4_status c4_report_write_certificates(const c4_report* r,
                                              const char* dir, int* written);

C4_API c4_status c4_srg_table_json(char** out, int* all_exact);

/* Hill-climbing search over C4-free graphs with m edges. */
C4_API c4_status c4_search_run(int m, const c4_options* opts,
                               c4_search** out);
C4_API void c4_search_free(c4_search* s);
C4_API double c4_search_mu(const c4_search* s);
C4_API const char* c4_search_graph6(const c4_search* s);
/* Final graph, mu, seed and the JSON move log. */
C4_API const char* c4_search_json(const c4_search* s);

#ifdef __cplusplus
}
#endif

#endif /* C4FREE_C4FREE_H_ */
