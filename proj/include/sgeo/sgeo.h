// Copyright 2026 The sgeo Authors
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

/* C interface to the sgeo library. All objects are opaque handles released
 * with the matching *_free function. Functions return SGEO_OK or an error
 * status; the message of the last failure on the calling thread is available
 * from sgeo_last_error(). Strings and arrays handed out by the library are
 * released with sgeo_string_free() and sgeo_set_free(). */

#ifndef SGEO_SGEO_H_
#define SGEO_SGEO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SGEO_API __declspec(dllexport)
#else
#define SGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgeo_status {
  SGEO_OK = 0,
  SGEO_ERR_INVALID_ARGUMENT = 1,
  SGEO_ERR_PARSE = 2,
  SGEO_ERR_SELF_LOOP = 3,
  SGEO_ERR_DUPLICATE_EDGE = 4,
  SGEO_ERR_UNREACHABLE_PAIR = 5,
  SGEO_ERR_DISCONNECTED = 6,
  SGEO_ERR_MALFORMED_PATH = 7,
  SGEO_ERR_DIAMETER_TOO_LARGE = 8,
  SGEO_ERR_NOT_SPLIT = 9,
  SGEO_ERR_NOT_BLOCK_GRAPH = 10,
  SGEO_ERR_NOT_CACTUS = 11,
  SGEO_ERR_NOT_BIPARTITE = 12,
  SGEO_ERR_PART_TOO_SMALL = 13,
  SGEO_ERR_CLAUSE_TOO_LARGE = 14,
  SGEO_ERR_INVALID_FORMULA = 15,
  SGEO_ERR_NOT_NORMALIZED = 16,
  SGEO_ERR_WITNESS_DOES_NOT_SATISFY = 17,
  SGEO_ERR_NOT_STRONG_GEODETIC = 18,
  SGEO_ERR_ALGORITHM_DISCREPANCY = 19,
  SGEO_ERR_IO = 20,
  SGEO_ERR_INTERNAL = 99
} sgeo_status;

typedef enum sgeo_verdict { SGEO_YES = 0, SGEO_NO = 1, SGEO_UNKNOWN = 2 } sgeo_verdict;

typedef enum sgeo_recognizer {
  SGEO_RECOGNIZE_AUTO = 0,
  SGEO_RECOGNIZE_GENERAL = 1,
  SGEO_RECOGNIZE_DIAMETER2 = 2,
  SGEO_RECOGNIZE_SPLIT = 3,
  SGEO_RECOGNIZE_BLOCK = 4,
  SGEO_RECOGNIZE_CACTUS = 5
} sgeo_recognizer;

typedef enum sgeo_solver {
  SGEO_SOLVE_AUTO = 0,
  SGEO_SOLVE_EXACT = 1,
  SGEO_SOLVE_BLOCK = 2,
  SGEO_SOLVE_CACTUS = 3,
  SGEO_SOLVE_FPT = 4
} sgeo_solver;

typedef enum sgeo_reduction {
  SGEO_REDUCE_3SAT3 = 0,
  SGEO_REDUCE_3SAT3_DEG4 = 1,
  SGEO_REDUCE_DOMSET_BIPARTITE = 2,
  SGEO_REDUCE_DOMSET_SPLIT = 3,
  SGEO_REDUCE_SGR = 4
} sgeo_reduction;

#define SGEO_DIAMETER_INFINITE UINT32_MAX

typedef struct sgeo_class_info {
  int connected;
  int bipartite;
  int co_bipartite;
  int chordal;
  int split;
  int block;
  int cactus;
  uint32_t diameter;
} sgeo_class_info;

typedef struct sgeo_oracle_options {
  const char* family;      /* all-graphs, cactus, block, split, diam2 */
  size_t max_n;
  size_t seeds;
  uint64_t base_seed;
  size_t threads;
  const char* archive_dir; /* NULL: do not archive */
} sgeo_oracle_options;

typedef struct sgeo_graph sgeo_graph;
typedef struct sgeo_result sgeo_result;
typedef struct sgeo_formula sgeo_formula;
typedef struct sgeo_instance sgeo_instance;
typedef struct sgeo_oracle_report sgeo_oracle_report;

SGEO_API const char* sgeo_version(void);
SGEO_API const char* sgeo_status_name(sgeo_status status);
SGEO_API const char* sgeo_last_error(void);
/* 1-based input line of the last parse failure, or 0. */
SGEO_API size_t sgeo_last_error_line(void);
SGEO_API void sgeo_string_free(char* s);
SGEO_API void sgeo_set_free(uint32_t* set);

/* Graphs. Text format: "n m" header, then m lines "u v"; '#' starts a comment. */
SGEO_API sgeo_status sgeo_graph_parse(const char* text, sgeo_graph** out);
/* endpoints holds 2*m vertex ids. */
SGEO_API sgeo_status sgeo_graph_from_edges(size_t n, const uint32_t* endpoints, size_t m,
                                           sgeo_graph** out);
SGEO_API void sgeo_graph_free(sgeo_graph* g);
SGEO_API size_t sgeo_graph_order(const sgeo_graph* g);
SGEO_API size_t sgeo_graph_size(const sgeo_graph* g);
SGEO_API sgeo_status sgeo_graph_write(const sgeo_graph* g, char** out);
SGEO_API sgeo_status sgeo_classify(const sgeo_graph* g, sgeo_class_info* out);
/* Number of u,v-geodesics as a decimal string. */
SGEO_API sgeo_status sgeo_count_geodesics(const sgeo_graph* g, uint32_t u, uint32_t v,
                                          char** out);

/* Vertex sets: whitespace-separated ids, '#' comments. Returned sorted. */
SGEO_API sgeo_status sgeo_set_parse(const sgeo_graph* g, const char* text, uint32_t** out,
                                    size_t* count);

/* Recognition. budget 0 means unlimited. */
SGEO_API sgeo_status sgeo_recognize(const sgeo_graph* g, const uint32_t* set, size_t count,
                                    sgeo_recognizer algorithm, uint64_t budget,
                                    sgeo_result** out);
/* Sets *valid to 1 iff the certificate is a strong geodetic assignment for set. */
SGEO_API sgeo_status sgeo_verify_certificate(const sgeo_graph* g, const uint32_t* set,
                                             size_t count, const char* certificate,
                                             int* valid);

/* Optimisation (k < 0) or decision sg(g) <= k. budget 0 means unlimited. */
SGEO_API sgeo_status sgeo_solve(const sgeo_graph* g, sgeo_solver algorithm, int64_t k,
                                uint64_t budget, sgeo_result** out);
/* *reject is 1 iff the kernel rule proves that no k-set is strong geodetic. */
SGEO_API sgeo_status sgeo_kernel_check(const sgeo_graph* g, size_t k, int* reject);

SGEO_API void sgeo_result_free(sgeo_result* r);
SGEO_API sgeo_verdict sgeo_result_verdict(const sgeo_result* r);
/* Solve results only: 1 if the optimum is known, stored in *value. */
SGEO_API int sgeo_result_value(const sgeo_result* r, size_t* value);
/* The recognised set or the solver's witness; borrowed. */
SGEO_API size_t sgeo_result_set(const sgeo_result* r, const uint32_t** set);
SGEO_API uint64_t sgeo_result_nodes(const sgeo_result* r);
SGEO_API const char* sgeo_result_algorithm(const sgeo_result* r);
SGEO_API size_t sgeo_result_diagnostic_count(const sgeo_result* r);
SGEO_API const char* sgeo_result_diagnostic(const sgeo_result* r, size_t i);
/* Certificate in "pair u v : path" lines; empty when there is none. */
SGEO_API sgeo_status sgeo_result_certificate(const sgeo_result* r, char** out);
SGEO_API sgeo_status sgeo_result_json(const sgeo_result* r, char** out);

/* Formulas in DIMACS CNF. */
SGEO_API sgeo_status sgeo_formula_parse_dimacs(const char* text, sgeo_formula** out);
SGEO_API sgeo_status sgeo_formula_write_dimacs(const sgeo_formula* f, char** out);
SGEO_API void sgeo_formula_free(sgeo_formula* f);
SGEO_API size_t sgeo_formula_vars(const sgeo_formula* f);
SGEO_API size_t sgeo_formula_clauses(const sgeo_formula* f);
SGEO_API int sgeo_formula_is_normalized(const sgeo_formula* f);
/* *unsat is set to 1 if the input held an empty clause. */
SGEO_API sgeo_status sgeo_formula_normalize(const sgeo_formula* f, sgeo_formula** out,
                                            int* unsat);

/* Reductions. k is ignored by the SAT and SGR constructions. */
SGEO_API sgeo_status sgeo_reduce_formula(const sgeo_formula* f, sgeo_reduction kind,
                                         sgeo_instance** out);
SGEO_API sgeo_status sgeo_reduce_graph(const sgeo_graph* g, sgeo_reduction kind, size_t k,
                                       const uint32_t* set, size_t count, sgeo_instance** out);
SGEO_API void sgeo_instance_free(sgeo_instance* inst);
/* Borrowed; valid while the instance lives. */
SGEO_API const sgeo_graph* sgeo_instance_graph(const sgeo_instance* inst);
SGEO_API size_t sgeo_instance_set(const sgeo_instance* inst, const uint32_t** set);
SGEO_API size_t sgeo_instance_k(const sgeo_instance* inst);
/* "<id> <label>" lines. */
SGEO_API sgeo_status sgeo_instance_labels(const sgeo_instance* inst, char** out);
/* truth[i] is nonzero when variable i+1 is true. Writes a certificate. */
SGEO_API sgeo_status sgeo_instance_translate_sat_witness(const sgeo_instance* inst,
                                                         const sgeo_formula* f,
                                                         const int* truth, size_t n,
                                                         char** certificate);
SGEO_API sgeo_status sgeo_instance_extract_domset(const sgeo_instance* inst,
                                                  const uint32_t* set, size_t count,
                                                  uint32_t** out, size_t* out_count);

/* Generators: family is cactus, block, split, bipartite or connected. */
SGEO_API sgeo_status sgeo_generate_graph(const char* family, size_t n, uint64_t seed,
                                         sgeo_graph** out);
SGEO_API sgeo_status sgeo_generate_formula(size_t n_vars, uint64_t seed, sgeo_formula** out);

SGEO_API sgeo_status sgeo_oracle_run(const sgeo_oracle_options* options,
                                     sgeo_oracle_report** out);
SGEO_API void sgeo_oracle_report_free(sgeo_oracle_report* r);
SGEO_API size_t sgeo_oracle_disagreements(const sgeo_oracle_report* r);
SGEO_API sgeo_status sgeo_oracle_report_text(const sgeo_oracle_report* r, char** out);
SGEO_API sgeo_status sgeo_oracle_report_json(const sgeo_oracle_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SGEO_SGEO_H_ */
