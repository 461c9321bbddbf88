// Copyright 2026 The rmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface of the rmd library.
 *
 * Every function returns an rmd_status; on failure the thread-local message
 * returned by rmd_last_error() describes the problem. Handles are opaque and
 * owned by the caller, who releases them with the matching *_destroy call
 * (which accepts NULL). */

#ifndef RMD_C_API_H_
#define RMD_C_API_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RMD_BUILDING_LIBRARY)
#    define RMD_API __declspec(dllexport)
#  else
#    define RMD_API __declspec(dllimport)
#  endif
#else
#  define RMD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmd_status {
  RMD_OK = 0,
  RMD_ERR_INVALID_ARGUMENT = 2,
  RMD_ERR_CONTRACT = 3,
  RMD_ERR_IO = 4,
  RMD_ERR_STATE = 5,
  RMD_ERR_INTERNAL = 6
} rmd_status;

typedef enum rmd_schedule { RMD_ADAPTIVE = 0, RMD_NONADAPTIVE = 1 } rmd_schedule;

RMD_API const char* rmd_version(void);
/* Message of the last failure on this thread ("" if none). */
RMD_API const char* rmd_last_error(void);
RMD_API const char* rmd_status_name(rmd_status status);

/* ---- experiments -------------------------------------------------------- */

typedef struct rmd_experiment rmd_experiment;
typedef struct rmd_result rmd_result;

/* command: bandit | experts | game | pagerank | sampler-test | bounds */
RMD_API rmd_status rmd_experiment_create(const char* command, rmd_experiment** out);
RMD_API rmd_status rmd_experiment_set_int(rmd_experiment* e, const char* key, int64_t value);
RMD_API rmd_status rmd_experiment_set_double(rmd_experiment* e, const char* key, double value);
RMD_API rmd_status rmd_experiment_set_string(rmd_experiment* e, const char* key,
                                             const char* value);
RMD_API rmd_status rmd_experiment_run(const rmd_experiment* e, rmd_result** out);
RMD_API void rmd_experiment_destroy(rmd_experiment* e);

/* Strings stay valid until the result is destroyed. */
RMD_API const char* rmd_result_summary_json(const rmd_result* r);
RMD_API const char* rmd_result_trace_csv(const rmd_result* r);
RMD_API const char* rmd_result_table_csv(const rmd_result* r);
RMD_API uint64_t rmd_result_summary_hash(const rmd_result* r);
RMD_API void rmd_result_destroy(rmd_result* r);

/* ---- primitives --------------------------------------------------------- */

typedef struct rmd_rng rmd_rng;
RMD_API rmd_status rmd_rng_create(uint64_t seed, rmd_rng** out);
RMD_API rmd_status rmd_rng_uniform(rmd_rng* rng, double* out);
RMD_API void rmd_rng_destroy(rmd_rng* rng);

/* out[i] = exp(y_i / beta) / sum_l exp(y_l / beta). */
RMD_API rmd_status rmd_softmax(const double* y, size_t n, double beta, double* out);
RMD_API rmd_status rmd_smoothed_max(const double* y, size_t n, double beta, double* out);

/* kind: "T1-mean", "T1-highprob", "T2-mean", "T2-highprob-general",
 * "T2-highprob-det", "T2-nonadaptive-det". */
RMD_API rmd_status rmd_evaluate_bound(const char* kind, double grad_bound, size_t n,
                                      double horizon, double omega, double* out);

typedef struct rmd_dual_state rmd_dual_state;
/* horizon is ignored for RMD_ADAPTIVE. */
RMD_API rmd_status rmd_dual_state_create(size_t n, double grad_bound, rmd_schedule mode,
                                         size_t horizon, rmd_dual_state** out);
RMD_API rmd_status rmd_dual_state_accumulate(rmd_dual_state* s, const double* grad,
                                             size_t n, double bound);
RMD_API rmd_status rmd_dual_state_steps(const rmd_dual_state* s, size_t* out);
RMD_API rmd_status rmd_dual_state_y(const rmd_dual_state* s, double* out, size_t n);
/* Accumulates grad and writes the next MD1 point (adaptive states only). */
RMD_API rmd_status rmd_md1_step(rmd_dual_state* s, const double* grad, size_t n,
                                double bound, double* next_out);
RMD_API rmd_status rmd_md2_distribution(const rmd_dual_state* s, double* out, size_t n);
RMD_API rmd_status rmd_md2_sample(const rmd_dual_state* s, rmd_rng* rng, size_t* index);
RMD_API void rmd_dual_state_destroy(rmd_dual_state* s);

typedef struct rmd_matrix rmd_matrix;
/* Matrix Market coordinate file; entry_bound <= 0 selects max |a_ij|. */
RMD_API rmd_status rmd_matrix_load(const char* path, double entry_bound, rmd_matrix** out);
RMD_API rmd_status rmd_matrix_info(const rmd_matrix* m, size_t* rows, size_t* cols,
                                   size_t* nonzeros, double* entry_bound);
RMD_API void rmd_matrix_destroy(rmd_matrix* m);

#ifdef __cplusplus
}
#endif

#endif /* RMD_C_API_H_ */
