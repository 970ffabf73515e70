// Copyright 2026 The routegame Authors.
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

/* C interface to the routegame library. Every call returns an rg_status;
 * on failure rg_last_error() holds a message for the calling thread. Numbers
 * cross the boundary as strings: "p/q", "-p", or exact decimals "6.333". */

#ifndef ROUTEGAME_ROUTEGAME_H_
#define ROUTEGAME_ROUTEGAME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RG_API __declspec(dllexport)
#else
#define RG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rg_status {
  RG_OK = 0,
  RG_ERR_PARSE = 2,
  RG_ERR_DOMAIN = 3,
  RG_ERR_SIZE = 4,
  RG_NOT_CONVERGED = 5, /* result is still produced */
  RG_ERR_SHAPE = 6,
  RG_ERR_INVALID_ARGUMENT = 7,
  RG_ERR_INTERNAL = 8
} rg_status;

typedef enum rg_kp_method {
  RG_KP_BOTH = 0,
  RG_KP_VIA_ATTACK = 1,
  RG_KP_DP = 2
} rg_kp_method;

typedef struct rg_instance rg_instance;
typedef struct rg_knapsack rg_knapsack;
typedef struct rg_result rg_result;

typedef struct rg_options {
  double tolerance;
  int max_iterations;
  uint64_t seed;
  int max_cut_rounds;
  int max_edges;
  unsigned threads; /* 0: ROUTEGAME_THREADS or hardware */
  int two_link_closed_form; /* voi: exact two-link path when nonzero */
} rg_options;

RG_API void rg_options_init(rg_options* options);
RG_API const char* rg_version(void);
RG_API const char* rg_status_name(rg_status status);
RG_API const char* rg_last_error(void);

/* Instances */
RG_API rg_status rg_instance_parse(const char* json, rg_instance** out);
RG_API rg_status rg_instance_create(const char* const* capacities, size_t count, rg_instance** out);
/* key: "r", "r_a", "r_a_lo" or "r_a_hi"; value NULL clears it. */
RG_API rg_status rg_instance_set(rg_instance* instance, const char* key, const char* value);
/* key: "route" or "attack"; values NULL clears it. */
RG_API rg_status rg_instance_set_profile(rg_instance* instance, const char* key,
                                         const char* const* values, size_t count);
RG_API size_t rg_instance_edge_count(const rg_instance* instance);
RG_API void rg_instance_destroy(rg_instance* instance);

RG_API rg_status rg_knapsack_parse(const char* json, rg_knapsack** out);
RG_API void rg_knapsack_destroy(rg_knapsack* knapsack);

/* Operations. Each allocates *out on RG_OK or RG_NOT_CONVERGED. */
RG_API rg_status rg_block(const rg_instance* instance, rg_result** out);
RG_API rg_status rg_best_response(const rg_instance* instance, const rg_options* options,
                                  rg_result** out);
RG_API rg_status rg_thresholds(const rg_instance* instance, rg_result** out);
RG_API rg_status rg_classify(const rg_instance* instance, rg_result** out);
RG_API rg_status rg_regions(const rg_instance* instance, const char* r_max, const char* ra_max,
                            const char* step, rg_result** out);
RG_API rg_status rg_stackelberg(const rg_instance* instance, const rg_options* options,
                                rg_result** out);
/* ra_max NULL means C(E). */
RG_API rg_status rg_curve(const rg_instance* instance, const char* ra_max, int samples,
                          const rg_options* options, rg_result** out);
RG_API rg_status rg_risk(const rg_instance* instance, const rg_options* options, rg_result** out);
RG_API rg_status rg_voi(const rg_instance* instance, const rg_options* options, rg_result** out);
RG_API rg_status rg_knapsack_solve(const rg_knapsack* knapsack, rg_kp_method method,
                                   const rg_options* options, rg_result** out);

/* Results. Strings live as long as the result; "" when a form is absent. */
RG_API const char* rg_result_json(const rg_result* result);
RG_API const char* rg_result_csv(const rg_result* result);
RG_API const char* rg_result_svg(const rg_result* result);
RG_API int rg_result_converged(const rg_result* result);
/* Exact string of a top-level numeric field, or NULL if there is none. */
RG_API const char* rg_result_exact(const rg_result* result, const char* key);
RG_API void rg_result_destroy(rg_result* result);

#ifdef __cplusplus
}
#endif

#endif /* ROUTEGAME_ROUTEGAME_H_ */
