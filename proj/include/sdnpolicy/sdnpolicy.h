// Copyright 2026 The sdnpolicy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the sdnpolicy library.
 *
 * All objects are opaque handles created by a constructor returning
 * sdnp_status and released with the matching *_free function (NULL is
 * accepted). Strings returned through char** out-parameters are owned by the
 * caller and must be released with sdnp_string_free. On failure, a
 * description of the most recent error on the calling thread is available
 * from sdnp_last_error().
 *
 * Handles are immutable once created and may be shared across threads.
 */

#ifndef SDNPOLICY_SDNPOLICY_H_
#define SDNPOLICY_SDNPOLICY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SDNP_BUILDING_LIBRARY)
#define SDNP_API __declspec(dllexport)
#else
#define SDNP_API __declspec(dllimport)
#endif
#else
#define SDNP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdnp_status {
  SDNP_OK = 0,
  SDNP_ERR_SYNTAX = 1,
  SDNP_ERR_INVARIANT_VIOLATION = 2,
  SDNP_ERR_DISCONNECTED_TOPOLOGY = 3,
  SDNP_ERR_UNKNOWN_SWITCH = 4,
  SDNP_ERR_UNKNOWN_TERMINAL = 5,
  SDNP_ERR_UNDERLYING_LEAK = 6,
  SDNP_ERR_UNKNOWN_SYMBOL = 7,
  SDNP_ERR_DANGLING_TERMINAL = 8,
  SDNP_ERR_UNKNOWN_ATTACHMENT = 9,
  SDNP_ERR_STALE_DELTA = 10,
  SDNP_ERR_DUPLICATE_RULE = 11,
  SDNP_ERR_STATE_BUDGET_EXCEEDED = 12,
  SDNP_ERR_UNIVERSE_TOO_LARGE = 13,
  SDNP_ERR_IO = 14,
  SDNP_ERR_INVALID_ARGUMENT = 15,
  SDNP_ERR_INTERNAL = 16
} sdnp_status;

typedef enum sdnp_format {
  SDNP_FORMAT_MACHINE = 0,
  SDNP_FORMAT_HUMAN = 1
} sdnp_format;

typedef enum sdnp_output_format {
  SDNP_OUTPUT_MACHINE = 0,
  SDNP_OUTPUT_HUMAN = 1,
  SDNP_OUTPUT_BOTH = 2
} sdnp_output_format;

typedef enum sdnp_outcome_kind {
  SDNP_OUTCOME_DELIVERED = 0,
  SDNP_OUTCOME_DROPPED = 1,
  SDNP_OUTCOME_LOOP = 2
} sdnp_outcome_kind;

typedef enum sdnp_report_status {
  SDNP_REPORT_ALL_HOLD = 0,
  SDNP_REPORT_VIOLATIONS_FOUND = 1
} sdnp_report_status;

/* Process exit statuses of the sdnp_cmd_* entry points. */
#define SDNP_EXIT_OK 0
#define SDNP_EXIT_PROPERTY_FAILURE 1
#define SDNP_EXIT_INPUT_ERROR 2
#define SDNP_EXIT_INTERNAL_ERROR 3

typedef struct sdnp_model sdnp_model;
typedef struct sdnp_policy_set sdnp_policy_set;
typedef struct sdnp_registry sdnp_registry;
typedef struct sdnp_pairs sdnp_pairs;
typedef struct sdnp_delta sdnp_delta;
typedef struct sdnp_report sdnp_report;

SDNP_API const char* sdnp_version(void);
SDNP_API const char* sdnp_status_name(sdnp_status status);
SDNP_API const char* sdnp_last_error(void);
SDNP_API void sdnp_string_free(char* s);

/* System model. */
SDNP_API sdnp_status sdnp_model_load(const char* text, size_t len,
                                     sdnp_model** out);
SDNP_API void sdnp_model_free(sdnp_model* model);
SDNP_API size_t sdnp_model_switch_count(const sdnp_model* model);
SDNP_API size_t sdnp_model_terminal_count(const sdnp_model* model);
SDNP_API sdnp_status sdnp_model_rule_count(const sdnp_model* model,
                                           const char* switch_id,
                                           size_t* out);
SDNP_API sdnp_status sdnp_model_hash(const sdnp_model* model, char** out);

/* Shortest path as a JSON array of {"switch","ingress","egress"} objects. */
SDNP_API sdnp_status sdnp_shortest_path(const sdnp_model* model,
                                        const char* src_switch,
                                        const char* dst_switch,
                                        char** out_json);

/* Addresses in dotted-quad / colon-hex text; vlan < 0 means untagged. */
typedef struct sdnp_header {
  const char* eth_src;
  const char* eth_dst;
  const char* ip_src;
  const char* ip_dst;
  uint8_t ip_proto;
  uint16_t tp_dst;
  int32_t vlan;
} sdnp_header;

/* trace_json may be NULL. */
SDNP_API sdnp_status sdnp_simulate(const sdnp_model* model,
                                   const char* src_terminal,
                                   const sdnp_header* header,
                                   sdnp_outcome_kind* kind, char** trace_json);

/* Policies, bindings, grounding. */
SDNP_API sdnp_status sdnp_policies_parse(const char* text, size_t len,
                                         sdnp_policy_set** out);
SDNP_API size_t sdnp_policies_count(const sdnp_policy_set* policies);
SDNP_API void sdnp_policies_free(sdnp_policy_set* policies);

SDNP_API sdnp_status sdnp_registry_parse(const char* text, size_t len,
                                         sdnp_registry** out);
SDNP_API void sdnp_registry_free(sdnp_registry* registry);

SDNP_API sdnp_status sdnp_resolve(const sdnp_policy_set* policies,
                                  const sdnp_registry* registry,
                                  const sdnp_model* model, sdnp_pairs** out);
SDNP_API size_t sdnp_pairs_count(const sdnp_pairs* pairs);
SDNP_API size_t sdnp_pairs_conflict_count(const sdnp_pairs* pairs);
SDNP_API void sdnp_pairs_free(sdnp_pairs* pairs);

/* Flow-table deltas. */
SDNP_API sdnp_status sdnp_transform(const sdnp_pairs* pairs,
                                    const sdnp_model* model, sdnp_delta** out);
SDNP_API sdnp_status sdnp_delta_parse(const char* text, size_t len,
                                      sdnp_delta** out);
SDNP_API size_t sdnp_delta_rule_count(const sdnp_delta* delta);
SDNP_API sdnp_status sdnp_delta_export(const sdnp_delta* delta,
                                       sdnp_format format, char** out);
SDNP_API void sdnp_delta_free(sdnp_delta* delta);
SDNP_API sdnp_status sdnp_apply(const sdnp_model* model,
                                const sdnp_delta* delta, sdnp_model** out);

/* Verification. */
typedef struct sdnp_verify_options {
  uint64_t state_budget;
  uint64_t enum_cap;
  int with_oracle;
} sdnp_verify_options;

SDNP_API void sdnp_verify_options_init(sdnp_verify_options* options);
SDNP_API sdnp_status sdnp_verify(const sdnp_model* rsdn,
                                 const sdnp_pairs* pairs,
                                 const sdnp_verify_options* options,
                                 sdnp_report** out);
SDNP_API sdnp_report_status sdnp_report_get_status(const sdnp_report* report);
SDNP_API void sdnp_report_counts(const sdnp_report* report, size_t* holds,
                                 size_t* violated, size_t* inconclusive,
                                 size_t* oracle_disagreements);
SDNP_API sdnp_status sdnp_report_export(const sdnp_report* report,
                                        sdnp_format format, char** out);
SDNP_API void sdnp_report_free(sdnp_report* report);

/* Whole-pipeline commands, as run by the command-line tool. */
typedef struct sdnp_run_config {
  const char* model_path;
  const char* policy_path;
  const char* registry_path; /* NULL: registry embedded in the model */
  const char* out_dir;
  const char* ftm_path;      /* NULL: generate the FTM */
  uint64_t state_budget;
  uint64_t enum_cap;
  sdnp_output_format format;
  int with_oracle;
  int quiet; /* suppress stdout; diagnostics still go to stderr */
} sdnp_run_config;

typedef struct sdnp_simulate_request {
  const char* src_terminal;
  const char* dst_terminal; /* may be NULL when ip_dst is given */
  const char* eth_dst;      /* NULL: from dst_terminal */
  const char* ip_dst;       /* NULL: from dst_terminal */
  uint8_t ip_proto;
  uint16_t tp_dst;
  int32_t vlan; /* < 0: untagged */
} sdnp_simulate_request;

SDNP_API void sdnp_run_config_init(sdnp_run_config* config);
SDNP_API int sdnp_cmd_transform(const sdnp_run_config* config);
SDNP_API int sdnp_cmd_verify(const sdnp_run_config* config);
SDNP_API int sdnp_cmd_simulate(const sdnp_run_config* config,
                               const sdnp_simulate_request* request);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SDNPOLICY_SDNPOLICY_H_ */
