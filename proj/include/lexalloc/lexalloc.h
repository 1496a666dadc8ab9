/*
 * Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
 * Version 2.0. See the LICENSE file at the root of this distribution or at
 * http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef LEXALLOC_LEXALLOC_H
#define LEXALLOC_LEXALLOC_H

/*
 * C interface to lexalloc: fair and Pareto-optimal allocation of indivisible
 * goods or chores under weakly lexicographic preferences.
 *
 * Every fallible call returns a lexalloc_status. On failure the out
 * parameters are left untouched and lexalloc_last_error() describes the
 * problem (the message is per thread and valid until the next failing call
 * on that thread).
 *
 * Handles are opaque and owned by the caller: release them with the matching
 * *_free function. Strings returned through char** are heap-allocated JSON
 * and must be released with lexalloc_string_free.
 *
 * Agents are addressed by their 1-based position in the instance.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LEXALLOC_BUILDING)
#    define LEXALLOC_API __declspec(dllexport)
#  else
#    define LEXALLOC_API __declspec(dllimport)
#  endif
#else
#  define LEXALLOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2 and 3 match the CLI exit codes for input and budget errors. */
typedef enum lexalloc_status {
  LEXALLOC_OK = 0,
  LEXALLOC_ERR_INPUT = 2,
  LEXALLOC_ERR_BUDGET = 3,
  LEXALLOC_ERR_POLARITY = 4,
  LEXALLOC_ERR_UNSUPPORTED = 5,
  LEXALLOC_ERR_CONTRACT = 6,
  LEXALLOC_ERR_INTERNAL = 7
} lexalloc_status;

typedef enum lexalloc_criteria {
  LEXALLOC_CRITERIA_NULL = 0,
  LEXALLOC_CRITERIA_EFX = 1,
  LEXALLOC_CRITERIA_MMS = 2,
  LEXALLOC_CRITERIA_EFX_MMS = 3
} lexalloc_criteria;

typedef struct lexalloc_instance lexalloc_instance;
typedef struct lexalloc_allocation lexalloc_allocation;

LEXALLOC_API const char* lexalloc_version(void);
LEXALLOC_API const char* lexalloc_last_error(void);
LEXALLOC_API const char* lexalloc_status_name(lexalloc_status status);
LEXALLOC_API void lexalloc_string_free(char* str);

/* Instances */

LEXALLOC_API lexalloc_status lexalloc_instance_parse(const char* json, lexalloc_instance** out);
LEXALLOC_API lexalloc_status lexalloc_instance_generate(uint64_t seed, size_t num_agents,
                                                        size_t num_items, int chores,
                                                        size_t max_classes,
                                                        lexalloc_instance** out);
LEXALLOC_API void lexalloc_instance_free(lexalloc_instance* inst);
LEXALLOC_API lexalloc_status lexalloc_instance_to_json(const lexalloc_instance* inst, char** out);
LEXALLOC_API size_t lexalloc_instance_num_agents(const lexalloc_instance* inst);
LEXALLOC_API size_t lexalloc_instance_num_items(const lexalloc_instance* inst);
LEXALLOC_API int lexalloc_instance_is_goods(const lexalloc_instance* inst);
/* 1-based position of the agent with the given name. */
LEXALLOC_API lexalloc_status lexalloc_instance_find_agent(const lexalloc_instance* inst,
                                                          const char* name, size_t* out);

/* Allocations (always interpreted against the instance they came from) */

LEXALLOC_API lexalloc_status lexalloc_allocation_parse(const lexalloc_instance* inst,
                                                       const char* json,
                                                       lexalloc_allocation** out);
LEXALLOC_API void lexalloc_allocation_free(lexalloc_allocation* alloc);
LEXALLOC_API lexalloc_status lexalloc_allocation_to_json(const lexalloc_instance* inst,
                                                         const lexalloc_allocation* alloc,
                                                         char** out);
LEXALLOC_API int lexalloc_allocation_is_complete(const lexalloc_allocation* alloc);

/*
 * Solving. sigma lists 1-based agent positions; pass NULL for the identity
 * order. Goods accept every criteria value. Chores accept NULL (EF1 and PO)
 * and EFX with exactly two agents (EFX and PO); anything else returns
 * LEXALLOC_ERR_UNSUPPORTED.
 *
 * lexalloc_solve_traced additionally returns one JSON record per iteration.
 */

LEXALLOC_API lexalloc_status lexalloc_solve(const lexalloc_instance* inst, const size_t* sigma,
                                            size_t sigma_len, lexalloc_criteria criteria,
                                            lexalloc_allocation** out);
LEXALLOC_API lexalloc_status lexalloc_solve_traced(const lexalloc_instance* inst,
                                                   const size_t* sigma, size_t sigma_len,
                                                   lexalloc_criteria criteria,
                                                   lexalloc_allocation** out, char** trace);

/* Verification report for a complete allocation (EF, EF1, EFX, MMS, PO). */
LEXALLOC_API lexalloc_status lexalloc_verify(const lexalloc_instance* inst,
                                             const lexalloc_allocation* alloc, char** report);

/* Per-agent maximin-share thresholds from the closed forms. */
LEXALLOC_API lexalloc_status lexalloc_mms(const lexalloc_instance* inst, char** out);

/*
 * Envy graph over all agents. potential != 0 builds the potential envy graph
 * (goods only) and also reports its sigma-first source component.
 */
LEXALLOC_API lexalloc_status lexalloc_envy_graph(const lexalloc_instance* inst,
                                                 const lexalloc_allocation* alloc, int potential,
                                                 const size_t* sigma, size_t sigma_len,
                                                 char** out);

/*
 * Exhaustive oracles. budget caps the number of allocations enumerated;
 * exceeding it returns LEXALLOC_ERR_BUDGET. *out is set to NULL when nothing
 * was found.
 */

LEXALLOC_API lexalloc_status lexalloc_oracle_ef_exists(const lexalloc_instance* inst,
                                                       uint64_t budget,
                                                       lexalloc_allocation** out);
LEXALLOC_API lexalloc_status lexalloc_oracle_dominator(const lexalloc_instance* inst,
                                                       const lexalloc_allocation* alloc,
                                                       uint64_t budget,
                                                       lexalloc_allocation** out);
LEXALLOC_API lexalloc_status lexalloc_oracle_mms(const lexalloc_instance* inst, uint64_t budget,
                                                 char** out);
LEXALLOC_API lexalloc_status lexalloc_oracle_efx_catalogue(const lexalloc_instance* inst,
                                                           uint64_t budget, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LEXALLOC_LEXALLOC_H */
