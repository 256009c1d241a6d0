/* Copyright 2026 The Cardgauge Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* cardgauge C API.
 *
 * Documentation-sufficiency engine for AI model cards: loads a hierarchical
 * parameter taxonomy, parses model cards, derives corpus priors, scores
 * module sufficiency against corpus baselines, plans what to fill first,
 * and exports coverage diagnostics and reports.
 *
 * Conventions:
 *   - Every fallible function returns cg_status; CG_OK is 0.
 *   - On failure, cg_last_error() returns a thread-local message.
 *   - Out-parameters are written only on CG_OK.
 *   - `char**` results are heap strings owned by the caller; release them
 *     with cg_string_free(). `const char*` results are borrowed and stay
 *     valid while their handle is alive.
 *   - Handles are destroyed with their matching *_free function. A handle
 *     created from another (e.g. a corpus from a taxonomy) must not outlive
 *     its parent.
 */

#ifndef CARDGAUGE_H
#define CARDGAUGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CG_API
#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_IO = 1,
  CG_ERR_SCHEMA = 2,
  CG_ERR_DUPLICATE_ID = 3,
  CG_ERR_ALIAS_COLLISION = 4,
  CG_ERR_DEPTH_EXCEEDED = 5,
  CG_ERR_MODULE_COUNT = 6,
  CG_ERR_PARSE = 7,
  CG_ERR_EMPTY_DOCUMENT = 8,
  CG_ERR_UNKNOWN_MODULE = 9,
  CG_ERR_UNKNOWN_PARAMETER = 10,
  CG_ERR_EMPTY_MODULE = 11,
  CG_ERR_EMPTY_CORPUS = 12,
  CG_ERR_DUPLICATE_PROJECT = 13,
  CG_ERR_VERSION_MISMATCH = 14,
  CG_ERR_INVALID_ARGUMENT = 15,
  CG_ERR_INTERNAL = 16
} cg_status;

typedef enum cg_entry_status {
  CG_ENTRY_ABSENT = 0,
  CG_ENTRY_PLACEHOLDER = 1,
  CG_ENTRY_DOCUMENTED = 2
} cg_entry_status;

typedef enum cg_verdict {
  CG_VERDICT_INSUFFICIENT = 0,
  CG_VERDICT_SUFFICIENT = 1,
  CG_VERDICT_VACUOUSLY_SUFFICIENT = 2
} cg_verdict;

typedef struct cg_taxonomy cg_taxonomy;
typedef struct cg_card cg_card;
typedef struct cg_corpus cg_corpus;
typedef struct cg_stats cg_stats;
typedef struct cg_report cg_report;
typedef struct cg_fill_plan cg_fill_plan;
typedef struct cg_coverage cg_coverage;

/* Library version string, e.g. "1.0.0". */
CG_API const char* cg_version(void);

/* Stable name for a status code, e.g. "AliasCollision". */
CG_API const char* cg_status_name(cg_status status);

/* Message of the most recent failure on this thread ("" when none). */
CG_API const char* cg_last_error(void);

CG_API void cg_string_free(char* s);

/* ---- taxonomy ---------------------------------------------------------- */

/* Accept a module count other than the strict eight. */
#define CG_TAXONOMY_ALLOW_EXTRA_MODULES 0x1u

CG_API cg_status cg_taxonomy_load_buffer(const char* data, size_t len,
                                         uint32_t flags, cg_taxonomy** out);
CG_API cg_status cg_taxonomy_load_file(const char* path, uint32_t flags,
                                       cg_taxonomy** out);
CG_API void cg_taxonomy_free(cg_taxonomy* taxonomy);

CG_API const char* cg_taxonomy_version(const cg_taxonomy* taxonomy);
CG_API size_t cg_taxonomy_module_count(const cg_taxonomy* taxonomy);
CG_API size_t cg_taxonomy_leaf_count(const cg_taxonomy* taxonomy);
/* Module id at position `index` (taxonomy order); NULL when out of range. */
CG_API const char* cg_taxonomy_module_id(const cg_taxonomy* taxonomy, size_t index);
CG_API size_t cg_taxonomy_warning_count(const cg_taxonomy* taxonomy);
CG_API const char* cg_taxonomy_warning(const cg_taxonomy* taxonomy, size_t index);

/* Blank canonical card. `module_id` NULL emits every module. */
CG_API cg_status cg_template_emit(const cg_taxonomy* taxonomy,
                                  const char* module_id, char** out);

/* ---- cards ------------------------------------------------------------- */

typedef struct cg_parse_options {
  /* Project id used when the document names none (may be NULL). */
  const char* fallback_project_id;
  /* Replaces the document's task_family when non-NULL. */
  const char* task_family;
  /* Replaces the default placeholder token list when non-NULL. */
  const char* const* placeholder_tokens;
  size_t placeholder_token_count;
} cg_parse_options;

CG_API cg_status cg_card_parse_buffer(const cg_taxonomy* taxonomy,
                                      const char* data, size_t len,
                                      const cg_parse_options* options,
                                      cg_card** out);
/* File variant; the fallback project id defaults to the file stem. */
CG_API cg_status cg_card_parse_file(const cg_taxonomy* taxonomy,
                                    const char* path,
                                    const cg_parse_options* options,
                                    cg_card** out);
CG_API void cg_card_free(cg_card* card);

CG_API const char* cg_card_project_id(const cg_card* card);
/* NULL when the card carries no task family. */
CG_API const char* cg_card_task_family(const cg_card* card);
CG_API size_t cg_card_entry_count(const cg_card* card);
CG_API size_t cg_card_documented_count(const cg_card* card);
CG_API cg_entry_status cg_card_entry_status(const cg_card* card,
                                            const char* parameter_id);
CG_API size_t cg_card_unknown_field_count(const cg_card* card);
CG_API const char* cg_card_unknown_field(const cg_card* card, size_t index);
CG_API size_t cg_card_warning_count(const cg_card* card);
CG_API const char* cg_card_warning(const cg_card* card, size_t index);

/* ---- corpus and stats --------------------------------------------------- */

CG_API cg_status cg_corpus_new(const cg_taxonomy* taxonomy, cg_corpus** out);
CG_API void cg_corpus_free(cg_corpus* corpus);
CG_API cg_status cg_corpus_add_card(cg_corpus* corpus, const cg_card* card);
CG_API cg_status cg_corpus_add_file(cg_corpus* corpus, const char* path,
                                    const cg_parse_options* options);
/* Recursive scan for .yaml/.yml/.md card files, sorted path order. */
CG_API cg_status cg_corpus_add_directory(cg_corpus* corpus, const char* path);
/* JSON manifest: {"cards": [{"path": ..., "task_family"?: ..,
 * "project_id"?: ..}, ...]}; relative paths resolve against the manifest. */
CG_API cg_status cg_corpus_add_manifest(cg_corpus* corpus, const char* path);
CG_API size_t cg_corpus_size(const cg_corpus* corpus);

CG_API cg_status cg_stats_compute(const cg_corpus* corpus, cg_stats** out);
CG_API cg_status cg_stats_load_buffer(const cg_taxonomy* taxonomy,
                                      const char* data, size_t len,
                                      cg_stats** out);
CG_API cg_status cg_stats_load_file(const cg_taxonomy* taxonomy,
                                    const char* path, cg_stats** out);
CG_API void cg_stats_free(cg_stats* stats);

/* Serialized stats document (counts as integers, never floats). */
CG_API cg_status cg_stats_save(const cg_stats* stats, char** out);
CG_API uint64_t cg_stats_n_projects(const cg_stats* stats);
CG_API const char* cg_stats_fingerprint(const cg_stats* stats);
/* s_i = f_i / N. */
CG_API cg_status cg_stats_prior(const cg_stats* stats, const char* parameter_id,
                                double* out);
/* Human-readable N and per-module S_M table. */
CG_API cg_status cg_stats_summary(const cg_stats* stats, char** out);

/* ---- scoring and reports ------------------------------------------------ */

CG_API cg_status cg_report_build(const cg_card* card, const cg_stats* stats,
                                 const cg_taxonomy* taxonomy, cg_report** out);
CG_API void cg_report_free(cg_report* report);

/* `format` is one of "text", "json", "markdown". */
CG_API cg_status cg_report_render(const cg_report* report, const char* format,
                                  char** out);
CG_API int cg_report_pass(const cg_report* report);
CG_API size_t cg_report_module_count(const cg_report* report);
CG_API const char* cg_report_module_id(const cg_report* report, size_t index);
CG_API cg_status cg_report_module_values(const cg_report* report, size_t index,
                                         double* cumulative_prior,
                                         double* baseline, double* shortfall);
CG_API cg_verdict cg_report_module_verdict(const cg_report* report, size_t index);

/* Exit status under `policy` ("strict" or "allow-vacuous"): 0 pass, 1 any
 * gated module insufficient, 3 vacuous modules under strict. `modules`
 * (may be NULL) restricts gating to the listed module ids. */
CG_API int cg_report_gate(const cg_report* report, const char* policy,
                          const char* const* modules, size_t module_count);

CG_API cg_status cg_fill_plan_build(const cg_card* card, const cg_stats* stats,
                                    const cg_taxonomy* taxonomy,
                                    const char* module_id, cg_fill_plan** out);
CG_API void cg_fill_plan_free(cg_fill_plan* plan);
CG_API size_t cg_fill_plan_step_count(const cg_fill_plan* plan);
CG_API cg_status cg_fill_plan_step(const cg_fill_plan* plan, size_t index,
                                   const char** parameter_id, double* prior,
                                   double* cumulative_after);
/* Returns 1 and writes the number of fills needed (0 = already met) when
 * the baseline is reachable; returns 0 otherwise. */
CG_API int cg_fill_plan_reached(const cg_fill_plan* plan, size_t* steps);
/* Human-readable ordered plan. */
CG_API cg_status cg_fill_plan_render(const cg_fill_plan* plan, char** out);

/* ---- coverage ----------------------------------------------------------- */

CG_API cg_status cg_coverage_compute(const cg_corpus* corpus, cg_coverage** out);
CG_API void cg_coverage_free(cg_coverage* coverage);
CG_API size_t cg_coverage_task_count(const cg_coverage* coverage);
CG_API const char* cg_coverage_task(const cg_coverage* coverage, size_t index);
CG_API size_t cg_coverage_module_count(const cg_coverage* coverage);
CG_API const char* cg_coverage_module_id(const cg_coverage* coverage, size_t index);
CG_API cg_status cg_coverage_value(const cg_coverage* coverage, size_t task_index,
                                   size_t module_index, double* out);
/* `format` is "csv" or "json". */
CG_API cg_status cg_coverage_export(const cg_coverage* coverage,
                                    const char* format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CARDGAUGE_H */
