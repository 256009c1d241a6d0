// Copyright 2026 The Cardgauge Authors.
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

#include "cardgauge.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "card.hpp"
#include "corpus.hpp"
#include "coverage.hpp"
#include "error.hpp"
#include "report.hpp"
#include "scoring.hpp"
#include "taxonomy.hpp"
#include "text_util.hpp"

using namespace cardgauge;

struct cg_taxonomy {
  Taxonomy value;
};
struct cg_card {
  CardDocument value;
};
struct cg_corpus {
  const Taxonomy* taxonomy = nullptr;
  std::vector<CorpusRecord> records;
};
struct cg_stats {
  CorpusStats value;
};
struct cg_report {
  CardReport value;
};
struct cg_fill_plan {
  FillPlan value;
};
struct cg_coverage {
  CoverageMatrix value;
};

namespace {

thread_local std::string g_last_error;

cg_status status_from(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return CG_ERR_IO;
    case ErrorCode::kSchema:
      return CG_ERR_SCHEMA;
    case ErrorCode::kDuplicateId:
      return CG_ERR_DUPLICATE_ID;
    case ErrorCode::kAliasCollision:
      return CG_ERR_ALIAS_COLLISION;
    case ErrorCode::kDepthExceeded:
      return CG_ERR_DEPTH_EXCEEDED;
    case ErrorCode::kModuleCount:
      return CG_ERR_MODULE_COUNT;
    case ErrorCode::kParse:
      return CG_ERR_PARSE;
    case ErrorCode::kEmptyDocument:
      return CG_ERR_EMPTY_DOCUMENT;
    case ErrorCode::kUnknownModule:
      return CG_ERR_UNKNOWN_MODULE;
    case ErrorCode::kUnknownParameter:
      return CG_ERR_UNKNOWN_PARAMETER;
    case ErrorCode::kEmptyModule:
      return CG_ERR_EMPTY_MODULE;
    case ErrorCode::kEmptyCorpus:
      return CG_ERR_EMPTY_CORPUS;
    case ErrorCode::kDuplicateProject:
      return CG_ERR_DUPLICATE_PROJECT;
    case ErrorCode::kVersionMismatch:
      return CG_ERR_VERSION_MISMATCH;
    case ErrorCode::kInvalidArgument:
      return CG_ERR_INVALID_ARGUMENT;
  }
  return CG_ERR_INTERNAL;
}

cg_status set_error(cg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

cg_status handle_exception() {
  try {
    throw;
  } catch (const Error& e) {
    return set_error(status_from(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(CG_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CG_ERR_INTERNAL, "unknown error");
  }
}

cg_status invalid(const char* message) {
  return set_error(CG_ERR_INVALID_ARGUMENT, message);
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) {
    std::memcpy(out, text.c_str(), text.size() + 1);
  }
  return out;
}

CardParseOptions convert_options(const cg_parse_options* options) {
  CardParseOptions out;
  if (options == nullptr) return out;
  if (options->fallback_project_id != nullptr) {
    out.fallback_project_id = options->fallback_project_id;
  }
  if (options->task_family != nullptr) {
    out.task_family_override = std::string(options->task_family);
  }
  if (options->placeholder_tokens != nullptr) {
    out.placeholders.tokens.clear();
    for (size_t i = 0; i < options->placeholder_token_count; ++i) {
      if (options->placeholder_tokens[i] != nullptr) {
        out.placeholders.tokens.push_back(
            collapse_whitespace(to_lower(options->placeholder_tokens[i])));
      }
    }
  }
  return out;
}

void add_record(cg_corpus* corpus, CorpusRecord record) {
  for (const auto& existing : corpus->records) {
    if (existing.project_id == record.project_id) {
      fail(ErrorCode::kDuplicateProject,
           "duplicate project id \"" + record.project_id + "\"");
    }
  }
  corpus->records.push_back(std::move(record));
}

}  // namespace

extern "C" {

const char* cg_version(void) { return "1.0.0"; }

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_OK:
      return "Ok";
    case CG_ERR_IO:
      return "IoError";
    case CG_ERR_SCHEMA:
      return "SchemaError";
    case CG_ERR_DUPLICATE_ID:
      return "DuplicateId";
    case CG_ERR_ALIAS_COLLISION:
      return "AliasCollision";
    case CG_ERR_DEPTH_EXCEEDED:
      return "DepthExceeded";
    case CG_ERR_MODULE_COUNT:
      return "ModuleCountViolation";
    case CG_ERR_PARSE:
      return "ParseError";
    case CG_ERR_EMPTY_DOCUMENT:
      return "EmptyDocument";
    case CG_ERR_UNKNOWN_MODULE:
      return "UnknownModule";
    case CG_ERR_UNKNOWN_PARAMETER:
      return "UnknownParameter";
    case CG_ERR_EMPTY_MODULE:
      return "EmptyModule";
    case CG_ERR_EMPTY_CORPUS:
      return "EmptyCorpus";
    case CG_ERR_DUPLICATE_PROJECT:
      return "DuplicateProject";
    case CG_ERR_VERSION_MISMATCH:
      return "VersionMismatch";
    case CG_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case CG_ERR_INTERNAL:
      return "InternalError";
  }
  return "UnknownStatus";
}

const char* cg_last_error(void) { return g_last_error.c_str(); }

void cg_string_free(char* s) { std::free(s); }

/* ---- taxonomy ---------------------------------------------------------- */

cg_status cg_taxonomy_load_buffer(const char* data, size_t len, uint32_t flags,
                                  cg_taxonomy** out) {
  if (data == nullptr || out == nullptr) return invalid("null argument");
  try {
    TaxonomyLoadOptions options;
    options.allow_module_count_mismatch =
        (flags & CG_TAXONOMY_ALLOW_EXTRA_MODULES) != 0;
    auto handle = new cg_taxonomy{load_taxonomy({data, len}, options)};
    *out = handle;
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_taxonomy_load_file(const char* path, uint32_t flags,
                                cg_taxonomy** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  try {
    const std::string text = read_file(path);
    return cg_taxonomy_load_buffer(text.data(), text.size(), flags, out);
  } catch (...) {
    return handle_exception();
  }
}

void cg_taxonomy_free(cg_taxonomy* taxonomy) { delete taxonomy; }

const char* cg_taxonomy_version(const cg_taxonomy* taxonomy) {
  return taxonomy == nullptr ? nullptr : taxonomy->value.version().c_str();
}

size_t cg_taxonomy_module_count(const cg_taxonomy* taxonomy) {
  return taxonomy == nullptr ? 0 : taxonomy->value.modules().size();
}

size_t cg_taxonomy_leaf_count(const cg_taxonomy* taxonomy) {
  return taxonomy == nullptr ? 0 : taxonomy->value.leaves().size();
}

const char* cg_taxonomy_module_id(const cg_taxonomy* taxonomy, size_t index) {
  if (taxonomy == nullptr || index >= taxonomy->value.modules().size()) {
    return nullptr;
  }
  return taxonomy->value.modules()[index].id.c_str();
}

size_t cg_taxonomy_warning_count(const cg_taxonomy* taxonomy) {
  return taxonomy == nullptr ? 0 : taxonomy->value.warnings().size();
}

const char* cg_taxonomy_warning(const cg_taxonomy* taxonomy, size_t index) {
  if (taxonomy == nullptr || index >= taxonomy->value.warnings().size()) {
    return nullptr;
  }
  return taxonomy->value.warnings()[index].c_str();
}

cg_status cg_template_emit(const cg_taxonomy* taxonomy, const char* module_id,
                           char** out) {
  if (taxonomy == nullptr || out == nullptr) return invalid("null argument");
  try {
    std::optional<std::string_view> filter;
    if (module_id != nullptr) filter = module_id;
    *out = dup_string(emit_template(taxonomy->value, filter));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

/* ---- cards ------------------------------------------------------------- */

cg_status cg_card_parse_buffer(const cg_taxonomy* taxonomy, const char* data,
                               size_t len, const cg_parse_options* options,
                               cg_card** out) {
  if (taxonomy == nullptr || data == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    *out = new cg_card{
        parse_card({data, len}, taxonomy->value, convert_options(options))};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_card_parse_file(const cg_taxonomy* taxonomy, const char* path,
                             const cg_parse_options* options, cg_card** out) {
  if (taxonomy == nullptr || path == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    const std::string text = read_file(path);
    CardParseOptions parse_options = convert_options(options);
    if (parse_options.fallback_project_id.empty()) {
      parse_options.fallback_project_id =
          std::filesystem::path(path).stem().string();
    }
    *out = new cg_card{parse_card(text, taxonomy->value, parse_options)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

void cg_card_free(cg_card* card) { delete card; }

const char* cg_card_project_id(const cg_card* card) {
  return card == nullptr ? nullptr : card->value.project_id.c_str();
}

const char* cg_card_task_family(const cg_card* card) {
  if (card == nullptr || !card->value.task_family.has_value()) return nullptr;
  return card->value.task_family->c_str();
}

size_t cg_card_entry_count(const cg_card* card) {
  return card == nullptr ? 0 : card->value.entries.size();
}

size_t cg_card_documented_count(const cg_card* card) {
  return card == nullptr ? 0 : card->value.documented_ids().size();
}

cg_entry_status cg_card_entry_status(const cg_card* card,
                                     const char* parameter_id) {
  if (card == nullptr || parameter_id == nullptr) return CG_ENTRY_ABSENT;
  switch (card->value.status_of(parameter_id)) {
    case EntryStatus::kAbsent:
      return CG_ENTRY_ABSENT;
    case EntryStatus::kPlaceholder:
      return CG_ENTRY_PLACEHOLDER;
    case EntryStatus::kDocumented:
      return CG_ENTRY_DOCUMENTED;
  }
  return CG_ENTRY_ABSENT;
}

size_t cg_card_unknown_field_count(const cg_card* card) {
  return card == nullptr ? 0 : card->value.unknown_fields.size();
}

const char* cg_card_unknown_field(const cg_card* card, size_t index) {
  if (card == nullptr || index >= card->value.unknown_fields.size()) return nullptr;
  return card->value.unknown_fields[index].c_str();
}

size_t cg_card_warning_count(const cg_card* card) {
  return card == nullptr ? 0 : card->value.warnings.size();
}

const char* cg_card_warning(const cg_card* card, size_t index) {
  if (card == nullptr || index >= card->value.warnings.size()) return nullptr;
  return card->value.warnings[index].c_str();
}

/* ---- corpus and stats --------------------------------------------------- */

cg_status cg_corpus_new(const cg_taxonomy* taxonomy, cg_corpus** out) {
  if (taxonomy == nullptr || out == nullptr) return invalid("null argument");
  *out = new cg_corpus{&taxonomy->value, {}};
  return CG_OK;
}

void cg_corpus_free(cg_corpus* corpus) { delete corpus; }

cg_status cg_corpus_add_card(cg_corpus* corpus, const cg_card* card) {
  if (corpus == nullptr || card == nullptr) return invalid("null argument");
  try {
    add_record(corpus, record_from_card(card->value));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_corpus_add_file(cg_corpus* corpus, const char* path,
                             const cg_parse_options* options) {
  if (corpus == nullptr || path == nullptr) return invalid("null argument");
  try {
    const std::string text = read_file(path);
    CardParseOptions parse_options = convert_options(options);
    if (parse_options.fallback_project_id.empty()) {
      parse_options.fallback_project_id =
          std::filesystem::path(path).stem().string();
    }
    add_record(corpus,
               record_from_card(parse_card(text, *corpus->taxonomy, parse_options)));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_corpus_add_directory(cg_corpus* corpus, const char* path) {
  if (corpus == nullptr || path == nullptr) return invalid("null argument");
  try {
    for (auto& record : ingest_directory(path, *corpus->taxonomy)) {
      add_record(corpus, std::move(record));
    }
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_corpus_add_manifest(cg_corpus* corpus, const char* path) {
  if (corpus == nullptr || path == nullptr) return invalid("null argument");
  try {
    for (auto& record : ingest_manifest(path, *corpus->taxonomy)) {
      add_record(corpus, std::move(record));
    }
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

size_t cg_corpus_size(const cg_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->records.size();
}

cg_status cg_stats_compute(const cg_corpus* corpus, cg_stats** out) {
  if (corpus == nullptr || out == nullptr) return invalid("null argument");
  try {
    *out = new cg_stats{compute_stats(corpus->records, *corpus->taxonomy)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_stats_load_buffer(const cg_taxonomy* taxonomy, const char* data,
                               size_t len, cg_stats** out) {
  if (taxonomy == nullptr || data == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    *out = new cg_stats{load_stats({data, len}, taxonomy->value)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_stats_load_file(const cg_taxonomy* taxonomy, const char* path,
                             cg_stats** out) {
  if (taxonomy == nullptr || path == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    const std::string text = read_file(path);
    return cg_stats_load_buffer(taxonomy, text.data(), text.size(), out);
  } catch (...) {
    return handle_exception();
  }
}

void cg_stats_free(cg_stats* stats) { delete stats; }

cg_status cg_stats_save(const cg_stats* stats, char** out) {
  if (stats == nullptr || out == nullptr) return invalid("null argument");
  try {
    *out = dup_string(save_stats(stats->value));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

uint64_t cg_stats_n_projects(const cg_stats* stats) {
  return stats == nullptr ? 0 : stats->value.n_projects();
}

const char* cg_stats_fingerprint(const cg_stats* stats) {
  return stats == nullptr ? nullptr : stats->value.fingerprint().c_str();
}

cg_status cg_stats_prior(const cg_stats* stats, const char* parameter_id,
                         double* out) {
  if (stats == nullptr || parameter_id == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    *out = stats->value.prior(parameter_id);
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

cg_status cg_stats_summary(const cg_stats* stats, char** out) {
  if (stats == nullptr || out == nullptr) return invalid("null argument");
  try {
    const CorpusStats& value = stats->value;
    std::size_t width = 24;
    for (const auto& aggregate : value.module_aggregates()) {
      width = std::max(width, aggregate.module_id.size() + 2);
    }
    std::string text = "corpus statistics\n";
    text += "projects: " + std::to_string(value.n_projects()) + "\n";
    text += "taxonomy: " + value.taxonomy_version() + "\n\n";
    std::string header = "module";
    header.append(width - 6, ' ');
    text += header + "leaves  S_M\n";
    char buf[64];
    for (const auto& aggregate : value.module_aggregates()) {
      std::string line = aggregate.module_id;
      line.append(width - aggregate.module_id.size(), ' ');
      std::snprintf(buf, sizeof(buf), "%6llu  %.4f\n",
                    static_cast<unsigned long long>(aggregate.capacity),
                    value.s_total(aggregate.module_id));
      text += line + buf;
    }
    if (value.degenerate()) {
      text += "\nwarning: no parameter is documented anywhere in the corpus; "
              "every baseline is zero\n";
    }
    *out = dup_string(text);
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

/* ---- scoring and reports ------------------------------------------------ */

cg_status cg_report_build(const cg_card* card, const cg_stats* stats,
                          const cg_taxonomy* taxonomy, cg_report** out) {
  if (card == nullptr || stats == nullptr || taxonomy == nullptr ||
      out == nullptr) {
    return invalid("null argument");
  }
  try {
    *out = new cg_report{
        build_report(card->value, stats->value, taxonomy->value)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

void cg_report_free(cg_report* report) { delete report; }

cg_status cg_report_render(const cg_report* report, const char* format,
                           char** out) {
  if (report == nullptr || format == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  const std::string name(format);
  ReportFormat report_format;
  if (name == "text") {
    report_format = ReportFormat::kText;
  } else if (name == "json") {
    report_format = ReportFormat::kStructured;
  } else if (name == "markdown") {
    report_format = ReportFormat::kMarkdown;
  } else {
    return invalid("format must be one of text/json/markdown");
  }
  try {
    *out = dup_string(render_report(report->value, report_format));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

int cg_report_pass(const cg_report* report) {
  return report != nullptr && report->value.overall.pass ? 1 : 0;
}

size_t cg_report_module_count(const cg_report* report) {
  return report == nullptr ? 0 : report->value.module_scores.size();
}

const char* cg_report_module_id(const cg_report* report, size_t index) {
  if (report == nullptr || index >= report->value.module_scores.size()) {
    return nullptr;
  }
  return report->value.module_scores[index].module_id.c_str();
}

cg_status cg_report_module_values(const cg_report* report, size_t index,
                                  double* cumulative_prior, double* baseline,
                                  double* shortfall) {
  if (report == nullptr || index >= report->value.module_scores.size()) {
    return invalid("module index out of range");
  }
  const ModuleScore& score = report->value.module_scores[index];
  if (cumulative_prior != nullptr) *cumulative_prior = score.cumulative_prior;
  if (baseline != nullptr) *baseline = score.baseline.baseline;
  if (shortfall != nullptr) *shortfall = score.shortfall;
  return CG_OK;
}

cg_verdict cg_report_module_verdict(const cg_report* report, size_t index) {
  if (report == nullptr || index >= report->value.module_scores.size()) {
    return CG_VERDICT_INSUFFICIENT;
  }
  switch (report->value.module_scores[index].verdict) {
    case Verdict::kInsufficient:
      return CG_VERDICT_INSUFFICIENT;
    case Verdict::kSufficient:
      return CG_VERDICT_SUFFICIENT;
    case Verdict::kVacuouslySufficient:
      return CG_VERDICT_VACUOUSLY_SUFFICIENT;
  }
  return CG_VERDICT_INSUFFICIENT;
}

int cg_report_gate(const cg_report* report, const char* policy,
                   const char* const* modules, size_t module_count) {
  if (report == nullptr) return 2;
  GatePolicy gate_policy;
  if (policy == nullptr || std::strcmp(policy, "strict") == 0) {
    gate_policy.mode = GatePolicy::Mode::kStrict;
  } else if (std::strcmp(policy, "allow-vacuous") == 0) {
    gate_policy.mode = GatePolicy::Mode::kAllowVacuous;
  } else {
    set_error(CG_ERR_INVALID_ARGUMENT, "policy must be strict or allow-vacuous");
    return 2;
  }
  if (modules != nullptr) {
    std::set<std::string> allowlist;
    for (size_t i = 0; i < module_count; ++i) {
      if (modules[i] != nullptr) allowlist.insert(modules[i]);
    }
    gate_policy.allowlist = std::move(allowlist);
  }
  return gate_decision(report->value, gate_policy);
}

cg_status cg_fill_plan_build(const cg_card* card, const cg_stats* stats,
                             const cg_taxonomy* taxonomy, const char* module_id,
                             cg_fill_plan** out) {
  if (card == nullptr || stats == nullptr || taxonomy == nullptr ||
      module_id == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  try {
    *out = new cg_fill_plan{
        fill_first(card->value, module_id, stats->value, taxonomy->value)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

void cg_fill_plan_free(cg_fill_plan* plan) { delete plan; }

size_t cg_fill_plan_step_count(const cg_fill_plan* plan) {
  return plan == nullptr ? 0 : plan->value.steps.size();
}

cg_status cg_fill_plan_step(const cg_fill_plan* plan, size_t index,
                            const char** parameter_id, double* prior,
                            double* cumulative_after) {
  if (plan == nullptr || index >= plan->value.steps.size()) {
    return invalid("step index out of range");
  }
  const FillStep& step = plan->value.steps[index];
  if (parameter_id != nullptr) *parameter_id = step.parameter_id.c_str();
  if (prior != nullptr) *prior = step.prior;
  if (cumulative_after != nullptr) *cumulative_after = step.cumulative_after;
  return CG_OK;
}

int cg_fill_plan_reached(const cg_fill_plan* plan, size_t* steps) {
  if (plan == nullptr || !plan->value.reaches_baseline_at.has_value()) return 0;
  if (steps != nullptr) *steps = *plan->value.reaches_baseline_at;
  return 1;
}

cg_status cg_fill_plan_render(const cg_fill_plan* plan, char** out) {
  if (plan == nullptr || out == nullptr) return invalid("null argument");
  try {
    const FillPlan& value = plan->value;
    char buf[160];
    std::string text = "fill plan: " + value.module_id + "\n";
    std::snprintf(buf, sizeof(buf), "cumulative %.3f  baseline %.3f\n",
                  value.cumulative_prior, value.baseline);
    text += buf;
    if (value.reaches_baseline_at.has_value() &&
        *value.reaches_baseline_at == 0) {
      text += "already met\n";
    }
    for (std::size_t i = 0; i < value.steps.size(); ++i) {
      const FillStep& step = value.steps[i];
      std::snprintf(buf, sizeof(buf), "%3zu. %s  prior %.4f  cumulative %.4f",
                    i + 1, step.parameter_id.c_str(), step.prior,
                    value.cumulative_prior + step.cumulative_after);
      text += buf;
      if (value.reaches_baseline_at.has_value() &&
          *value.reaches_baseline_at == i + 1) {
        text += "  <- baseline met";
      }
      text += "\n";
    }
    if (value.reaches_baseline_at.has_value()) {
      if (*value.reaches_baseline_at > 0) {
        text += "baseline met after " +
                std::to_string(*value.reaches_baseline_at) + " fills\n";
      }
    } else {
      text += "baseline unreachable\n";
    }
    *out = dup_string(text);
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

/* ---- coverage ----------------------------------------------------------- */

cg_status cg_coverage_compute(const cg_corpus* corpus, cg_coverage** out) {
  if (corpus == nullptr || out == nullptr) return invalid("null argument");
  try {
    *out = new cg_coverage{coverage_matrix(corpus->records, *corpus->taxonomy)};
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

void cg_coverage_free(cg_coverage* coverage) { delete coverage; }

size_t cg_coverage_task_count(const cg_coverage* coverage) {
  return coverage == nullptr ? 0 : coverage->value.task_families.size();
}

const char* cg_coverage_task(const cg_coverage* coverage, size_t index) {
  if (coverage == nullptr || index >= coverage->value.task_families.size()) {
    return nullptr;
  }
  return coverage->value.task_families[index].c_str();
}

size_t cg_coverage_module_count(const cg_coverage* coverage) {
  return coverage == nullptr ? 0 : coverage->value.module_ids.size();
}

const char* cg_coverage_module_id(const cg_coverage* coverage, size_t index) {
  if (coverage == nullptr || index >= coverage->value.module_ids.size()) {
    return nullptr;
  }
  return coverage->value.module_ids[index].c_str();
}

cg_status cg_coverage_value(const cg_coverage* coverage, size_t task_index,
                            size_t module_index, double* out) {
  if (coverage == nullptr || out == nullptr ||
      task_index >= coverage->value.values.size() ||
      module_index >= coverage->value.module_ids.size()) {
    return invalid("coverage index out of range");
  }
  *out = coverage->value.values[task_index][module_index];
  return CG_OK;
}

cg_status cg_coverage_export(const cg_coverage* coverage, const char* format,
                             char** out) {
  if (coverage == nullptr || format == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  const std::string name(format);
  MatrixFormat matrix_format;
  if (name == "csv") {
    matrix_format = MatrixFormat::kCsv;
  } else if (name == "json") {
    matrix_format = MatrixFormat::kStructured;
  } else {
    return invalid("format must be csv or json");
  }
  try {
    *out = dup_string(export_matrix(coverage->value, matrix_format));
    return CG_OK;
  } catch (...) {
    return handle_exception();
  }
}

}  // extern "C"
