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

// Command-line front end. Everything substantive lives behind the
// cardgauge C API; this file is argument plumbing and file I/O.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cardgauge.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitUsage = 2;

[[noreturn]] void die(cg_status status) {
  std::fprintf(stderr, "cardgauge: error (%s): %s\n", cg_status_name(status),
               cg_last_error());
  std::exit(kExitUsage);
}

[[noreturn]] void die_message(const std::string& message) {
  std::fprintf(stderr, "cardgauge: error: %s\n", message.c_str());
  std::exit(kExitUsage);
}

void check(cg_status status) {
  if (status != CG_OK) die(status);
}

// Reads a file, or stdin when the path is "-".
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream stream(path, std::ios::binary);
  if (!stream) die_message("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const char* content) {
  if (path.empty() || path == "-") {
    std::fputs(content, stdout);
    return;
  }
  std::ofstream stream(path, std::ios::binary);
  if (!stream) die_message("cannot write \"" + path + "\"");
  stream << content;
}

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { cg_string_free(value); }
};

struct GlobalOptions {
  std::string taxonomy_path;
  bool allow_extra_modules = false;
  std::string placeholder_tokens_path;

  std::vector<std::string> tokens;
  std::vector<const char*> token_pointers;

  cg_parse_options parse_options() {
    cg_parse_options options{};
    if (!placeholder_tokens_path.empty() && tokens.empty()) {
      std::istringstream stream(read_input(placeholder_tokens_path));
      std::string line;
      while (std::getline(stream, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
          line.pop_back();
        }
        if (line.empty() || line[0] == '#') continue;
        tokens.push_back(line);
      }
      for (const auto& token : tokens) token_pointers.push_back(token.c_str());
    }
    if (!token_pointers.empty()) {
      options.placeholder_tokens = token_pointers.data();
      options.placeholder_token_count = token_pointers.size();
    }
    return options;
  }
};

using TaxonomyHandle = std::unique_ptr<cg_taxonomy, decltype(&cg_taxonomy_free)>;
using CardHandle = std::unique_ptr<cg_card, decltype(&cg_card_free)>;
using CorpusHandle = std::unique_ptr<cg_corpus, decltype(&cg_corpus_free)>;
using StatsHandle = std::unique_ptr<cg_stats, decltype(&cg_stats_free)>;
using ReportHandle = std::unique_ptr<cg_report, decltype(&cg_report_free)>;
using PlanHandle = std::unique_ptr<cg_fill_plan, decltype(&cg_fill_plan_free)>;
using CoverageHandle = std::unique_ptr<cg_coverage, decltype(&cg_coverage_free)>;

TaxonomyHandle load_taxonomy(GlobalOptions& global) {
  if (global.taxonomy_path.empty()) {
    die_message("no taxonomy given (use --taxonomy or CARDGAUGE_TAXONOMY)");
  }
  const std::string text = read_input(global.taxonomy_path);
  uint32_t flags = global.allow_extra_modules ? CG_TAXONOMY_ALLOW_EXTRA_MODULES : 0;
  cg_taxonomy* taxonomy = nullptr;
  check(cg_taxonomy_load_buffer(text.data(), text.size(), flags, &taxonomy));
  for (size_t i = 0; i < cg_taxonomy_warning_count(taxonomy); ++i) {
    std::fprintf(stderr, "cardgauge: warning: %s\n", cg_taxonomy_warning(taxonomy, i));
  }
  return TaxonomyHandle(taxonomy, cg_taxonomy_free);
}

CardHandle parse_card(const cg_taxonomy* taxonomy, GlobalOptions& global,
                      const std::string& path) {
  cg_parse_options options = global.parse_options();
  cg_card* card = nullptr;
  if (path == "-") {
    const std::string text = read_input(path);
    options.fallback_project_id = "stdin";
    check(cg_card_parse_buffer(taxonomy, text.data(), text.size(), &options, &card));
  } else {
    check(cg_card_parse_file(taxonomy, path.c_str(), &options, &card));
  }
  for (size_t i = 0; i < cg_card_warning_count(card); ++i) {
    std::fprintf(stderr, "cardgauge: warning: %s: %s\n", path.c_str(),
                 cg_card_warning(card, i));
  }
  return CardHandle(card, cg_card_free);
}

StatsHandle load_stats(const cg_taxonomy* taxonomy, const std::string& path) {
  if (path.empty()) die_message("no stats file given (use --stats)");
  const std::string text = read_input(path);
  cg_stats* stats = nullptr;
  check(cg_stats_load_buffer(taxonomy, text.data(), text.size(), &stats));
  return StatsHandle(stats, cg_stats_free);
}

// Corpus inputs: a directory, a .json manifest, or individual card files.
CorpusHandle build_corpus(const cg_taxonomy* taxonomy, GlobalOptions& global,
                          const std::vector<std::string>& inputs) {
  cg_corpus* corpus = nullptr;
  check(cg_corpus_new(taxonomy, &corpus));
  CorpusHandle handle(corpus, cg_corpus_free);
  cg_parse_options options = global.parse_options();
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      check(cg_corpus_add_directory(corpus, input.c_str()));
    } else if (fs::path(input).extension() == ".json") {
      check(cg_corpus_add_manifest(corpus, input.c_str()));
    } else {
      check(cg_corpus_add_file(corpus, input.c_str(), &options));
    }
  }
  return handle;
}

ReportHandle build_report(const cg_card* card, const cg_stats* stats,
                          const cg_taxonomy* taxonomy) {
  cg_report* report = nullptr;
  check(cg_report_build(card, stats, taxonomy, &report));
  return ReportHandle(report, cg_report_free);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cardgauge - model card documentation sufficiency engine"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--taxonomy", global.taxonomy_path,
                 "taxonomy file path, or '-' for stdin")
      ->envname("CARDGAUGE_TAXONOMY");
  app.add_flag("--allow-extra-modules", global.allow_extra_modules,
               "accept a module count other than the strict eight");
  app.add_option("--placeholder-tokens", global.placeholder_tokens_path,
                 "file with one placeholder token per line (replaces the default list)");

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check a taxonomy file");

  // template
  std::string template_module, template_out;
  auto* cmd_template = app.add_subcommand("template", "emit a blank card template");
  cmd_template->add_option("--module", template_module, "restrict to one module id");
  cmd_template->add_option("--out", template_out, "output file (default stdout)");

  // stats
  std::vector<std::string> stats_inputs;
  std::string stats_out;
  auto* cmd_stats = app.add_subcommand(
      "stats", "compute corpus statistics from cards, directories, or a manifest");
  cmd_stats->add_option("inputs", stats_inputs, "card files, directories, or manifest")
      ->required();
  cmd_stats->add_option("--out", stats_out, "stats file to write (default stdout)");

  // score
  std::string score_card_path, score_stats_path, score_format = "text", score_out;
  auto* cmd_score = app.add_subcommand("score", "score one card against corpus stats");
  cmd_score->add_option("card", score_card_path, "card file, or '-' for stdin")
      ->required();
  cmd_score->add_option("--stats", score_stats_path, "stats file")->required();
  cmd_score->add_option("--format", score_format, "text, json, or markdown")
      ->check(CLI::IsMember({"text", "json", "markdown"}));
  cmd_score->add_option("--out", score_out, "output file (default stdout)");

  // gate
  std::string gate_card_path, gate_stats_path, gate_policy = "strict";
  std::vector<std::string> gate_modules;
  auto* cmd_gate = app.add_subcommand(
      "gate", "exit 0/1/3 depending on sufficiency (for CI pipelines)");
  cmd_gate->add_option("card", gate_card_path, "card file, or '-' for stdin")
      ->required();
  cmd_gate->add_option("--stats", gate_stats_path, "stats file")->required();
  cmd_gate->add_option("--policy", gate_policy, "strict or allow-vacuous")
      ->check(CLI::IsMember({"strict", "allow-vacuous"}));
  cmd_gate->add_option("--modules", gate_modules,
                       "gate only these module ids (comma separated)")
      ->delimiter(',');

  // fill-plan
  std::string plan_card_path, plan_stats_path, plan_module;
  auto* cmd_plan = app.add_subcommand("fill-plan",
                                      "ordered list of what to fill first");
  cmd_plan->add_option("card", plan_card_path, "card file, or '-' for stdin")
      ->required();
  cmd_plan->add_option("--stats", plan_stats_path, "stats file")->required();
  cmd_plan->add_option("--module", plan_module, "module id")->required();

  // coverage
  std::vector<std::string> coverage_inputs;
  std::string coverage_format = "csv", coverage_out, coverage_csv;
  auto* cmd_coverage = app.add_subcommand(
      "coverage", "task-family x module coverage matrix over a corpus");
  cmd_coverage
      ->add_option("inputs", coverage_inputs, "card files, directories, or manifest")
      ->required();
  cmd_coverage->add_option("--format", coverage_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_coverage->add_option("--out", coverage_out, "output file (default stdout)");
  cmd_coverage->add_option("--csv", coverage_csv, "shorthand: write CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*cmd_validate) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    std::printf("ok: %zu modules, %zu parameters, version %s\n",
                cg_taxonomy_module_count(taxonomy.get()),
                cg_taxonomy_leaf_count(taxonomy.get()),
                cg_taxonomy_version(taxonomy.get()));
    return 0;
  }

  if (*cmd_template) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    StringGuard out;
    check(cg_template_emit(taxonomy.get(),
                           template_module.empty() ? nullptr : template_module.c_str(),
                           &out.value));
    write_output(template_out, out.value);
    return 0;
  }

  if (*cmd_stats) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    CorpusHandle corpus = build_corpus(taxonomy.get(), global, stats_inputs);
    cg_stats* stats = nullptr;
    check(cg_stats_compute(corpus.get(), &stats));
    StatsHandle stats_handle(stats, cg_stats_free);
    StringGuard serialized;
    check(cg_stats_save(stats, &serialized.value));
    StringGuard summary;
    check(cg_stats_summary(stats, &summary.value));
    if (stats_out.empty() || stats_out == "-") {
      std::fputs(serialized.value, stdout);
      std::fputs(summary.value, stderr);
    } else {
      write_output(stats_out, serialized.value);
      std::fputs(summary.value, stdout);
    }
    return 0;
  }

  if (*cmd_score) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    StatsHandle stats = load_stats(taxonomy.get(), score_stats_path);
    CardHandle card = parse_card(taxonomy.get(), global, score_card_path);
    ReportHandle report = build_report(card.get(), stats.get(), taxonomy.get());
    StringGuard out;
    check(cg_report_render(report.get(), score_format.c_str(), &out.value));
    write_output(score_out, out.value);
    return 0;
  }

  if (*cmd_gate) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    StatsHandle stats = load_stats(taxonomy.get(), gate_stats_path);
    CardHandle card = parse_card(taxonomy.get(), global, gate_card_path);
    ReportHandle report = build_report(card.get(), stats.get(), taxonomy.get());
    std::vector<const char*> modules;
    for (const auto& module_id : gate_modules) {
      modules.push_back(module_id.c_str());
    }
    const int status = cg_report_gate(report.get(), gate_policy.c_str(),
                                      modules.empty() ? nullptr : modules.data(),
                                      modules.size());
    const char* label = status == 0 ? "pass"
                        : status == 1 ? "fail (insufficient modules)"
                        : status == 3 ? "fail (vacuous modules under strict policy)"
                                      : "error";
    std::fprintf(stderr, "gate: %s (exit %d)\n", label, status);
    return status;
  }

  if (*cmd_plan) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    StatsHandle stats = load_stats(taxonomy.get(), plan_stats_path);
    CardHandle card = parse_card(taxonomy.get(), global, plan_card_path);
    cg_fill_plan* plan = nullptr;
    check(cg_fill_plan_build(card.get(), stats.get(), taxonomy.get(),
                             plan_module.c_str(), &plan));
    PlanHandle plan_handle(plan, cg_fill_plan_free);
    StringGuard out;
    check(cg_fill_plan_render(plan, &out.value));
    std::fputs(out.value, stdout);
    return 0;
  }

  if (*cmd_coverage) {
    TaxonomyHandle taxonomy = load_taxonomy(global);
    CorpusHandle corpus = build_corpus(taxonomy.get(), global, coverage_inputs);
    cg_coverage* coverage = nullptr;
    check(cg_coverage_compute(corpus.get(), &coverage));
    CoverageHandle coverage_handle(coverage, cg_coverage_free);
    if (!coverage_csv.empty()) {
      coverage_format = "csv";
      coverage_out = coverage_csv;
    }
    StringGuard out;
    check(cg_coverage_export(coverage, coverage_format.c_str(), &out.value));
    write_output(coverage_out, out.value);
    return 0;
  }

  return kExitUsage;
}
