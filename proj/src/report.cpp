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

#include "report.hpp"

#include <algorithm>
#include <cstdio>

#include "nlohmann/json.hpp"
#include "text_util.hpp"

namespace cardgauge {

namespace {

constexpr std::size_t kFillFirstPreview = 5;

std::string format3(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return std::string(buf);
}

std::string verdict_label(Verdict verdict) {
  switch (verdict) {
    case Verdict::kInsufficient:
      return "INSUFFICIENT";
    case Verdict::kSufficient:
      return "SUFFICIENT";
    case Verdict::kVacuouslySufficient:
      return "VACUOUS";
  }
  return "INSUFFICIENT";
}

std::string score_cell(const ModuleScore& score) {
  std::string out = format3(score.cumulative_prior) + " / " +
                    format3(score.baseline.baseline) + "  " +
                    verdict_label(score.verdict);
  if (score.verdict == Verdict::kInsufficient) {
    out += "  shortfall " + format3(score.shortfall);
  }
  return out;
}

std::string fill_first_preview(const ModuleScore& score) {
  std::string out;
  const std::size_t n = std::min(kFillFirstPreview, score.missing.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ", ";
    out += score.missing[i].parameter_id + " (" + format3(score.missing[i].prior) + ")";
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "sufficient") return Verdict::kSufficient;
  if (name == "insufficient") return Verdict::kInsufficient;
  if (name == "vacuously_sufficient") return Verdict::kVacuouslySufficient;
  fail(ErrorCode::kSchema, "unknown verdict \"" + name + "\"");
}

std::string render_text(const CardReport& report) {
  std::size_t width = 24;
  for (const auto& score : report.module_scores) {
    width = std::max(width, score.module_id.size() + 2);
  }

  std::string out = "model card sufficiency report\n";
  out += "project:   " + report.project_id + "\n";
  out += "taxonomy:  " + report.taxonomy_version + "\n";
  out += "stats:     " + report.stats_fingerprint +
         " (N=" + std::to_string(report.n_projects) + ")\n\n";

  for (const auto& score : report.module_scores) {
    std::string line = score.module_id;
    line.append(width - score.module_id.size(), ' ');
    out += line + score_cell(score) + "\n";
    if (score.verdict == Verdict::kInsufficient && !score.missing.empty()) {
      out += "  fill first: " + fill_first_preview(score) + "\n";
    }
  }

  out += "\noverall: " + std::string(report.overall.pass ? "PASS" : "FAIL") +
         " (" + std::to_string(report.overall.insufficient_modules.size()) +
         " insufficient, " + std::to_string(report.overall.vacuous_modules.size()) +
         " vacuous)\n";
  if (!report.overall.insufficient_modules.empty()) {
    out += "insufficient: " + join(report.overall.insufficient_modules) + "\n";
  }
  if (!report.overall.vacuous_modules.empty()) {
    out += "vacuous: " + join(report.overall.vacuous_modules) + "\n";
  }
  return out;
}

std::string render_markdown(const CardReport& report) {
  std::string out = "# model card sufficiency report\n\n";
  out += "- project: " + report.project_id + "\n";
  out += "- taxonomy: " + report.taxonomy_version + "\n";
  out += "- stats: " + report.stats_fingerprint +
         " (N=" + std::to_string(report.n_projects) + ")\n";
  out += "- overall: **" + std::string(report.overall.pass ? "PASS" : "FAIL") + "**\n\n";

  out += "| module | cumulative | baseline | verdict | shortfall |\n";
  out += "|--------|-----------:|---------:|---------|----------:|\n";
  for (const auto& score : report.module_scores) {
    out += "| " + score.module_id + " | " + format3(score.cumulative_prior) +
           " | " + format3(score.baseline.baseline) + " | " +
           verdict_label(score.verdict) + " | " + format3(score.shortfall) + " |\n";
  }

  bool any_insufficient = false;
  for (const auto& score : report.module_scores) {
    if (score.verdict == Verdict::kInsufficient && !score.missing.empty()) {
      if (!any_insufficient) {
        out += "\n## fill first\n";
        any_insufficient = true;
      }
      out += "\n### " + score.module_id + "\n\n";
      const std::size_t n = std::min(kFillFirstPreview, score.missing.size());
      for (std::size_t i = 0; i < n; ++i) {
        out += std::to_string(i + 1) + ". " + score.missing[i].parameter_id +
               " (" + format3(score.missing[i].prior) + ")\n";
      }
    }
  }
  return out;
}

std::string render_structured(const CardReport& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1.0";
  doc["project_id"] = report.project_id;
  doc["taxonomy_version"] = report.taxonomy_version;
  doc["stats_fingerprint"] = report.stats_fingerprint;
  doc["n_projects"] = report.n_projects;
  doc["generated_at"] = report.generated_at;

  nlohmann::ordered_json modules = nlohmann::ordered_json::array();
  for (const auto& score : report.module_scores) {
    nlohmann::ordered_json entry;
    entry["module_id"] = score.module_id;
    entry["leaf_count"] = score.leaf_count;
    entry["documented_count"] = score.documented_count;
    entry["s_total"] = score.baseline.s_total;
    entry["observed_share"] = score.baseline.observed_share;
    entry["capacity_share"] = score.baseline.capacity_share;
    entry["baseline"] = score.baseline.baseline;
    entry["cumulative_prior"] = score.cumulative_prior;
    entry["verdict"] = verdict_name(score.verdict);
    entry["shortfall"] = score.shortfall;
    nlohmann::ordered_json missing = nlohmann::ordered_json::array();
    for (const auto& item : score.missing) {
      missing.push_back({{"parameter_id", item.parameter_id}, {"prior", item.prior}});
    }
    entry["missing"] = std::move(missing);
    modules.push_back(std::move(entry));
  }
  doc["modules"] = std::move(modules);
  doc["overall"] = {{"pass", report.overall.pass},
                    {"insufficient_modules", report.overall.insufficient_modules},
                    {"vacuous_modules", report.overall.vacuous_modules}};
  return doc.dump(2) + "\n";
}

}  // namespace

bool reports_equal(const CardReport& a, const CardReport& b) {
  auto scores_equal = [](const ModuleScore& x, const ModuleScore& y) {
    return x.module_id == y.module_id &&
           x.baseline.module_id == y.baseline.module_id &&
           x.baseline.s_total == y.baseline.s_total &&
           x.baseline.observed_share == y.baseline.observed_share &&
           x.baseline.capacity_share == y.baseline.capacity_share &&
           x.baseline.baseline == y.baseline.baseline &&
           x.cumulative_prior == y.cumulative_prior && x.verdict == y.verdict &&
           x.shortfall == y.shortfall && x.missing == y.missing &&
           x.documented_count == y.documented_count && x.leaf_count == y.leaf_count;
  };
  if (a.project_id != b.project_id || a.taxonomy_version != b.taxonomy_version ||
      a.stats_fingerprint != b.stats_fingerprint || a.n_projects != b.n_projects ||
      a.generated_at != b.generated_at || a.overall.pass != b.overall.pass ||
      a.overall.insufficient_modules != b.overall.insufficient_modules ||
      a.overall.vacuous_modules != b.overall.vacuous_modules ||
      a.module_scores.size() != b.module_scores.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.module_scores.size(); ++i) {
    if (!scores_equal(a.module_scores[i], b.module_scores[i])) return false;
  }
  return true;
}

CardReport build_report(const CardDocument& card, const CorpusStats& stats,
                        const Taxonomy& taxonomy) {
  CardReport report;
  report.project_id = card.project_id;
  report.taxonomy_version = taxonomy.version();
  report.stats_fingerprint = stats.fingerprint();
  report.n_projects = stats.n_projects();
  report.module_scores = score_card(card, stats, taxonomy);
  for (const auto& score : report.module_scores) {
    if (score.verdict == Verdict::kInsufficient) {
      report.overall.insufficient_modules.push_back(score.module_id);
    } else if (score.verdict == Verdict::kVacuouslySufficient) {
      report.overall.vacuous_modules.push_back(score.module_id);
    }
  }
  report.overall.pass = report.overall.insufficient_modules.empty();
  report.generated_at = utc_timestamp_now();
  return report;
}

std::string render_report(const CardReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return render_text(report);
    case ReportFormat::kMarkdown:
      return render_markdown(report);
    case ReportFormat::kStructured:
      return render_structured(report);
  }
  return render_text(report);
}

CardReport parse_report(std::string_view source) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kSchema, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    CardReport report;
    report.project_id = root.at("project_id").get<std::string>();
    report.taxonomy_version = root.at("taxonomy_version").get<std::string>();
    report.stats_fingerprint = root.at("stats_fingerprint").get<std::string>();
    report.n_projects = root.at("n_projects").get<std::uint64_t>();
    report.generated_at = root.at("generated_at").get<std::string>();
    for (const auto& entry : root.at("modules")) {
      ModuleScore score;
      score.module_id = entry.at("module_id").get<std::string>();
      score.leaf_count = entry.at("leaf_count").get<std::size_t>();
      score.documented_count = entry.at("documented_count").get<std::size_t>();
      score.baseline.module_id = score.module_id;
      score.baseline.s_total = entry.at("s_total").get<double>();
      score.baseline.observed_share = entry.at("observed_share").get<double>();
      score.baseline.capacity_share = entry.at("capacity_share").get<double>();
      score.baseline.baseline = entry.at("baseline").get<double>();
      score.cumulative_prior = entry.at("cumulative_prior").get<double>();
      score.verdict = verdict_from_name(entry.at("verdict").get<std::string>());
      score.shortfall = entry.at("shortfall").get<double>();
      for (const auto& missing : entry.at("missing")) {
        score.missing.push_back({missing.at("parameter_id").get<std::string>(),
                                 missing.at("prior").get<double>()});
      }
      report.module_scores.push_back(std::move(score));
    }
    const auto& overall = root.at("overall");
    report.overall.pass = overall.at("pass").get<bool>();
    report.overall.insufficient_modules =
        overall.at("insufficient_modules").get<std::vector<std::string>>();
    report.overall.vacuous_modules =
        overall.at("vacuous_modules").get<std::vector<std::string>>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kSchema, std::string("malformed report: ") + e.what());
  }
}

int gate_decision(const CardReport& report, const GatePolicy& policy) {
  auto gated = [&](const std::string& module_id) {
    return !policy.allowlist.has_value() || policy.allowlist->count(module_id) > 0;
  };
  bool any_insufficient = false;
  bool any_vacuous = false;
  for (const auto& score : report.module_scores) {
    if (!gated(score.module_id)) continue;
    if (score.verdict == Verdict::kInsufficient) any_insufficient = true;
    if (score.verdict == Verdict::kVacuouslySufficient) any_vacuous = true;
  }
  if (any_insufficient) return 1;
  if (any_vacuous && policy.mode == GatePolicy::Mode::kStrict) return 3;
  return 0;
}

}  // namespace cardgauge
