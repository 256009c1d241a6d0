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

#include "scoring.hpp"

#include <algorithm>

namespace cardgauge {

namespace {

void check_versions(const CorpusStats& stats, const Taxonomy& taxonomy) {
  if (stats.taxonomy_version() != taxonomy.version()) {
    fail(ErrorCode::kVersionMismatch,
         "stats taxonomy version " + stats.taxonomy_version() +
             " does not match loaded taxonomy " + taxonomy.version());
  }
}

void sort_missing(std::vector<MissingParameter>& missing) {
  std::sort(missing.begin(), missing.end(),
            [](const MissingParameter& a, const MissingParameter& b) {
              if (a.prior != b.prior) return a.prior > b.prior;
              return a.parameter_id < b.parameter_id;
            });
}

}  // namespace

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kInsufficient:
      return "insufficient";
    case Verdict::kSufficient:
      return "sufficient";
    case Verdict::kVacuouslySufficient:
      return "vacuously_sufficient";
  }
  return "insufficient";
}

ModuleBaseline module_baseline(const CorpusStats& stats, const Taxonomy& taxonomy,
                               std::string_view module_id) {
  check_versions(stats, taxonomy);
  taxonomy.module(module_id);  // UnknownModule when absent

  ModuleBaseline result;
  result.module_id = std::string(module_id);
  result.s_total = stats.s_total(module_id);
  result.observed_share = stats.observed_share(module_id);
  result.capacity_share = stats.capacity_share(module_id);
  result.baseline =
      (result.observed_share + result.capacity_share) * (result.s_total * 0.5);
  return result;
}

ModuleScore score_module(const CardDocument& card, std::string_view module_id,
                         const CorpusStats& stats, const Taxonomy& taxonomy) {
  ModuleScore score;
  score.module_id = std::string(module_id);
  score.baseline = module_baseline(stats, taxonomy, module_id);

  for (const ParameterSpec* leaf : taxonomy.module_parameters(module_id)) {
    ++score.leaf_count;
    const double prior = stats.prior(leaf->id);
    if (card.status_of(leaf->id) == EntryStatus::kDocumented) {
      ++score.documented_count;
      score.cumulative_prior += prior;
    } else {
      score.missing.push_back({leaf->id, prior});
    }
  }
  sort_missing(score.missing);

  // Baseline zero is flagged, never silently passed.
  if (score.baseline.baseline == 0.0) {
    score.verdict = Verdict::kVacuouslySufficient;
  } else if (meets_baseline(score.cumulative_prior, score.baseline.baseline)) {
    score.verdict = Verdict::kSufficient;
  } else {
    score.verdict = Verdict::kInsufficient;
  }
  score.shortfall = score.verdict == Verdict::kInsufficient
                        ? score.baseline.baseline - score.cumulative_prior
                        : 0.0;
  return score;
}

FillPlan fill_first(const CardDocument& card, std::string_view module_id,
                    const CorpusStats& stats, const Taxonomy& taxonomy) {
  const ModuleScore score = score_module(card, module_id, stats, taxonomy);

  FillPlan plan;
  plan.module_id = score.module_id;
  plan.cumulative_prior = score.cumulative_prior;
  plan.baseline = score.baseline.baseline;

  if (score.verdict != Verdict::kInsufficient) {
    plan.reaches_baseline_at = 0;  // already met
  }
  double running = 0.0;
  for (const MissingParameter& missing : score.missing) {
    running += missing.prior;
    plan.steps.push_back({missing.parameter_id, missing.prior, running});
    if (!plan.reaches_baseline_at.has_value() &&
        meets_baseline(plan.cumulative_prior + running, plan.baseline)) {
      plan.reaches_baseline_at = plan.steps.size();
    }
  }
  return plan;
}

std::vector<ModuleScore> score_card(const CardDocument& card,
                                    const CorpusStats& stats,
                                    const Taxonomy& taxonomy) {
  std::vector<ModuleScore> scores;
  scores.reserve(taxonomy.modules().size());
  for (const ModuleSpec& module : taxonomy.modules()) {
    scores.push_back(score_module(card, module.id, stats, taxonomy));
  }
  return scores;
}

}  // namespace cardgauge
