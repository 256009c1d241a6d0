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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "card.hpp"
#include "corpus.hpp"
#include "taxonomy.hpp"

namespace cardgauge {

// Absorbs double accumulation error at the sufficiency boundary. The
// comparison itself is non-strict ("meets or exceeds").
inline constexpr double kSufficiencyTolerance = 1e-9;

inline bool meets_baseline(double cumulative_prior, double baseline) {
  return cumulative_prior >= baseline - kSufficiencyTolerance;
}

struct ModuleBaseline {
  std::string module_id;
  double s_total = 0.0;         // S_M
  double observed_share = 0.0;  // O_M / O_All (0 when the corpus is degenerate)
  double capacity_share = 0.0;  // A_M / A_All
  double baseline = 0.0;        // (O_M/O_All + A_M/A_All) * S_M / 2
};

enum class Verdict { kInsufficient, kSufficient, kVacuouslySufficient };

const char* verdict_name(Verdict verdict);

struct MissingParameter {
  std::string parameter_id;
  double prior = 0.0;

  bool operator==(const MissingParameter&) const = default;
};

struct ModuleScore {
  std::string module_id;
  ModuleBaseline baseline;
  double cumulative_prior = 0.0;
  Verdict verdict = Verdict::kInsufficient;
  double shortfall = 0.0;  // zero unless Insufficient
  // Non-Documented leaves, descending prior, ties by id.
  std::vector<MissingParameter> missing;
  std::size_t documented_count = 0;
  std::size_t leaf_count = 0;
};

struct FillStep {
  std::string parameter_id;
  double prior = 0.0;
  double cumulative_after = 0.0;  // prefix sum over plan priors only
};

struct FillPlan {
  std::string module_id;
  double cumulative_prior = 0.0;
  double baseline = 0.0;
  std::vector<FillStep> steps;
  // Number of fills needed to reach the baseline: 0 means already met,
  // absent means unreachable even after every step.
  std::optional<std::size_t> reaches_baseline_at;
};

// BaselineScore(M) in double precision. Throws UnknownModule or
// VersionMismatch. A degenerate corpus yields baseline 0 for every module.
ModuleBaseline module_baseline(const CorpusStats& stats, const Taxonomy& taxonomy,
                               std::string_view module_id);

ModuleScore score_module(const CardDocument& card, std::string_view module_id,
                         const CorpusStats& stats, const Taxonomy& taxonomy);

// Greedy fill-first plan: missing parameters in descending prior order.
FillPlan fill_first(const CardDocument& card, std::string_view module_id,
                    const CorpusStats& stats, const Taxonomy& taxonomy);

// Every module, taxonomy order.
std::vector<ModuleScore> score_card(const CardDocument& card,
                                    const CorpusStats& stats,
                                    const Taxonomy& taxonomy);

}  // namespace cardgauge
