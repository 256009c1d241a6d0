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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scoring.hpp"

namespace cardgauge {

struct CardReport {
  struct Overall {
    bool pass = false;  // true iff insufficient_modules is empty
    std::vector<std::string> insufficient_modules;  // taxonomy order
    std::vector<std::string> vacuous_modules;       // taxonomy order
  };

  std::string project_id;
  std::string taxonomy_version;
  std::string stats_fingerprint;
  std::uint64_t n_projects = 0;
  std::vector<ModuleScore> module_scores;
  Overall overall;
  // Excluded from determinism comparisons; carried verbatim on round trip.
  std::string generated_at;
};

bool reports_equal(const CardReport& a, const CardReport& b);

CardReport build_report(const CardDocument& card, const CorpusStats& stats,
                        const Taxonomy& taxonomy);

enum class ReportFormat { kText, kStructured, kMarkdown };

// Text and markdown layouts carry no timestamp; the structured format is a
// versioned JSON schema with every field.
std::string render_report(const CardReport& report, ReportFormat format);

// Inverse of render_report(..., kStructured). Throws SchemaError.
CardReport parse_report(std::string_view source);

struct GatePolicy {
  enum class Mode { kStrict, kAllowVacuous };
  Mode mode = Mode::kStrict;
  // When set, only these modules are gated.
  std::optional<std::set<std::string>> allowlist;
};

// Exit status: 0 pass, 1 when any gated module is Insufficient, 3 when
// vacuous modules exist under the strict policy. (2 is reserved for
// usage/config errors at the CLI level.)
int gate_decision(const CardReport& report, const GatePolicy& policy);

}  // namespace cardgauge
