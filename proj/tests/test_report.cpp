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

#include <random>

#include "card.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "report.hpp"

using namespace cardgauge;

namespace {

struct Setup {
  Taxonomy taxonomy;
  CorpusStats stats;
};

Setup fixture_setup() {
  Taxonomy taxonomy =
      load_taxonomy(read_file(testutil::fixture_path("taxonomy/fixture.json")));
  CorpusStats stats = load_stats(
      read_file(testutil::fixture_path("stats/fixture_stats.json")), taxonomy);
  return {std::move(taxonomy), std::move(stats)};
}

CardDocument demo_card(const Taxonomy& taxonomy) {
  return parse_card(read_file(testutil::fixture_path("cards/demo_model.yaml")),
                    taxonomy);
}

// Synthetic report with chosen verdicts, for gate policy tests.
CardReport report_with(const std::vector<std::pair<std::string, Verdict>>& verdicts) {
  CardReport report;
  report.project_id = "synthetic";
  report.taxonomy_version = "0.0.0";
  report.stats_fingerprint = "fnv1a:0000000000000000";
  report.generated_at = "2026-01-01T00:00:00Z";
  for (const auto& [module_id, verdict] : verdicts) {
    ModuleScore score;
    score.module_id = module_id;
    score.baseline.module_id = module_id;
    score.verdict = verdict;
    if (verdict == Verdict::kInsufficient) {
      score.baseline.baseline = 0.5;
      score.shortfall = 0.5;
      report.overall.insufficient_modules.push_back(module_id);
    } else if (verdict == Verdict::kVacuouslySufficient) {
      report.overall.vacuous_modules.push_back(module_id);
    } else {
      score.baseline.baseline = 0.5;
      score.cumulative_prior = 0.6;
    }
    report.module_scores.push_back(std::move(score));
  }
  report.overall.pass = report.overall.insufficient_modules.empty();
  return report;
}

}  // namespace

TEST_CASE("text report carries the worked-example line format") {
  const auto worked = testutil::worked_example();
  const Taxonomy taxonomy = load_taxonomy(worked.taxonomy_json);
  const CorpusStats stats = load_stats(worked.stats_json, taxonomy);

  CardDocument card;
  card.project_id = "worked";
  for (const auto& id : worked.documented) {
    FieldEntry entry;
    entry.parameter_id = id;
    entry.content = "present";
    entry.status = EntryStatus::kDocumented;
    card.entries.emplace(id, entry);
  }

  const CardReport report = build_report(card, stats, taxonomy);
  const std::string text = render_report(report, ReportFormat::kText);
  CHECK(text.find("0.260 / 0.384  INSUFFICIENT  shortfall 0.124") !=
        std::string::npos);
  CHECK(text.find("fill first: t_fill_a (0.080), t_fill_b (0.060)") !=
        std::string::npos);
}

TEST_CASE("blank card report lists every module as not sufficient") {
  const Setup setup = fixture_setup();
  const CardDocument blank =
      parse_card(emit_template(setup.taxonomy), setup.taxonomy);
  const CardReport report = build_report(blank, setup.stats, setup.taxonomy);
  CHECK_FALSE(report.overall.pass);
  for (const auto& score : report.module_scores) {
    CHECK(score.verdict != Verdict::kSufficient);
    CHECK(score.cumulative_prior == 0.0);
  }
  const std::string text = render_report(report, ReportFormat::kText);
  CHECK(text.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("rendering the same report twice is byte-identical") {
  const Setup setup = fixture_setup();
  const CardReport report =
      build_report(demo_card(setup.taxonomy), setup.stats, setup.taxonomy);
  for (const auto format :
       {ReportFormat::kText, ReportFormat::kMarkdown, ReportFormat::kStructured}) {
    CHECK(render_report(report, format) == render_report(report, format));
  }
}

TEST_CASE("structured report round trips field for field") {
  const Setup setup = fixture_setup();
  const CardReport report =
      build_report(demo_card(setup.taxonomy), setup.stats, setup.taxonomy);
  const std::string json = render_report(report, ReportFormat::kStructured);
  const CardReport parsed = parse_report(json);
  CHECK(reports_equal(parsed, report));
  // And the re-rendering matches byte for byte.
  CHECK(render_report(parsed, ReportFormat::kStructured) == json);
}

TEST_CASE("report overall matches the fixture expectations") {
  const Setup setup = fixture_setup();
  const CardReport report =
      build_report(demo_card(setup.taxonomy), setup.stats, setup.taxonomy);
  CHECK_FALSE(report.overall.pass);
  CHECK(report.overall.insufficient_modules ==
        std::vector<std::string>{"feedback", "broader_implications"});
  CHECK(report.overall.vacuous_modules.empty());
  CHECK(report.n_projects == 8);
  CHECK(report.stats_fingerprint.substr(0, 6) == "fnv1a:");
}

TEST_CASE("markdown report renders a table") {
  const Setup setup = fixture_setup();
  const CardReport report =
      build_report(demo_card(setup.taxonomy), setup.stats, setup.taxonomy);
  const std::string md = render_report(report, ReportFormat::kMarkdown);
  CHECK(md.find("| module | cumulative | baseline | verdict | shortfall |") !=
        std::string::npos);
  CHECK(md.find("| feedback | 0.000 |") != std::string::npos);
  CHECK(md.find("## fill first") != std::string::npos);
}

TEST_CASE("gate policy matrix") {
  SUBCASE("all sufficient, strict: 0") {
    const CardReport report = report_with({{"a", Verdict::kSufficient},
                                           {"b", Verdict::kSufficient}});
    CHECK(gate_decision(report, {}) == 0);
  }
  SUBCASE("insufficient module in the allowlist: 1") {
    const CardReport report = report_with({{"a", Verdict::kInsufficient},
                                           {"b", Verdict::kSufficient}});
    GatePolicy policy;
    policy.allowlist = std::set<std::string>{"a"};
    CHECK(gate_decision(report, policy) == 1);
  }
  SUBCASE("insufficient module outside the allowlist is ignored: 0") {
    const CardReport report = report_with({{"a", Verdict::kInsufficient},
                                           {"b", Verdict::kSufficient}});
    GatePolicy policy;
    policy.allowlist = std::set<std::string>{"b"};
    CHECK(gate_decision(report, policy) == 0);
  }
  SUBCASE("vacuous module: 3 under strict, 0 under allow-vacuous") {
    const CardReport report = report_with({{"a", Verdict::kSufficient},
                                           {"b", Verdict::kVacuouslySufficient}});
    GatePolicy strict;
    CHECK(gate_decision(report, strict) == 3);
    GatePolicy lenient;
    lenient.mode = GatePolicy::Mode::kAllowVacuous;
    CHECK(gate_decision(report, lenient) == 0);
  }
  SUBCASE("insufficient outranks vacuous") {
    const CardReport report = report_with({{"a", Verdict::kInsufficient},
                                           {"b", Verdict::kVacuouslySufficient}});
    CHECK(gate_decision(report, {}) == 1);
  }
}

TEST_CASE("gate monotonicity: improving a verdict never worsens severity") {
  // Severity order: 0 (pass) < 3 (vacuous under strict) < 1 (insufficient).
  const auto severity = [](int code) { return code == 0 ? 0 : code == 3 ? 1 : 2; };
  std::mt19937_64 rng(31);
  const std::vector<Verdict> kinds = {Verdict::kInsufficient, Verdict::kSufficient,
                                      Verdict::kVacuouslySufficient};
  for (int round = 0; round < 200; ++round) {
    std::vector<std::pair<std::string, Verdict>> verdicts;
    for (int m = 0; m < 5; ++m) {
      verdicts.emplace_back("m" + std::to_string(m), kinds[rng() % kinds.size()]);
    }
    // Flip one insufficient module (if any) to sufficient.
    std::vector<std::size_t> insufficient;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].second == Verdict::kInsufficient) insufficient.push_back(i);
    }
    if (insufficient.empty()) continue;
    auto improved = verdicts;
    improved[insufficient[rng() % insufficient.size()]].second = Verdict::kSufficient;

    for (const auto mode : {GatePolicy::Mode::kStrict, GatePolicy::Mode::kAllowVacuous}) {
      GatePolicy policy;
      policy.mode = mode;
      const int before = gate_decision(report_with(verdicts), policy);
      const int after = gate_decision(report_with(improved), policy);
      CHECK(severity(after) <= severity(before));
    }
  }
}

TEST_CASE("pass flag is true exactly when no module is insufficient") {
  const CardReport failing = report_with({{"a", Verdict::kInsufficient}});
  CHECK_FALSE(failing.overall.pass);
  const CardReport passing = report_with({{"a", Verdict::kSufficient},
                                          {"b", Verdict::kVacuouslySufficient}});
  CHECK(passing.overall.pass);
}
