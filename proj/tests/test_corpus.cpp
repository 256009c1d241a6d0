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

#include <algorithm>
#include <map>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "taxonomy.hpp"

using namespace cardgauge;
using testutil::Rat;

namespace {

const Taxonomy& fixture_taxonomy() {
  static const Taxonomy taxonomy =
      load_taxonomy(read_file(testutil::fixture_path("taxonomy/fixture.json")));
  return taxonomy;
}

Taxonomy toy_taxonomy() {
  TaxonomyLoadOptions options;
  options.allow_module_count_mismatch = true;
  return load_taxonomy(read_file(testutil::fixture_path("taxonomy/toy.json")), options);
}

CorpusRecord record(std::string id, std::set<std::string> documented,
                    std::optional<std::string> task = std::nullopt) {
  return CorpusRecord{std::move(id), std::move(task), std::move(documented)};
}

}  // namespace

TEST_CASE("compute_stats counts match a hand-built table") {
  const Taxonomy taxonomy = toy_taxonomy();  // leaves: origin, consent, preprocessing, notes
  const std::vector<CorpusRecord> records = {
      record("a", {"origin", "consent"}),
      record("b", {"origin"}),
      record("c", {"origin", "preprocessing", "notes"}),
      record("d", {}),
  };
  const CorpusStats stats = compute_stats(records, taxonomy);
  CHECK(stats.n_projects() == 4);
  CHECK(stats.frequency("origin") == 3);
  CHECK(stats.frequency("consent") == 1);
  CHECK(stats.frequency("preprocessing") == 1);
  CHECK(stats.frequency("notes") == 1);
  CHECK(stats.observed_all() == 6);
  CHECK(stats.capacity_all() == 4);
  CHECK(stats.module_aggregate("data").observed == 5);
  CHECK(stats.module_aggregate("data").capacity == 3);
  CHECK(stats.module_aggregate("misc").observed == 1);
}

TEST_CASE("compute_stats error paths") {
  const Taxonomy taxonomy = toy_taxonomy();
  CHECK_THROWS_WITH_AS((void)compute_stats({}, taxonomy),
                       doctest::Contains("no records"), Error);
  CHECK_THROWS_AS((void)compute_stats({record("a", {}), record("a", {})}, taxonomy),
                  Error);
  try {
    (void)compute_stats({record("a", {"bogus_leaf"})}, taxonomy);
    FAIL("expected UnknownParameter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownParameter);
  }
}

TEST_CASE("prior examples: 24/240 and the saturation corpus") {
  const Taxonomy taxonomy = toy_taxonomy();

  SUBCASE("f_i = 24 of N = 240 gives prior 0.1") {
    std::vector<CorpusRecord> records;
    for (int i = 0; i < 240; ++i) {
      std::set<std::string> documented;
      if (i < 24) documented.insert("origin");
      records.push_back(record("p" + std::to_string(i), std::move(documented)));
    }
    const CorpusStats stats = compute_stats(records, taxonomy);
    CHECK(stats.prior("origin") == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(stats.prior("consent") == 0.0);
  }

  SUBCASE("a single all-documenting record saturates every prior") {
    const std::vector<CorpusRecord> records = {
        record("only", {"origin", "consent", "preprocessing", "notes"})};
    const CorpusStats stats = compute_stats(records, taxonomy);
    for (const ParameterSpec& leaf : taxonomy.leaves()) {
      CHECK(stats.prior(leaf.id) == 1.0);
    }
    // S_M equals A_M at saturation.
    CHECK(stats.s_total("data") == 3.0);
    CHECK(stats.s_total("misc") == 1.0);
  }
}

TEST_CASE("prior equals the rational oracle bit for bit") {
  const Taxonomy taxonomy = toy_taxonomy();
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 240; ++i) {
    std::set<std::string> documented;
    if (i < 43) documented.insert("origin");
    records.push_back(record("p" + std::to_string(i), std::move(documented)));
  }
  const CorpusStats stats = compute_stats(records, taxonomy);
  const Rat expected = Rat::of(43, 240);
  CHECK(stats.prior("origin") == expected.value());
  CHECK(stats.prior("origin") == doctest::Approx(0.17916666666666667).epsilon(1e-15));
}

TEST_CASE("frequencies are permutation invariant and grow by at most one") {
  const Taxonomy& taxonomy = fixture_taxonomy();
  std::mt19937_64 rng(11);
  const auto all = [&] {
    std::vector<std::string> ids;
    for (const auto& leaf : taxonomy.leaves()) ids.push_back(leaf.id);
    return ids;
  }();

  std::vector<CorpusRecord> records;
  for (int i = 0; i < 20; ++i) {
    records.push_back(
        record("p" + std::to_string(i), testutil::random_subset(rng, all)));
  }
  const CorpusStats base = compute_stats(records, taxonomy);

  SUBCASE("shuffled record order yields identical stats") {
    for (int round = 0; round < 5; ++round) {
      std::shuffle(records.begin(), records.end(), rng);
      CHECK(compute_stats(records, taxonomy) == base);
    }
  }

  SUBCASE("one extra record never decreases a count, and raises by at most 1") {
    auto extended = records;
    extended.push_back(record("extra", testutil::random_subset(rng, all)));
    const CorpusStats grown = compute_stats(extended, taxonomy);
    for (const auto& [id, count] : base.freq()) {
      const std::uint64_t after = grown.freq().at(id);
      CHECK(after >= count);
      CHECK(after <= count + 1);
    }
  }
}

TEST_CASE("S_M identity holds exactly: S_M = O_M / N") {
  const Taxonomy& taxonomy = fixture_taxonomy();
  std::mt19937_64 rng(13);
  std::vector<std::string> all;
  for (const auto& leaf : taxonomy.leaves()) all.push_back(leaf.id);
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 17; ++i) {
    records.push_back(record("p" + std::to_string(i), testutil::random_subset(rng, all)));
  }
  const CorpusStats stats = compute_stats(records, taxonomy);
  for (const auto& aggregate : stats.module_aggregates()) {
    const double direct = static_cast<double>(aggregate.observed) /
                          static_cast<double>(stats.n_projects());
    CHECK(stats.s_total(aggregate.module_id) == direct);
  }
}

TEST_CASE("stats save/load round trip") {
  const Taxonomy& taxonomy = fixture_taxonomy();
  std::mt19937_64 rng(17);
  std::vector<std::string> all;
  for (const auto& leaf : taxonomy.leaves()) all.push_back(leaf.id);
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 9; ++i) {
    records.push_back(record("p" + std::to_string(i), testutil::random_subset(rng, all)));
  }
  const CorpusStats stats = compute_stats(records, taxonomy);
  const CorpusStats reloaded = load_stats(save_stats(stats), taxonomy);
  CHECK(reloaded == stats);
  CHECK(reloaded.n_projects() == stats.n_projects());
  CHECK(reloaded.observed_all() == stats.observed_all());
}

TEST_CASE("hand-written stats fixture loads to the expected counts") {
  const Taxonomy& taxonomy = fixture_taxonomy();
  const CorpusStats stats =
      load_stats(read_file(testutil::fixture_path("stats/fixture_stats.json")), taxonomy);
  CHECK(stats.n_projects() == 8);
  CHECK(stats.frequency("model_name") == 8);
  CHECK(stats.frequency("incident_reporting") == 0);
  CHECK(stats.frequency("references") == 3);
  CHECK(stats.observed_all() == 74);
  CHECK(stats.capacity_all() == 24);
}

TEST_CASE("stats load errors") {
  const Taxonomy& taxonomy = fixture_taxonomy();

  SUBCASE("taxonomy version mismatch") {
    const std::string text =
        testutil::stats_json("9.9.9", 4, {{"model_name", 2}});
    try {
      (void)load_stats(text, taxonomy);
      FAIL("expected VersionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kVersionMismatch);
    }
  }
  SUBCASE("unknown parameter id") {
    const std::string text =
        testutil::stats_json("0.9.0", 4, {{"martian_field", 2}});
    CHECK_THROWS_AS((void)load_stats(text, taxonomy), Error);
  }
  SUBCASE("count exceeding N") {
    const std::string text = testutil::stats_json("0.9.0", 4, {{"model_name", 5}});
    CHECK_THROWS_AS((void)load_stats(text, taxonomy), Error);
  }
  SUBCASE("not JSON at all") {
    CHECK_THROWS_AS((void)load_stats("not json", taxonomy), Error);
  }
}

TEST_CASE("corpus ingestion from manifest and directory") {
  const Taxonomy& taxonomy = fixture_taxonomy();

  SUBCASE("manifest applies task overrides and finds all eight cards") {
    const auto records =
        ingest_manifest(testutil::fixture_path("manifest.json"), taxonomy);
    REQUIRE(records.size() == 8);
    std::map<std::string, const CorpusRecord*> by_id;
    for (const auto& r : records) by_id[r.project_id] = &r;
    REQUIRE(by_id.count("p06_clinical_summarizer") == 1);
    CHECK(by_id["p06_clinical_summarizer"]->task_family == "healthcare");
    CHECK(by_id["p07_tabular_forecaster"]->task_family == std::nullopt);
    // Narrative card documents through aliases.
    CHECK(by_id["p06_clinical_summarizer"]->documented.count("dataset_sources") == 1);
  }

  SUBCASE("directory scan picks cards in sorted order with stem fallback") {
    const auto records =
        ingest_directory(testutil::fixture_path("dir_corpus"), taxonomy);
    REQUIRE(records.size() == 2);
    CHECK(records[0].project_id == "alpha");
    CHECK(records[1].project_id == "beta");  // no project_id in file
    CHECK(records[1].documented.count("intended_use") == 1);
  }

  SUBCASE("missing directory fails with IoError") {
    CHECK_THROWS_AS((void)ingest_directory("/no/such/dir", taxonomy), Error);
  }
}

TEST_CASE("record_from_card keeps only Documented entries") {
  const Taxonomy& taxonomy = fixture_taxonomy();
  const CardDocument card = parse_card(
      "---\nproject_id: r\ntask_family: t\nmodel_details:\n"
      "  model_name: Real Name\n  license: TBD\n",
      taxonomy);
  const CorpusRecord r = record_from_card(card);
  CHECK(r.project_id == "r");
  CHECK(r.task_family == "t");
  CHECK(r.documented == std::set<std::string>{"model_name"});
}
