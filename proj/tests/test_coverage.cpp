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
#include <set>

#include "coverage.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cardgauge;

namespace {

CorpusRecord record(std::string id, std::set<std::string> documented,
                    std::optional<std::string> task = std::nullopt) {
  return CorpusRecord{std::move(id), std::move(task), std::move(documented)};
}

// Brute-force re-implementation of d_{t,M} over raw sets.
double oracle_cell(const std::vector<CorpusRecord>& records,
                   const std::vector<std::string>& module_leaves) {
  std::set<std::string> documented_union;
  for (const auto& r : records) {
    for (const auto& id : r.documented) documented_union.insert(id);
  }
  std::size_t hits = 0;
  for (const auto& leaf : module_leaves) {
    if (documented_union.count(leaf)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(module_leaves.size());
}

}  // namespace

TEST_CASE("coverage_cell extremes and oracle check") {
  TaxonomyLoadOptions options;
  options.allow_module_count_mismatch = true;
  const Taxonomy taxonomy = load_taxonomy(
      R"({"version":"0.1.0","modules":[
        {"id":"m","name":"M","children":[
          {"id":"l1","name":"1"},{"id":"l2","name":"2"},{"id":"l3","name":"3"},
          {"id":"l4","name":"4"},{"id":"l5","name":"5"}]},
        {"id":"empty_mod","name":"E","children":[]}
      ]})",
      options);

  SUBCASE("full coverage is 1.0") {
    const std::vector<CorpusRecord> records = {
        record("a", {"l1", "l2", "l3"}), record("b", {"l4", "l5"})};
    CHECK(coverage_cell(records, "m", taxonomy) == 1.0);
  }
  SUBCASE("no coverage is 0.0") {
    const std::vector<CorpusRecord> records = {record("a", {})};
    CHECK(coverage_cell(records, "m", taxonomy) == 0.0);
  }
  SUBCASE("three records over five leaves match the set oracle") {
    const std::vector<CorpusRecord> records = {
        record("a", {"l1", "l2"}), record("b", {"l2", "l3"}), record("c", {"l2"})};
    const double expected = oracle_cell(records, {"l1", "l2", "l3", "l4", "l5"});
    CHECK(coverage_cell(records, "m", taxonomy) == expected);
    CHECK(expected == doctest::Approx(0.6).epsilon(1e-15));
  }
  SUBCASE("module without leaves is an error") {
    try {
      (void)coverage_cell({record("a", {})}, "empty_mod", taxonomy);
      FAIL("expected EmptyModule");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyModule);
    }
  }
}

TEST_CASE("coverage_matrix shape, sorting, and unlabeled grouping") {
  const Taxonomy taxonomy =
      load_taxonomy(read_file(testutil::fixture_path("taxonomy/fixture.json")));

  SUBCASE("single record produces a 1x8 matrix") {
    const std::vector<CorpusRecord> records = {
        record("solo", {"model_name"}, "nlp")};
    const CoverageMatrix matrix = coverage_matrix(records, taxonomy);
    CHECK(matrix.task_families == std::vector<std::string>{"nlp"});
    CHECK(matrix.module_ids.size() == 8);
    REQUIRE(matrix.values.size() == 1);
    CHECK(matrix.values[0].size() == 8);
    CHECK(matrix.values[0][0] == doctest::Approx(1.0 / 3.0));
    CHECK(matrix.support[0][0] == 1);
  }

  SUBCASE("tasks are sorted and unlabeled records grouped") {
    const std::vector<CorpusRecord> records = {
        record("a", {}, "zeta"), record("b", {}), record("c", {}, "alpha")};
    const CoverageMatrix matrix = coverage_matrix(records, taxonomy);
    CHECK(matrix.task_families ==
          std::vector<std::string>{"alpha", "unlabeled", "zeta"});
  }
}

TEST_CASE("randomized coverage equals the brute-force oracle") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 30; ++round) {
    const auto generated = testutil::random_taxonomy(rng, 8, 6);
    const Taxonomy taxonomy = load_taxonomy(generated.json);
    const auto all = generated.all_leaves();

    const std::vector<std::string> tasks = {"t1", "t2", "t3"};
    std::vector<CorpusRecord> records;
    const int n = 3 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      records.push_back(record("p" + std::to_string(i),
                               testutil::random_subset(rng, all, 0.35),
                               tasks[rng() % tasks.size()]));
    }
    const CoverageMatrix matrix = coverage_matrix(records, taxonomy);

    for (std::size_t t = 0; t < matrix.task_families.size(); ++t) {
      std::vector<CorpusRecord> task_records;
      for (const auto& r : records) {
        if (r.task_family == matrix.task_families[t]) task_records.push_back(r);
      }
      for (std::size_t m = 0; m < matrix.module_ids.size(); ++m) {
        CHECK(matrix.values[t][m] ==
              oracle_cell(task_records, generated.leaves_per_module[m]));
      }
    }
  }
}

TEST_CASE("union monotonicity and row independence") {
  std::mt19937_64 rng(888);
  const auto generated = testutil::random_taxonomy(rng, 8, 6);
  const Taxonomy taxonomy = load_taxonomy(generated.json);
  const auto all = generated.all_leaves();

  std::vector<CorpusRecord> records;
  for (int i = 0; i < 6; ++i) {
    records.push_back(record("p" + std::to_string(i),
                             testutil::random_subset(rng, all, 0.3),
                             i % 2 == 0 ? "even" : "odd"));
  }
  const CoverageMatrix before = coverage_matrix(records, taxonomy);

  // Add a record to task "even": the even row never decreases, the odd row
  // is untouched.
  records.push_back(record("newcomer", testutil::random_subset(rng, all, 0.5), "even"));
  const CoverageMatrix after = coverage_matrix(records, taxonomy);

  const auto row_of = [](const CoverageMatrix& m, const std::string& task) {
    const auto it = std::find(m.task_families.begin(), m.task_families.end(), task);
    REQUIRE(it != m.task_families.end());
    return m.values[static_cast<std::size_t>(it - m.task_families.begin())];
  };
  const auto even_before = row_of(before, "even");
  const auto even_after = row_of(after, "even");
  for (std::size_t m = 0; m < even_before.size(); ++m) {
    CHECK(even_after[m] >= even_before[m]);
  }
  CHECK(row_of(before, "odd") == row_of(after, "odd"));

  // Permutation invariance over record order.
  std::shuffle(records.begin(), records.end(), rng);
  const CoverageMatrix shuffled = coverage_matrix(records, taxonomy);
  CHECK(shuffled.values == after.values);
  CHECK(shuffled.values_mean == after.values_mean);
}

TEST_CASE("csv export formatting") {
  CoverageMatrix matrix;
  matrix.taxonomy_version = "0.1.0";
  matrix.module_ids = {"m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8"};

  SUBCASE("all-ones row renders eight 1.0000 cells") {
    matrix.task_families = {"alltask"};
    matrix.values = {{1, 1, 1, 1, 1, 1, 1, 1}};
    matrix.values_mean = matrix.values;
    matrix.support = {{2, 2, 2, 2, 2, 2, 2, 2}};
    const std::string csv = export_matrix(matrix, MatrixFormat::kCsv);
    CHECK(csv ==
          "task,m1,m2,m3,m4,m5,m6,m7,m8\n"
          "alltask,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000\n");
  }
  SUBCASE("empty task list renders the header only") {
    const std::string csv = export_matrix(matrix, MatrixFormat::kCsv);
    CHECK(csv == "task,m1,m2,m3,m4,m5,m6,m7,m8\n");
  }
  SUBCASE("task labels with commas are quoted") {
    matrix.task_families = {"rag, search"};
    matrix.values = {{0.5, 0, 0, 0, 0, 0, 0, 1.0 / 3.0}};
    matrix.values_mean = matrix.values;
    matrix.support = {{1, 1, 1, 1, 1, 1, 1, 1}};
    const std::string csv = export_matrix(matrix, MatrixFormat::kCsv);
    CHECK(csv.find("\"rag, search\",0.5000") != std::string::npos);
    CHECK(csv.find("0.3333") != std::string::npos);
  }
}

TEST_CASE("structured export carries both grids") {
  const Taxonomy taxonomy =
      load_taxonomy(read_file(testutil::fixture_path("taxonomy/fixture.json")));
  const std::vector<CorpusRecord> records = {
      record("a", {"model_name", "license"}, "t"),
      record("b", {"model_name"}, "t")};
  const CoverageMatrix matrix = coverage_matrix(records, taxonomy);
  const std::string json = export_matrix(matrix, MatrixFormat::kStructured);
  CHECK(json.find("\"values\"") != std::string::npos);
  CHECK(json.find("\"values_mean\"") != std::string::npos);
  CHECK(json.find("\"support\"") != std::string::npos);
  // Union: 2/3; mean: (2/3 + 1/3) / 2 = 0.5 on model_details.
  CHECK(matrix.values[0][0] == doctest::Approx(2.0 / 3.0));
  CHECK(matrix.values_mean[0][0] == doctest::Approx(0.5));
}
