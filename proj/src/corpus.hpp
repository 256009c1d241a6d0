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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "card.hpp"
#include "taxonomy.hpp"

namespace cardgauge {

// One project's contribution to corpus frequencies: the set of parameters
// with Documented status (placeholders do not count).
struct CorpusRecord {
  std::string project_id;
  std::optional<std::string> task_family;
  std::set<std::string> documented;

  bool operator==(const CorpusRecord&) const = default;
};

CorpusRecord record_from_card(const CardDocument& card);

// Corpus-wide counts. All counts are exact integers; ratios are derived on
// demand so the identity S_M = O_M / N holds exactly.
class CorpusStats {
 public:
  struct ModuleAggregate {
    std::string module_id;
    std::uint64_t observed = 0;  // O_M: sum of frequencies over the module
    std::uint64_t capacity = 0;  // A_M: leaf count of the module
  };

  const std::string& taxonomy_version() const { return taxonomy_version_; }
  std::uint64_t n_projects() const { return n_projects_; }
  const std::map<std::string, std::uint64_t>& freq() const { return freq_; }
  // Leaf ids in taxonomy depth-first order (the stats file order).
  const std::vector<std::string>& leaf_order() const { return leaf_order_; }
  const std::vector<ModuleAggregate>& module_aggregates() const {
    return modules_;
  }
  std::uint64_t observed_all() const { return observed_all_; }  // O_All
  std::uint64_t capacity_all() const { return capacity_all_; }  // A_All

  // Fingerprint of the stats content (or of the file it was loaded from).
  const std::string& fingerprint() const { return fingerprint_; }

  bool has_parameter(std::string_view parameter_id) const;
  std::uint64_t frequency(std::string_view parameter_id) const;

  // s_i = f_i / N.
  double prior(std::string_view parameter_id) const;

  const ModuleAggregate& module_aggregate(std::string_view module_id) const;
  double s_total(std::string_view module_id) const;         // S_M = O_M / N
  double observed_share(std::string_view module_id) const;  // O_M / O_All
  double capacity_share(std::string_view module_id) const;  // A_M / A_All

  // True when no parameter is documented anywhere (O_All = 0); every
  // baseline degenerates to zero.
  bool degenerate() const { return observed_all_ == 0; }

  // Structural equality over version, N, and counts.
  bool operator==(const CorpusStats& other) const;

 private:
  friend CorpusStats compute_stats(const std::vector<CorpusRecord>&, const Taxonomy&);
  friend CorpusStats load_stats(std::string_view, const Taxonomy&);

  void rebuild_aggregates(const Taxonomy& taxonomy);
  std::string canonical_content() const;

  std::string taxonomy_version_;
  std::uint64_t n_projects_ = 0;
  std::map<std::string, std::uint64_t> freq_;
  std::vector<std::string> leaf_order_;  // taxonomy depth-first order
  std::vector<ModuleAggregate> modules_;
  std::map<std::string, std::size_t> module_index_;
  std::uint64_t observed_all_ = 0;
  std::uint64_t capacity_all_ = 0;
  std::string fingerprint_;
};

// f_i = |{records documenting i}|, N = record count. Throws EmptyCorpus,
// DuplicateProject, or UnknownParameter.
CorpusStats compute_stats(const std::vector<CorpusRecord>& records,
                          const Taxonomy& taxonomy);

double parameter_prior(const CorpusStats& stats, std::string_view parameter_id);

// Stats file round trip. Counts are stored as integers, never floats.
std::string save_stats(const CorpusStats& stats);
CorpusStats load_stats(std::string_view source, const Taxonomy& taxonomy);

// Corpus ingestion: card files, a directory of card files (recursive,
// sorted path order; .yaml/.yml/.md), or a JSON manifest.
std::vector<CorpusRecord> ingest_directory(const std::string& directory,
                                           const Taxonomy& taxonomy,
                                           const PlaceholderPolicy& placeholders = {});
std::vector<CorpusRecord> ingest_manifest(const std::string& manifest_path,
                                          const Taxonomy& taxonomy,
                                          const PlaceholderPolicy& placeholders = {});

// Reads a whole file; throws IoError.
std::string read_file(const std::string& path);

}  // namespace cardgauge
