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

#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlohmann/json.hpp"
#include "text_util.hpp"

namespace cardgauge {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

bool card_extension(const fs::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".yaml" || ext == ".yml" || ext == ".md";
}

CorpusRecord record_from_file(const fs::path& path, const Taxonomy& taxonomy,
                              const PlaceholderPolicy& placeholders,
                              const std::optional<std::string>& task_family,
                              const std::optional<std::string>& project_id) {
  CardParseOptions options;
  options.fallback_project_id = path.stem().string();
  options.task_family_override = task_family;
  options.placeholders = placeholders;
  CardDocument card;
  try {
    card = parse_card(read_file(path.string()), taxonomy, options);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  CorpusRecord record = record_from_card(card);
  if (project_id.has_value()) record.project_id = *project_id;
  return record;
}

}  // namespace

CorpusRecord record_from_card(const CardDocument& card) {
  return CorpusRecord{card.project_id, card.task_family, card.documented_ids()};
}

bool CorpusStats::has_parameter(std::string_view parameter_id) const {
  return freq_.count(std::string(parameter_id)) > 0;
}

std::uint64_t CorpusStats::frequency(std::string_view parameter_id) const {
  auto it = freq_.find(std::string(parameter_id));
  if (it == freq_.end()) {
    fail(ErrorCode::kUnknownParameter,
         "unknown parameter \"" + std::string(parameter_id) + "\"");
  }
  return it->second;
}

double CorpusStats::prior(std::string_view parameter_id) const {
  return static_cast<double>(frequency(parameter_id)) /
         static_cast<double>(n_projects_);
}

const CorpusStats::ModuleAggregate& CorpusStats::module_aggregate(
    std::string_view module_id) const {
  auto it = module_index_.find(std::string(module_id));
  if (it == module_index_.end()) {
    fail(ErrorCode::kUnknownModule,
         "unknown module \"" + std::string(module_id) + "\"");
  }
  return modules_[it->second];
}

double CorpusStats::s_total(std::string_view module_id) const {
  return static_cast<double>(module_aggregate(module_id).observed) /
         static_cast<double>(n_projects_);
}

double CorpusStats::observed_share(std::string_view module_id) const {
  const auto& aggregate = module_aggregate(module_id);
  if (observed_all_ == 0) return 0.0;
  return static_cast<double>(aggregate.observed) /
         static_cast<double>(observed_all_);
}

double CorpusStats::capacity_share(std::string_view module_id) const {
  const auto& aggregate = module_aggregate(module_id);
  return static_cast<double>(aggregate.capacity) /
         static_cast<double>(capacity_all_);
}

bool CorpusStats::operator==(const CorpusStats& other) const {
  return taxonomy_version_ == other.taxonomy_version_ &&
         n_projects_ == other.n_projects_ && freq_ == other.freq_;
}

void CorpusStats::rebuild_aggregates(const Taxonomy& taxonomy) {
  modules_.clear();
  module_index_.clear();
  leaf_order_.clear();
  observed_all_ = 0;
  capacity_all_ = 0;
  for (const ModuleSpec& module : taxonomy.modules()) {
    ModuleAggregate aggregate;
    aggregate.module_id = module.id;
    for (const auto& leaf_id : module.leaf_ids) {
      leaf_order_.push_back(leaf_id);
      aggregate.observed += freq_.at(leaf_id);
      aggregate.capacity += 1;
    }
    observed_all_ += aggregate.observed;
    capacity_all_ += aggregate.capacity;
    module_index_.emplace(aggregate.module_id, modules_.size());
    modules_.push_back(std::move(aggregate));
  }
}

std::string CorpusStats::canonical_content() const {
  std::string content = taxonomy_version_ + "\n" + std::to_string(n_projects_) + "\n";
  for (const auto& id : leaf_order_) {
    content += id + "=" + std::to_string(freq_.at(id)) + "\n";
  }
  return content;
}

CorpusStats compute_stats(const std::vector<CorpusRecord>& records,
                          const Taxonomy& taxonomy) {
  if (records.empty()) {
    fail(ErrorCode::kEmptyCorpus, "corpus has no records");
  }
  std::set<std::string> project_ids;
  for (const auto& record : records) {
    if (!project_ids.insert(record.project_id).second) {
      fail(ErrorCode::kDuplicateProject,
           "duplicate project id \"" + record.project_id + "\"");
    }
  }

  CorpusStats stats;
  stats.taxonomy_version_ = taxonomy.version();
  stats.n_projects_ = records.size();
  for (const ParameterSpec& leaf : taxonomy.leaves()) {
    stats.freq_.emplace(leaf.id, 0);
  }
  for (const auto& record : records) {
    for (const auto& id : record.documented) {
      auto it = stats.freq_.find(id);
      if (it == stats.freq_.end()) {
        fail(ErrorCode::kUnknownParameter,
             "record \"" + record.project_id +
                 "\" documents unknown parameter \"" + id + "\"");
      }
      ++it->second;
    }
  }
  stats.rebuild_aggregates(taxonomy);
  stats.fingerprint_ = fingerprint_hex(stats.canonical_content());
  return stats;
}

double parameter_prior(const CorpusStats& stats, std::string_view parameter_id) {
  return stats.prior(parameter_id);
}

std::string save_stats(const CorpusStats& stats) {
  ordered_json doc;
  doc["taxonomy_version"] = stats.taxonomy_version();
  doc["n_projects"] = stats.n_projects();
  ordered_json freq = ordered_json::object();
  for (const auto& id : stats.leaf_order()) {
    freq[id] = stats.freq().at(id);
  }
  doc["freq"] = std::move(freq);
  doc["generated_at"] = utc_timestamp_now();
  return doc.dump(2) + "\n";
}

CorpusStats load_stats(std::string_view source, const Taxonomy& taxonomy) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kSchema, std::string("stats file is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    fail(ErrorCode::kSchema, "stats root must be a JSON object");
  }
  if (!root.contains("taxonomy_version") || !root.at("taxonomy_version").is_string()) {
    fail(ErrorCode::kSchema, "stats file requires string \"taxonomy_version\"");
  }
  if (!root.contains("n_projects") || !root.at("n_projects").is_number_unsigned() ||
      root.at("n_projects").get<std::uint64_t>() == 0) {
    fail(ErrorCode::kSchema, "stats file requires positive integer \"n_projects\"");
  }
  if (!root.contains("freq") || !root.at("freq").is_object()) {
    fail(ErrorCode::kSchema, "stats file requires object \"freq\"");
  }

  CorpusStats stats;
  stats.taxonomy_version_ = root.at("taxonomy_version").get<std::string>();
  if (stats.taxonomy_version_ != taxonomy.version()) {
    fail(ErrorCode::kVersionMismatch,
         "stats were built against taxonomy version " + stats.taxonomy_version_ +
             ", loaded taxonomy is " + taxonomy.version());
  }
  stats.n_projects_ = root.at("n_projects").get<std::uint64_t>();
  for (const ParameterSpec& leaf : taxonomy.leaves()) {
    stats.freq_.emplace(leaf.id, 0);
  }
  for (const auto& item : root.at("freq").items()) {
    auto it = stats.freq_.find(item.key());
    if (it == stats.freq_.end()) {
      fail(ErrorCode::kSchema,
           "freq contains unknown parameter id \"" + item.key() + "\"");
    }
    if (!item.value().is_number_unsigned()) {
      fail(ErrorCode::kSchema,
           "freq of \"" + item.key() + "\" must be a non-negative integer");
    }
    const std::uint64_t count = item.value().get<std::uint64_t>();
    if (count > stats.n_projects_) {
      fail(ErrorCode::kSchema,
           "freq of \"" + item.key() + "\" exceeds n_projects");
    }
    it->second = count;
  }
  stats.rebuild_aggregates(taxonomy);
  stats.fingerprint_ = fingerprint_hex(source);
  return stats;
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    fail(ErrorCode::kIo, "cannot open \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

std::vector<CorpusRecord> ingest_directory(const std::string& directory,
                                           const Taxonomy& taxonomy,
                                           const PlaceholderPolicy& placeholders) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    fail(ErrorCode::kIo, "\"" + directory + "\" is not a directory");
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(directory)) {
    if (entry.is_regular_file() && card_extension(entry.path())) {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.generic_string() < b.generic_string();
            });
  std::vector<CorpusRecord> records;
  records.reserve(paths.size());
  for (const auto& path : paths) {
    records.push_back(record_from_file(path, taxonomy, placeholders,
                                       std::nullopt, std::nullopt));
  }
  return records;
}

std::vector<CorpusRecord> ingest_manifest(const std::string& manifest_path,
                                          const Taxonomy& taxonomy,
                                          const PlaceholderPolicy& placeholders) {
  json root;
  try {
    root = json::parse(read_file(manifest_path));
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kSchema,
         manifest_path + " is not valid JSON: " + std::string(e.what()));
  }
  if (!root.is_object() || !root.contains("cards") || !root.at("cards").is_array()) {
    fail(ErrorCode::kSchema,
         manifest_path + ": manifest requires a \"cards\" array");
  }
  const fs::path base = fs::path(manifest_path).parent_path();
  std::vector<CorpusRecord> records;
  for (const json& entry : root.at("cards")) {
    if (!entry.is_object() || !entry.contains("path") || !entry.at("path").is_string()) {
      fail(ErrorCode::kSchema,
           manifest_path + ": every manifest entry requires a string \"path\"");
    }
    fs::path path = entry.at("path").get<std::string>();
    if (path.is_relative()) path = base / path;
    std::optional<std::string> task_family;
    if (entry.contains("task_family")) {
      if (!entry.at("task_family").is_string()) {
        fail(ErrorCode::kSchema, manifest_path + ": \"task_family\" must be a string");
      }
      task_family = entry.at("task_family").get<std::string>();
    }
    std::optional<std::string> project_id;
    if (entry.contains("project_id")) {
      if (!entry.at("project_id").is_string()) {
        fail(ErrorCode::kSchema, manifest_path + ": \"project_id\" must be a string");
      }
      project_id = entry.at("project_id").get<std::string>();
    }
    records.push_back(
        record_from_file(path, taxonomy, placeholders, task_family, project_id));
  }
  return records;
}

}  // namespace cardgauge
