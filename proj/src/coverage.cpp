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

#include "coverage.hpp"

#include <cstdio>
#include <map>
#include <set>

#include "nlohmann/json.hpp"

namespace cardgauge {

namespace {

constexpr const char* kUnlabeledTask = "unlabeled";

std::string task_label(const CorpusRecord& record) {
  if (!record.task_family.has_value() || record.task_family->empty()) {
    return kUnlabeledTask;
  }
  return *record.task_family;
}

std::string format_ratio(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return std::string(buf);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

double coverage_cell(const std::vector<CorpusRecord>& records,
                     std::string_view module_id, const Taxonomy& taxonomy) {
  const auto leaves = taxonomy.module_parameters(module_id);
  if (leaves.empty()) {
    fail(ErrorCode::kEmptyModule,
         "module \"" + std::string(module_id) + "\" has no parameters");
  }
  std::set<std::string> documented_union;
  for (const auto& record : records) {
    documented_union.insert(record.documented.begin(), record.documented.end());
  }
  std::size_t present = 0;
  for (const ParameterSpec* leaf : leaves) {
    if (documented_union.count(leaf->id)) ++present;
  }
  return static_cast<double>(present) / static_cast<double>(leaves.size());
}

CoverageMatrix coverage_matrix(const std::vector<CorpusRecord>& records,
                               const Taxonomy& taxonomy) {
  std::map<std::string, std::vector<const CorpusRecord*>> by_task;
  for (const auto& record : records) {
    by_task[task_label(record)].push_back(&record);
  }

  CoverageMatrix matrix;
  matrix.taxonomy_version = taxonomy.version();
  for (const ModuleSpec& module : taxonomy.modules()) {
    matrix.module_ids.push_back(module.id);
  }

  for (const auto& [task, task_records] : by_task) {
    matrix.task_families.push_back(task);
    std::vector<double> row_union;
    std::vector<double> row_mean;
    std::vector<std::uint64_t> row_support;
    for (const auto& module_id : matrix.module_ids) {
      const auto leaves = taxonomy.module_parameters(module_id);
      if (leaves.empty()) {
        fail(ErrorCode::kEmptyModule,
             "module \"" + module_id + "\" has no parameters");
      }
      std::set<std::string> documented_union;
      double per_project_sum = 0.0;
      for (const CorpusRecord* record : task_records) {
        std::size_t present = 0;
        for (const ParameterSpec* leaf : leaves) {
          if (record->documented.count(leaf->id)) ++present;
        }
        per_project_sum +=
            static_cast<double>(present) / static_cast<double>(leaves.size());
        documented_union.insert(record->documented.begin(),
                                record->documented.end());
      }
      std::size_t union_present = 0;
      for (const ParameterSpec* leaf : leaves) {
        if (documented_union.count(leaf->id)) ++union_present;
      }
      row_union.push_back(static_cast<double>(union_present) /
                          static_cast<double>(leaves.size()));
      row_mean.push_back(per_project_sum /
                         static_cast<double>(task_records.size()));
      row_support.push_back(task_records.size());
    }
    matrix.values.push_back(std::move(row_union));
    matrix.values_mean.push_back(std::move(row_mean));
    matrix.support.push_back(std::move(row_support));
  }
  return matrix;
}

std::string export_matrix(const CoverageMatrix& matrix, MatrixFormat format) {
  if (format == MatrixFormat::kCsv) {
    std::string out = "task";
    for (const auto& module_id : matrix.module_ids) {
      out += "," + module_id;
    }
    out += "\n";
    for (std::size_t row = 0; row < matrix.task_families.size(); ++row) {
      out += csv_escape(matrix.task_families[row]);
      for (double value : matrix.values[row]) {
        out += "," + format_ratio(value);
      }
      out += "\n";
    }
    return out;
  }

  nlohmann::ordered_json doc;
  doc["schema_version"] = "1.0";
  doc["taxonomy_version"] = matrix.taxonomy_version;
  doc["modules"] = matrix.module_ids;
  doc["task_families"] = matrix.task_families;
  doc["values"] = matrix.values;
  doc["values_mean"] = matrix.values_mean;
  doc["support"] = matrix.support;
  return doc.dump(2) + "\n";
}

}  // namespace cardgauge
