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
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "taxonomy.hpp"

namespace cardgauge {

// Task-family x module coverage grid. `values` holds the canonical union
// semantics d_{t,M}; `values_mean` is the per-project mean, exported as a
// secondary view.
struct CoverageMatrix {
  std::string taxonomy_version;
  std::vector<std::string> task_families;  // sorted
  std::vector<std::string> module_ids;     // taxonomy order
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> values_mean;
  std::vector<std::vector<std::uint64_t>> support;  // projects per cell
};

// d_{t,M} = |P_t intersect P_M| / |P_M| where P_t is the union of the
// records' documented sets. Throws EmptyModule when the module has no
// leaves, UnknownModule when it does not exist.
double coverage_cell(const std::vector<CorpusRecord>& records,
                     std::string_view module_id, const Taxonomy& taxonomy);

// One row per distinct task family (records without one are grouped under
// "unlabeled"), one column per module.
CoverageMatrix coverage_matrix(const std::vector<CorpusRecord>& records,
                               const Taxonomy& taxonomy);

enum class MatrixFormat { kCsv, kStructured };

// CSV: header "task,<module ids...>", union ratios with 4 decimal places.
// Structured: JSON mirroring the report schema family.
std::string export_matrix(const CoverageMatrix& matrix, MatrixFormat format);

}  // namespace cardgauge
