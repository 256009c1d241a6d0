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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace cardgauge {

// One atomic documentation parameter (a leaf of the taxonomy).
struct ParameterSpec {
  std::string id;
  std::string display_name;
  std::string module_id;
  // Group names between the module root and this leaf, outermost first.
  // At most four, so a leaf sits at display level 1..5 below its module.
  std::vector<std::string> path;
  std::string description;
  std::vector<std::string> aliases;
  bool evidence_expected = false;

  bool operator==(const ParameterSpec&) const = default;
};

struct ModuleSpec {
  std::string id;
  std::string display_name;
  int ordinal = 0;  // 1-based position in the taxonomy file
  std::vector<std::string> leaf_ids;  // depth-first, file order

  bool operator==(const ModuleSpec&) const = default;
};

enum class ResolutionKind { kAtomic, kCompound, kIrrelevant, kUnknown };

struct Resolution {
  ResolutionKind kind = ResolutionKind::kUnknown;
  // Atomic: exactly one id. Compound: the expansion targets, file order.
  std::vector<std::string> parameter_ids;
};

struct TaxonomyLoadOptions {
  // Permit a module count other than the strict eight.
  bool allow_module_count_mismatch = false;
};

// Immutable after load; safe to share across threads.
class Taxonomy {
 public:
  const std::string& version() const { return version_; }
  const std::vector<ModuleSpec>& modules() const { return modules_; }
  const std::vector<ParameterSpec>& leaves() const { return leaves_; }
  const std::map<std::string, std::vector<std::string>>& compound_map() const {
    return compound_map_;
  }
  const std::vector<std::string>& irrelevant_fields() const {
    return irrelevant_fields_;
  }
  // Non-fatal findings from load (e.g. module count allowed by override).
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool has_module(std::string_view module_id) const;
  const ModuleSpec& module(std::string_view module_id) const;  // UnknownModule
  bool has_parameter(std::string_view parameter_id) const;
  const ParameterSpec& parameter(std::string_view parameter_id) const;

  // Maps a folded module id or display name to the module, if any.
  const ModuleSpec* find_module_by_name(std::string_view raw_name) const;

  // Leaves under the module: depth-first by containment, ties by file order.
  std::vector<const ParameterSpec*> module_parameters(
      std::string_view module_id) const;

  // Total resolution over nonempty raw names (Atomic/Compound/Irrelevant/
  // Unknown). Matching is case-insensitive with space/underscore/hyphen
  // folding. Raw names empty after trimming are rejected (InvalidArgument).
  Resolution resolve(std::string_view raw_name) const;

  bool operator==(const Taxonomy& other) const;

 private:
  friend Taxonomy load_taxonomy(std::string_view, const TaxonomyLoadOptions&);

  std::string version_;
  std::vector<ModuleSpec> modules_;
  std::vector<ParameterSpec> leaves_;  // global depth-first order
  std::map<std::string, std::vector<std::string>> compound_map_;
  std::vector<std::string> irrelevant_fields_;
  std::vector<std::string> warnings_;

  std::map<std::string, std::size_t> leaf_index_;    // id -> leaves_ index
  std::map<std::string, std::size_t> module_index_;  // id -> modules_ index
  std::map<std::string, std::size_t> module_name_index_;  // folded name/id
  std::map<std::string, Resolution> resolution_;           // folded raw name
};

// Parses and validates a taxonomy document (JSON). Throws SchemaError,
// DuplicateId, AliasCollision, DepthExceeded, or ModuleCountViolation.
Taxonomy load_taxonomy(std::string_view source,
                       const TaxonomyLoadOptions& options = {});

}  // namespace cardgauge
