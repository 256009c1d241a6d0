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

#include "taxonomy.hpp"

#include <algorithm>
#include <set>

#include "nlohmann/json.hpp"
#include "text_util.hpp"

namespace cardgauge {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxPathLength = 4;
constexpr std::size_t kStrictModuleCount = 8;

void require_keys(const json& object, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& item : object.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) {
      fail(ErrorCode::kSchema, "unexpected key \"" + item.key() + "\" in " + where);
    }
  }
}

std::string require_string(const json& object, const char* key,
                           const std::string& where) {
  if (!object.contains(key) || !object.at(key).is_string()) {
    fail(ErrorCode::kSchema,
         where + " requires string field \"" + std::string(key) + "\"");
  }
  return object.at(key).get<std::string>();
}

bool looks_like_semver(const std::string& version) {
  int dots = 0;
  bool digit_run = false;
  for (char c : version) {
    if (c >= '0' && c <= '9') {
      digit_run = true;
      continue;
    }
    if (c == '.') {
      if (!digit_run) return false;
      ++dots;
      digit_run = false;
      continue;
    }
    // Allow a pre-release / build suffix after the numeric core.
    return digit_run && dots >= 1 && (c == '-' || c == '+');
  }
  return digit_run && dots >= 1 && dots <= 2;
}

struct Builder {
  std::vector<ModuleSpec> modules;
  std::vector<ParameterSpec> leaves;
  std::set<std::string> leaf_ids;
  std::map<std::string, Resolution> resolution;

  // Registers a folded raw name. Every name must resolve one way only.
  void claim(const std::string& raw, Resolution target, const std::string& claimant) {
    const std::string folded = fold_name(raw);
    if (folded.empty()) {
      fail(ErrorCode::kSchema, claimant + " folds to an empty name: \"" + raw + "\"");
    }
    auto it = resolution.find(folded);
    if (it != resolution.end()) {
      if (it->second.kind == ResolutionKind::kAtomic &&
          target.kind == ResolutionKind::kAtomic &&
          it->second.parameter_ids == target.parameter_ids) {
        return;  // alias identical to its own id
      }
      fail(ErrorCode::kAliasCollision,
           "name \"" + folded + "\" (" + claimant +
               ") already resolves elsewhere; alias sets must be disjoint");
    }
    resolution.emplace(folded, std::move(target));
  }

  void add_leaf(ParameterSpec leaf, ModuleSpec& module_spec) {
    if (!leaf_ids.insert(leaf.id).second) {
      fail(ErrorCode::kDuplicateId, "parameter id \"" + leaf.id + "\" appears twice");
    }
    claim(leaf.id, Resolution{ResolutionKind::kAtomic, {leaf.id}},
          "id of parameter \"" + leaf.id + "\"");
    for (const auto& alias : leaf.aliases) {
      claim(alias, Resolution{ResolutionKind::kAtomic, {leaf.id}},
            "alias of parameter \"" + leaf.id + "\"");
    }
    module_spec.leaf_ids.push_back(leaf.id);
    leaves.push_back(std::move(leaf));
  }

  // Depth-first walk of one module's children array.
  void walk(const json& children, const std::string& module_id,
            std::vector<std::string>& path, ModuleSpec& module_spec) {
    if (!children.is_array()) {
      fail(ErrorCode::kSchema,
           "\"children\" of module \"" + module_id + "\" must be an array");
    }
    for (const json& node : children) {
      if (!node.is_object()) {
        fail(ErrorCode::kSchema,
             "every taxonomy node under module \"" + module_id + "\" must be an object");
      }
      const bool is_leaf = node.contains("id");
      const bool is_group = node.contains("children");
      if (is_leaf == is_group) {
        fail(ErrorCode::kSchema,
             "node in module \"" + module_id +
                 "\" must have exactly one of \"id\" (leaf) or \"children\" (group)");
      }
      if (is_group) {
        require_keys(node, {"name", "children"},
                     "group node of module \"" + module_id + "\"");
        const std::string name = require_string(node, "name", "group node");
        if (path.size() >= kMaxPathLength) {
          fail(ErrorCode::kDepthExceeded,
               "group \"" + name + "\" in module \"" + module_id +
                   "\" nests parameters deeper than display level 5");
        }
        path.push_back(name);
        walk(node.at("children"), module_id, path, module_spec);
        path.pop_back();
        continue;
      }

      require_keys(node, {"id", "name", "aliases", "description", "evidence_expected"},
                   "leaf node of module \"" + module_id + "\"");
      ParameterSpec leaf;
      leaf.id = require_string(node, "id", "leaf node");
      if (!is_identifier(leaf.id)) {
        fail(ErrorCode::kSchema,
             "parameter id \"" + leaf.id + "\" is not lowercase snake-case");
      }
      leaf.display_name =
          node.contains("name") ? require_string(node, "name", "leaf node") : leaf.id;
      leaf.module_id = module_id;
      leaf.path = path;
      if (node.contains("description")) {
        leaf.description = require_string(node, "description", "leaf node");
      }
      if (node.contains("evidence_expected")) {
        if (!node.at("evidence_expected").is_boolean()) {
          fail(ErrorCode::kSchema,
               "\"evidence_expected\" of \"" + leaf.id + "\" must be a boolean");
        }
        leaf.evidence_expected = node.at("evidence_expected").get<bool>();
      }
      if (node.contains("aliases")) {
        if (!node.at("aliases").is_array()) {
          fail(ErrorCode::kSchema, "\"aliases\" of \"" + leaf.id + "\" must be an array");
        }
        for (const json& alias : node.at("aliases")) {
          if (!alias.is_string()) {
            fail(ErrorCode::kSchema, "alias of \"" + leaf.id + "\" must be a string");
          }
          leaf.aliases.push_back(alias.get<std::string>());
        }
      }
      add_leaf(std::move(leaf), module_spec);
    }
  }
};

}  // namespace

bool Taxonomy::has_module(std::string_view module_id) const {
  return module_index_.count(std::string(module_id)) > 0;
}

const ModuleSpec& Taxonomy::module(std::string_view module_id) const {
  auto it = module_index_.find(std::string(module_id));
  if (it == module_index_.end()) {
    fail(ErrorCode::kUnknownModule, "unknown module \"" + std::string(module_id) + "\"");
  }
  return modules_[it->second];
}

bool Taxonomy::has_parameter(std::string_view parameter_id) const {
  return leaf_index_.count(std::string(parameter_id)) > 0;
}

const ParameterSpec& Taxonomy::parameter(std::string_view parameter_id) const {
  auto it = leaf_index_.find(std::string(parameter_id));
  if (it == leaf_index_.end()) {
    fail(ErrorCode::kUnknownParameter,
         "unknown parameter \"" + std::string(parameter_id) + "\"");
  }
  return leaves_[it->second];
}

const ModuleSpec* Taxonomy::find_module_by_name(std::string_view raw_name) const {
  auto it = module_name_index_.find(fold_name(raw_name));
  if (it == module_name_index_.end()) return nullptr;
  return &modules_[it->second];
}

std::vector<const ParameterSpec*> Taxonomy::module_parameters(
    std::string_view module_id) const {
  const ModuleSpec& spec = module(module_id);
  std::vector<const ParameterSpec*> out;
  out.reserve(spec.leaf_ids.size());
  for (const auto& id : spec.leaf_ids) {
    out.push_back(&leaves_[leaf_index_.at(id)]);
  }
  return out;
}

Resolution Taxonomy::resolve(std::string_view raw_name) const {
  const std::string folded = fold_name(raw_name);
  if (folded.empty()) {
    fail(ErrorCode::kInvalidArgument, "field name is empty after trimming");
  }
  auto it = resolution_.find(folded);
  if (it == resolution_.end()) return Resolution{ResolutionKind::kUnknown, {}};
  return it->second;
}

bool Taxonomy::operator==(const Taxonomy& other) const {
  return version_ == other.version_ && modules_ == other.modules_ &&
         leaves_ == other.leaves_ && compound_map_ == other.compound_map_ &&
         irrelevant_fields_ == other.irrelevant_fields_;
}

Taxonomy load_taxonomy(std::string_view source, const TaxonomyLoadOptions& options) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kSchema, std::string("taxonomy is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    fail(ErrorCode::kSchema, "taxonomy root must be a JSON object");
  }
  require_keys(root, {"version", "modules", "compounds", "irrelevant"}, "taxonomy root");

  Taxonomy taxonomy;
  Builder builder;

  taxonomy.version_ = require_string(root, "version", "taxonomy root");
  if (!looks_like_semver(taxonomy.version_)) {
    fail(ErrorCode::kSchema,
         "\"version\" must be a semantic version string, got \"" + taxonomy.version_ + "\"");
  }

  if (!root.contains("modules") || !root.at("modules").is_array() ||
      root.at("modules").empty()) {
    fail(ErrorCode::kSchema, "taxonomy requires a nonempty \"modules\" array");
  }

  std::set<std::string> module_ids;
  for (const json& module_node : root.at("modules")) {
    if (!module_node.is_object()) {
      fail(ErrorCode::kSchema, "every module must be an object");
    }
    require_keys(module_node, {"id", "name", "children"}, "module");
    ModuleSpec module_spec;
    module_spec.id = require_string(module_node, "id", "module");
    if (!is_identifier(module_spec.id)) {
      fail(ErrorCode::kSchema,
           "module id \"" + module_spec.id + "\" is not lowercase snake-case");
    }
    if (!module_ids.insert(module_spec.id).second) {
      fail(ErrorCode::kDuplicateId, "module id \"" + module_spec.id + "\" appears twice");
    }
    module_spec.display_name = module_node.contains("name")
                                   ? require_string(module_node, "name", "module")
                                   : module_spec.id;
    module_spec.ordinal = static_cast<int>(builder.modules.size()) + 1;

    std::vector<std::string> path;
    if (module_node.contains("children")) {
      builder.walk(module_node.at("children"), module_spec.id, path, module_spec);
    }
    builder.modules.push_back(std::move(module_spec));
  }

  if (builder.modules.size() != kStrictModuleCount) {
    if (!options.allow_module_count_mismatch) {
      fail(ErrorCode::kModuleCount,
           "taxonomy has " + std::to_string(builder.modules.size()) +
               " top-level modules; exactly 8 are required (pass the module-count "
               "override to accept this file)");
    }
    taxonomy.warnings_.push_back(
        "module count is " + std::to_string(builder.modules.size()) +
        " (strict profile expects 8); accepted by override");
  }
  if (builder.leaves.empty()) {
    fail(ErrorCode::kSchema, "taxonomy defines no parameters");
  }

  if (root.contains("compounds")) {
    const json& compounds = root.at("compounds");
    if (!compounds.is_object()) {
      fail(ErrorCode::kSchema, "\"compounds\" must be an object");
    }
    for (const auto& item : compounds.items()) {
      if (!item.value().is_array() || item.value().empty()) {
        fail(ErrorCode::kSchema,
             "compound \"" + item.key() +
                 "\" must map to a nonempty array of parameter ids");
      }
      std::vector<std::string> targets;
      for (const json& target : item.value()) {
        if (!target.is_string()) {
          fail(ErrorCode::kSchema,
               "compound \"" + item.key() + "\" targets must be strings");
        }
        const std::string id = target.get<std::string>();
        if (!builder.leaf_ids.count(id)) {
          fail(ErrorCode::kSchema,
               "compound \"" + item.key() + "\" targets unknown parameter \"" + id + "\"");
        }
        targets.push_back(id);
      }
      builder.claim(item.key(), Resolution{ResolutionKind::kCompound, targets},
                    "compound \"" + item.key() + "\"");
      taxonomy.compound_map_.emplace(fold_name(item.key()), std::move(targets));
    }
  }

  if (root.contains("irrelevant")) {
    const json& irrelevant = root.at("irrelevant");
    if (!irrelevant.is_array()) {
      fail(ErrorCode::kSchema, "\"irrelevant\" must be an array");
    }
    for (const json& name : irrelevant) {
      if (!name.is_string()) {
        fail(ErrorCode::kSchema, "\"irrelevant\" entries must be strings");
      }
      const std::string folded = fold_name(name.get<std::string>());
      if (std::find(taxonomy.irrelevant_fields_.begin(),
                    taxonomy.irrelevant_fields_.end(),
                    folded) != taxonomy.irrelevant_fields_.end()) {
        continue;
      }
      builder.claim(folded, Resolution{ResolutionKind::kIrrelevant, {}},
                    "irrelevant field \"" + folded + "\"");
      taxonomy.irrelevant_fields_.push_back(folded);
    }
  }

  taxonomy.modules_ = std::move(builder.modules);
  taxonomy.leaves_ = std::move(builder.leaves);
  taxonomy.resolution_ = std::move(builder.resolution);
  for (std::size_t i = 0; i < taxonomy.leaves_.size(); ++i) {
    taxonomy.leaf_index_.emplace(taxonomy.leaves_[i].id, i);
  }
  for (std::size_t i = 0; i < taxonomy.modules_.size(); ++i) {
    taxonomy.module_index_.emplace(taxonomy.modules_[i].id, i);
    taxonomy.module_name_index_.emplace(fold_name(taxonomy.modules_[i].id), i);
    const std::string folded_display = fold_name(taxonomy.modules_[i].display_name);
    taxonomy.module_name_index_.emplace(folded_display, i);  // keeps first claim
  }
  return taxonomy;
}

}  // namespace cardgauge
