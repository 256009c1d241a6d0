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

#include "card.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"
#include "yaml-cpp/yaml.h"

namespace cardgauge {

namespace {

constexpr const char* kReservedKeys[] = {"project_id", "task_family", "card_version"};

bool is_reserved_key(const std::string& key) {
  return std::any_of(std::begin(kReservedKeys), std::end(kReservedKeys),
                     [&](const char* k) { return key == k; });
}

bool is_hex(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
  });
}

bool is_url(std::string_view text) {
  const std::size_t sep = text.find("://");
  if (sep == std::string_view::npos || sep == 0 || sep + 3 >= text.size()) return false;
  for (char c : text.substr(0, sep)) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '+' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return text.find(' ') == std::string_view::npos;
}

bool is_doi(std::string_view text) {
  return text.size() > 4 && text.substr(0, 3) == "10." &&
         text.find('/') != std::string_view::npos;
}

EvidenceLink::Kind parse_evidence_kind(const std::string& kind,
                                       const std::string& where) {
  if (kind == "url") return EvidenceLink::Kind::kUrl;
  if (kind == "file_path") return EvidenceLink::Kind::kFilePath;
  if (kind == "hash") return EvidenceLink::Kind::kHash;
  if (kind == "doi") return EvidenceLink::Kind::kDoi;
  fail(ErrorCode::kParse, where + ": evidence kind must be one of "
                                  "url/file_path/hash/doi, got \"" + kind + "\"");
}

void validate_evidence(const EvidenceLink& link, const std::string& where) {
  const std::string value = trim(link.value);
  if (value.empty()) {
    fail(ErrorCode::kParse, where + ": evidence value is empty");
  }
  switch (link.kind) {
    case EvidenceLink::Kind::kUrl:
      if (!is_url(value)) {
        fail(ErrorCode::kParse, where + ": \"" + value + "\" is not a valid URL");
      }
      break;
    case EvidenceLink::Kind::kHash:
      if (value.size() < 7 || !is_hex(value)) {
        fail(ErrorCode::kParse,
             where + ": \"" + value + "\" is not a hex digest of length >= 7");
      }
      break;
    case EvidenceLink::Kind::kDoi:
      if (!is_doi(value)) {
        fail(ErrorCode::kParse, where + ": \"" + value + "\" is not a DOI");
      }
      break;
    case EvidenceLink::Kind::kFilePath:
      break;  // any nonempty path accepted
  }
}

// Accumulates resolved fields into a CardDocument.
struct CardBuilder {
  const Taxonomy& taxonomy;
  const CardParseOptions& options;
  CardDocument card;
  std::set<std::string> unknown_seen;

  explicit CardBuilder(const Taxonomy& t, const CardParseOptions& o)
      : taxonomy(t), options(o) {}

  void warn(std::string message) { card.warnings.push_back(std::move(message)); }

  void add_entry(const std::string& parameter_id, const std::string& content,
                 std::vector<EvidenceLink> evidence,
                 const std::string* section_module) {
    const ParameterSpec& spec = taxonomy.parameter(parameter_id);
    if (section_module != nullptr && spec.module_id != *section_module) {
      warn("field \"" + parameter_id + "\" appears under module \"" +
           *section_module + "\" but belongs to \"" + spec.module_id + "\"");
    }
    FieldEntry entry;
    entry.parameter_id = parameter_id;
    entry.content = content;
    entry.evidence_links = std::move(evidence);
    entry.status = classify_entry(entry.content, entry.evidence_links,
                                  options.placeholders);
    auto [it, inserted] = card.entries.emplace(parameter_id, entry);
    if (!inserted) {
      warn("duplicate occurrence of parameter \"" + parameter_id +
           "\"; last occurrence wins");
      it->second = std::move(entry);
    }
  }

  void add_field(const std::string& raw_name, const std::string& content,
                 std::vector<EvidenceLink> evidence,
                 const std::string* section_module) {
    const Resolution resolution = taxonomy.resolve(raw_name);
    switch (resolution.kind) {
      case ResolutionKind::kAtomic:
        add_entry(resolution.parameter_ids.front(), content, std::move(evidence),
                  section_module);
        return;
      case ResolutionKind::kCompound:
        // Raw content is duplicated into each atomic target; sub-field
        // splitting is authoring-time work.
        for (const auto& id : resolution.parameter_ids) {
          add_entry(id, content, evidence, section_module);
        }
        return;
      case ResolutionKind::kIrrelevant:
        return;  // dropped
      case ResolutionKind::kUnknown:
        if (unknown_seen.insert(trim(raw_name)).second) {
          card.unknown_fields.push_back(trim(raw_name));
        }
        return;
    }
  }

  CardDocument finish(std::string document_project_id,
                      std::optional<std::string> document_task_family) {
    card.project_id = document_project_id.empty() ? options.fallback_project_id
                                                  : std::move(document_project_id);
    card.task_family = options.task_family_override.has_value()
                           ? options.task_family_override
                           : std::move(document_task_family);
    std::sort(card.unknown_fields.begin(), card.unknown_fields.end());
    return std::move(card);
  }
};

std::string scalar_to_string(const YAML::Node& node) {
  if (node.IsNull()) return "";
  return node.as<std::string>();
}

std::vector<EvidenceLink> parse_evidence_list(const YAML::Node& node,
                                              const std::string& where) {
  if (!node.IsSequence()) {
    fail(ErrorCode::kParse, where + ": \"evidence\" must be a list");
  }
  std::vector<EvidenceLink> links;
  for (const YAML::Node& item : node) {
    if (!item.IsMap() || !item["kind"] || !item["value"]) {
      fail(ErrorCode::kParse,
           where + ": every evidence item needs \"kind\" and \"value\"");
    }
    EvidenceLink link;
    link.kind = parse_evidence_kind(item["kind"].as<std::string>(), where);
    link.value = trim(item["value"].as<std::string>());
    validate_evidence(link, where);
    links.push_back(std::move(link));
  }
  return links;
}

// One field inside a module section: scalar content or {text, evidence}.
void parse_canonical_field(CardBuilder& builder, const std::string& raw_name,
                           const YAML::Node& value, const std::string* section) {
  const std::string where = "field \"" + raw_name + "\"";
  if (value.IsNull() || value.IsScalar()) {
    builder.add_field(raw_name, scalar_to_string(value), {}, section);
    return;
  }
  if (value.IsMap()) {
    std::string text;
    std::vector<EvidenceLink> evidence;
    for (const auto& kv : value) {
      const std::string key = kv.first.as<std::string>();
      if (key == "text") {
        if (!kv.second.IsNull() && !kv.second.IsScalar()) {
          fail(ErrorCode::kParse, where + ": \"text\" must be a scalar");
        }
        text = scalar_to_string(kv.second);
      } else if (key == "evidence") {
        evidence = parse_evidence_list(kv.second, where);
      } else {
        fail(ErrorCode::kParse,
             where + ": unexpected key \"" + key + "\" (allowed: text, evidence)");
      }
    }
    builder.add_field(raw_name, text, std::move(evidence), section);
    return;
  }
  fail(ErrorCode::kParse, where + ": value must be a scalar or {text, evidence}");
}

CardDocument parse_canonical(std::string_view source, const Taxonomy& taxonomy,
                             const CardParseOptions& options) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(source));
  } catch (const YAML::ParserException& e) {
    fail(ErrorCode::kParse,
         "line " + std::to_string(e.mark.line + 1) + ", column " +
             std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  if (!root.IsDefined() || root.IsNull()) {
    fail(ErrorCode::kEmptyDocument, "card document is empty");
  }
  if (!root.IsMap()) {
    fail(ErrorCode::kParse, "card root must be a key/value mapping");
  }

  CardBuilder builder(taxonomy, options);
  std::string project_id;
  std::optional<std::string> task_family;

  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& value = kv.second;
    if (is_reserved_key(key)) {
      if (!value.IsNull() && !value.IsScalar()) {
        fail(ErrorCode::kParse, "\"" + key + "\" must be a scalar");
      }
      const std::string scalar = trim(scalar_to_string(value));
      if (key == "project_id") project_id = scalar;
      if (key == "task_family" && !scalar.empty()) task_family = scalar;
      // card_version is carried for authors; it does not affect scoring.
      continue;
    }

    const ModuleSpec* module = taxonomy.find_module_by_name(key);
    if (module != nullptr) {
      if (value.IsNull()) continue;  // empty section
      if (!value.IsMap()) {
        fail(ErrorCode::kParse,
             "module section \"" + key + "\" must be a key/value mapping");
      }
      for (const auto& field : value) {
        const std::string raw_name = field.first.as<std::string>();
        if (trim(raw_name).empty()) {
          builder.warn("ignoring blank field name in section \"" + key + "\"");
          continue;
        }
        parse_canonical_field(builder, raw_name, field.second, &module->id);
      }
      continue;
    }

    // Not reserved and not a module. Scalars are treated as loose top-level
    // fields; mappings are walked as an unrecognized section.
    if (value.IsNull() || value.IsScalar()) {
      builder.warn("field \"" + key + "\" appears outside a module section");
      builder.add_field(key, scalar_to_string(value), {}, nullptr);
      continue;
    }
    if (value.IsMap()) {
      builder.warn("unknown section \"" + key + "\"");
      for (const auto& field : value) {
        const std::string raw_name = field.first.as<std::string>();
        if (trim(raw_name).empty()) continue;
        parse_canonical_field(builder, raw_name, field.second, nullptr);
      }
      continue;
    }
    fail(ErrorCode::kParse, "top-level key \"" + key + "\" has an unsupported value");
  }

  return builder.finish(project_id, std::move(task_family));
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return text.size() >= prefix.size() && text.substr(0, prefix.size()) == prefix;
}

// "**name**: rest" -> (name, rest)
bool match_bold_field(const std::string& line, std::string& name, std::string& rest) {
  const std::string stripped = trim(line);
  if (!starts_with(stripped, "**")) return false;
  const std::size_t close = stripped.find("**", 2);
  if (close == std::string::npos || close == 2) return false;
  std::string_view tail = std::string_view(stripped).substr(close + 2);
  // Tolerate the colon sitting inside the bold markers.
  std::string candidate = stripped.substr(2, close - 2);
  if (!tail.empty() && tail.front() == ':') {
    tail.remove_prefix(1);
  } else if (!candidate.empty() && candidate.back() == ':') {
    candidate.pop_back();
  } else {
    return false;
  }
  name = trim(candidate);
  rest = trim(tail);
  return !name.empty();
}

CardDocument parse_narrative(std::string_view source, const Taxonomy& taxonomy,
                             const CardParseOptions& options) {
  CardBuilder builder(taxonomy, options);
  std::string project_id;
  const std::string* section = nullptr;

  bool saw_structure = false;
  bool in_field = false;
  std::string field_name;
  std::string field_content;

  auto flush_field = [&]() {
    if (!in_field) return;
    builder.add_field(field_name, trim(field_content), {}, section);
    in_field = false;
    field_name.clear();
    field_content.clear();
  };

  std::istringstream stream{std::string(source)};
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (starts_with(line, "## ") || line == "##") {
      flush_field();
      saw_structure = true;
      const std::string heading = trim(line.substr(2));
      const ModuleSpec* module = taxonomy.find_module_by_name(heading);
      if (module == nullptr) {
        builder.warn("unrecognized module heading \"" + heading + "\"");
        section = nullptr;
      } else {
        section = &module->id;
      }
      continue;
    }
    if (starts_with(line, "#")) {
      flush_field();
      if (starts_with(line, "# ") && project_id.empty()) {
        project_id = trim(line.substr(2));
        saw_structure = true;
      }
      continue;
    }

    std::string name, rest;
    if (match_bold_field(line, name, rest)) {
      flush_field();
      saw_structure = true;
      in_field = true;
      field_name = name;
      field_content = rest;
      continue;
    }

    if (in_field) {
      field_content += field_content.empty() ? trim(line) : "\n" + trim(line);
    }
  }
  flush_field();

  if (!saw_structure) {
    fail(ErrorCode::kEmptyDocument,
         "no headings or \"**field**:\" lines found in narrative card");
  }
  return builder.finish(project_id, std::nullopt);
}

}  // namespace

const char* entry_status_name(EntryStatus status) {
  switch (status) {
    case EntryStatus::kAbsent:
      return "absent";
    case EntryStatus::kPlaceholder:
      return "placeholder";
    case EntryStatus::kDocumented:
      return "documented";
  }
  return "absent";
}

EntryStatus CardDocument::status_of(std::string_view parameter_id) const {
  auto it = entries.find(std::string(parameter_id));
  if (it == entries.end()) return EntryStatus::kAbsent;
  return it->second.status;
}

std::set<std::string> CardDocument::documented_ids() const {
  std::set<std::string> out;
  for (const auto& [id, entry] : entries) {
    if (entry.status == EntryStatus::kDocumented) out.insert(id);
  }
  return out;
}

EntryStatus classify_entry(std::string_view content,
                           const std::vector<EvidenceLink>& evidence_links,
                           const PlaceholderPolicy& policy) {
  if (!evidence_links.empty()) return EntryStatus::kDocumented;
  const std::string trimmed = trim(content);
  if (trimmed.empty()) return EntryStatus::kPlaceholder;
  const std::string normalized = collapse_whitespace(to_lower(trimmed));
  for (const auto& token : policy.tokens) {
    if (normalized == token) return EntryStatus::kPlaceholder;
  }
  if (count_non_whitespace(trimmed) < policy.min_content_chars) {
    return EntryStatus::kPlaceholder;
  }
  return EntryStatus::kDocumented;
}

CardDocument parse_card(std::string_view source, const Taxonomy& taxonomy,
                        const CardParseOptions& options) {
  // Canonical cards start with the YAML document marker; anything else is
  // read as narrative markdown.
  std::size_t i = 0;
  while (i < source.size() &&
         (source[i] == ' ' || source[i] == '\t' || source[i] == '\n' || source[i] == '\r')) {
    ++i;
  }
  if (i >= source.size()) {
    fail(ErrorCode::kEmptyDocument, "card document is empty");
  }
  if (source.substr(i, 3) == "---") {
    return parse_canonical(source, taxonomy, options);
  }
  return parse_narrative(source, taxonomy, options);
}

std::string emit_template(const Taxonomy& taxonomy,
                          std::optional<std::string_view> module_filter) {
  if (module_filter.has_value()) {
    taxonomy.module(*module_filter);  // UnknownModule when absent
  }
  std::string out;
  out += "---\n";
  out += "project_id: \"\"\n";
  out += "task_family: \"\"\n";
  out += "card_version: \"1\"\n";
  for (const ModuleSpec& module : taxonomy.modules()) {
    if (module_filter.has_value() && module.id != *module_filter) continue;
    out += module.id + ":\n";
    for (const ParameterSpec* leaf : taxonomy.module_parameters(module.id)) {
      std::string prompt = collapse_whitespace(leaf->description);
      if (leaf->evidence_expected) {
        prompt += prompt.empty() ? "[evidence expected]" : " [evidence expected]";
      }
      out += "  " + leaf->id + ": \"\"";
      if (!prompt.empty()) out += "  # " + prompt;
      out += "\n";
    }
  }
  return out;
}

}  // namespace cardgauge
