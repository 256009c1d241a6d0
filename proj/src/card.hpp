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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxonomy.hpp"

namespace cardgauge {

enum class EntryStatus { kAbsent, kPlaceholder, kDocumented };

const char* entry_status_name(EntryStatus status);

struct EvidenceLink {
  enum class Kind { kUrl, kFilePath, kHash, kDoi };
  Kind kind = Kind::kUrl;
  std::string value;

  bool operator==(const EvidenceLink&) const = default;
};

struct FieldEntry {
  std::string parameter_id;
  std::string content;
  std::vector<EvidenceLink> evidence_links;
  EntryStatus status = EntryStatus::kAbsent;

  bool operator==(const FieldEntry&) const = default;
};

// Tokens that never count as substantive content ("" is covered by the
// empty-after-trim rule). Matching is case-insensitive with inner
// whitespace collapsed.
struct PlaceholderPolicy {
  std::vector<std::string> tokens = {"tbd",   "todo", "n/a", "na",
                                     "tba",   "-",    "?",   "coming soon"};
  std::size_t min_content_chars = 3;  // non-whitespace characters
};

// One project's documentation resolved against the taxonomy. Only
// parameters that appeared in the source carry an entry; everything else
// is Absent.
struct CardDocument {
  std::string project_id;
  std::optional<std::string> task_family;
  std::map<std::string, FieldEntry> entries;
  std::vector<std::string> unknown_fields;  // sorted, unique
  std::vector<std::string> warnings;

  EntryStatus status_of(std::string_view parameter_id) const;
  std::set<std::string> documented_ids() const;
};

struct CardParseOptions {
  // Used when the document itself names no project.
  std::string fallback_project_id;
  // Replaces the document's task_family when set.
  std::optional<std::string> task_family_override;
  PlaceholderPolicy placeholders;
};

// Classification per the sufficiency rule: placeholders do not count, a
// nonempty evidence list always does.
EntryStatus classify_entry(std::string_view content,
                           const std::vector<EvidenceLink>& evidence_links,
                           const PlaceholderPolicy& policy = {});

// Parses a card in the canonical YAML format (leading "---" marker) or the
// narrative markdown format (anything else). Throws ParseError or
// EmptyDocument.
CardDocument parse_card(std::string_view source, const Taxonomy& taxonomy,
                        const CardParseOptions& options = {});

// Blank canonical card with one slot per (filtered) leaf and the leaf
// description as an inline prompt comment. Parsing the output yields
// all-Placeholder entries.
std::string emit_template(const Taxonomy& taxonomy,
                          std::optional<std::string_view> module_filter = {});

}  // namespace cardgauge
