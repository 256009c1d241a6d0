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

namespace cardgauge {

std::string trim(std::string_view text);
std::string to_lower(std::string_view text);

// Collapses every run of whitespace to a single space, then trims.
std::string collapse_whitespace(std::string_view text);

// Canonical field-name folding: lowercase, trim, and collapse every run of
// space/underscore/hyphen characters to one underscore.
std::string fold_name(std::string_view raw);

// Lowercase snake-case identifier: [a-z][a-z0-9_]*.
bool is_identifier(std::string_view text);

std::size_t count_non_whitespace(std::string_view text);

// FNV-1a over the given bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// "fnv1a:" followed by 16 lowercase hex digits.
std::string fingerprint_hex(std::string_view bytes);

// UTC timestamp in ISO-8601 format (e.g. "2026-08-10T12:00:00Z").
std::string utc_timestamp_now();

}  // namespace cardgauge
