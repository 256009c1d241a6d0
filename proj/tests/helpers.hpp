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

// Shared test utilities: exact rational arithmetic (the independent oracle
// for every ratio the engine computes in doubles), fixture paths, random
// taxonomy/corpus generators, and the worked-example corpus.

#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

// ---- exact rationals --------------------------------------------------------

struct Rat {
  long long num = 0;
  long long den = 1;

  static Rat of(long long n, long long d) {
    Rat r{n, d};
    r.normalize();
    return r;
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Rat operator+(const Rat& other) const {
    const __int128 n =
        static_cast<__int128>(num) * other.den + static_cast<__int128>(other.num) * den;
    const __int128 d = static_cast<__int128>(den) * other.den;
    const __int128 g128 = gcd128(n < 0 ? -n : n, d);
    return Rat{static_cast<long long>(n / g128), static_cast<long long>(d / g128)};
  }

  Rat operator-(const Rat& other) const { return *this + Rat{-other.num, other.den}; }

  Rat operator*(const Rat& other) const {
    const __int128 n = static_cast<__int128>(num) * other.num;
    const __int128 d = static_cast<__int128>(den) * other.den;
    const __int128 g128 = gcd128(n < 0 ? -n : n, d);
    return Rat{static_cast<long long>(n / g128), static_cast<long long>(d / g128)};
  }

  bool operator==(const Rat& other) const {
    return static_cast<__int128>(num) * other.den ==
           static_cast<__int128>(other.num) * den;
  }

  bool operator>=(const Rat& other) const {
    return static_cast<__int128>(num) * other.den >=
           static_cast<__int128>(other.num) * den;
  }

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

// ---- fixture paths ----------------------------------------------------------

inline std::string fixture_path(const std::string& relative) {
  return std::string(CARDGAUGE_FIXTURE_DIR) + "/" + relative;
}

inline std::string default_taxonomy_path() {
  return std::string(CARDGAUGE_DEFAULT_TAXONOMY);
}

// ---- random structures ------------------------------------------------------

// A generated taxonomy plus the leaf ids grouped per module.
struct GeneratedTaxonomy {
  std::string json;
  std::vector<std::string> module_ids;
  std::vector<std::vector<std::string>> leaves_per_module;

  std::vector<std::string> all_leaves() const {
    std::vector<std::string> out;
    for (const auto& leaves : leaves_per_module) {
      out.insert(out.end(), leaves.begin(), leaves.end());
    }
    return out;
  }
};

// Builds a syntactically valid taxonomy document with `module_count`
// modules and 1..max_leaves leaves each, nested at random depth 0..4.
inline GeneratedTaxonomy random_taxonomy(std::mt19937_64& rng,
                                         std::size_t module_count = 8,
                                         std::size_t max_leaves = 12) {
  GeneratedTaxonomy out;
  std::uniform_int_distribution<std::size_t> leaf_count_dist(1, max_leaves);
  std::uniform_int_distribution<int> depth_dist(0, 4);

  std::string json = "{\"version\": \"0.0.1\", \"modules\": [";
  for (std::size_t m = 0; m < module_count; ++m) {
    const std::string module_id = "mod_" + std::to_string(m);
    out.module_ids.push_back(module_id);
    out.leaves_per_module.emplace_back();
    if (m > 0) json += ",";
    json += "{\"id\": \"" + module_id + "\", \"name\": \"Module " +
            std::to_string(m) + "\", \"children\": [";
    const std::size_t leaf_count = leaf_count_dist(rng);
    for (std::size_t l = 0; l < leaf_count; ++l) {
      const std::string leaf_id =
          "leaf_" + std::to_string(m) + "_" + std::to_string(l);
      out.leaves_per_module.back().push_back(leaf_id);
      if (l > 0) json += ",";
      const int depth = depth_dist(rng);
      for (int d = 0; d < depth; ++d) {
        json += "{\"name\": \"g" + std::to_string(d) + "\", \"children\": [";
      }
      json += "{\"id\": \"" + leaf_id + "\", \"name\": \"Leaf\"}";
      for (int d = 0; d < depth; ++d) json += "]}";
    }
    json += "]}";
  }
  json += "]}";
  out.json = json;
  return out;
}

// Frequency table to stats-file JSON (only nonzero entries are required).
inline std::string stats_json(const std::string& taxonomy_version,
                              std::uint64_t n_projects,
                              const std::vector<std::pair<std::string, std::uint64_t>>& freq) {
  std::string json = "{\"taxonomy_version\": \"" + taxonomy_version +
                     "\", \"n_projects\": " + std::to_string(n_projects) +
                     ", \"freq\": {";
  bool first = true;
  for (const auto& [id, count] : freq) {
    if (!first) json += ",";
    first = false;
    json += "\"" + id + "\": " + std::to_string(count);
  }
  json += "}, \"generated_at\": \"2026-01-01T00:00:00Z\"}";
  return json;
}

// Random documented subset of the given leaves.
inline std::set<std::string> random_subset(std::mt19937_64& rng,
                                           const std::vector<std::string>& leaves,
                                           double keep_probability = 0.5) {
  std::bernoulli_distribution keep(keep_probability);
  std::set<std::string> out;
  for (const auto& id : leaves) {
    if (keep(rng)) out.insert(id);
  }
  return out;
}

// ---- the worked example -----------------------------------------------------
//
// Integer corpus realizing S_M = 2.4, O_M/O_All = 0.18, A_M/A_All = 0.14
// for module "training":
//   N = 11100, O_All = 148000, A_All = 300, O_training = 26640, A_training = 42.
// Documented priors {0.12, 0.09, 0.05} come from frequencies
// {1332, 999, 555}; the next two highest missing priors {0.08, 0.06} from
// {888, 666}; the remaining 37 leaves carry 600 each (prior 2/37 < 0.06).

struct WorkedExample {
  std::string taxonomy_json;
  std::string stats_json;
  std::vector<std::string> documented;       // the three documented leaves
  std::vector<std::string> next_two;         // the two highest-prior missing
  static constexpr const char* kModuleId = "training";
};

inline WorkedExample worked_example() {
  WorkedExample out;
  out.documented = {"t_doc_a", "t_doc_b", "t_doc_c"};
  out.next_two = {"t_fill_a", "t_fill_b"};

  const std::vector<std::size_t> other_leaf_counts = {30, 30, 40, 40, 30, 44, 44};
  std::string json = "{\"version\": \"3.4.2\", \"modules\": [";
  std::vector<std::pair<std::string, std::uint64_t>> freq;

  // Module under test first.
  json += "{\"id\": \"training\", \"name\": \"Training\", \"children\": [";
  json += "{\"id\": \"t_doc_a\", \"name\": \"A\"},";
  json += "{\"id\": \"t_doc_b\", \"name\": \"B\"},";
  json += "{\"id\": \"t_doc_c\", \"name\": \"C\"},";
  json += "{\"id\": \"t_fill_a\", \"name\": \"FA\"},";
  json += "{\"id\": \"t_fill_b\", \"name\": \"FB\"}";
  freq.emplace_back("t_doc_a", 1332);
  freq.emplace_back("t_doc_b", 999);
  freq.emplace_back("t_doc_c", 555);
  freq.emplace_back("t_fill_a", 888);
  freq.emplace_back("t_fill_b", 666);
  for (int i = 0; i < 37; ++i) {
    const std::string id = "t_tail_" + std::to_string(i);
    json += ",{\"id\": \"" + id + "\", \"name\": \"T\"}";
    freq.emplace_back(id, 600);
  }
  json += "]}";

  // Seven other modules; frequencies sum to 121360.
  int full_leaves_left = 10;  // ten leaves at f = 11100
  bool remainder_placed = false;
  for (std::size_t m = 0; m < other_leaf_counts.size(); ++m) {
    const std::string module_id = "other_" + std::to_string(m);
    json += ",{\"id\": \"" + module_id + "\", \"name\": \"Other " +
            std::to_string(m) + "\", \"children\": [";
    for (std::size_t l = 0; l < other_leaf_counts[m]; ++l) {
      const std::string id = module_id + "_leaf_" + std::to_string(l);
      if (l > 0) json += ",";
      json += "{\"id\": \"" + id + "\", \"name\": \"L\"}";
      if ((m == 0 || m == 2) && l < 5 && full_leaves_left > 0) {
        freq.emplace_back(id, 11100);
        --full_leaves_left;
      } else if (m == 6 && !remainder_placed) {
        freq.emplace_back(id, 10360);
        remainder_placed = true;
      }
    }
    json += "]}";
  }
  json += "]}";

  out.taxonomy_json = json;
  out.stats_json = stats_json("3.4.2", 11100, freq);
  return out;
}

}  // namespace testutil
