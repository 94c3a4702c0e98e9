// Copyright 2026 The Influence Map Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "influence/index_store.hpp"

namespace influence {

/// Lowercased alphanumeric tokens; bytes >= 0x80 are kept inside tokens.
std::vector<std::string> tokenize(std::string_view text);

/// Citation boost constant added inside the log.
inline constexpr double kCitationEpsilon = 2.0;

/// base^3 * ln(citations + epsilon).
double adjusted_relevance(double base, std::uint64_t citation_count);

struct SearchHit {
  std::string entity_id;
  EntityKind kind = EntityKind::author;
  std::string name;
  std::size_t paper_count = 0;
  std::uint64_t citation_count = 0;
  std::string hint;
  double base_relevance = 0.0;
  double adjusted_relevance = 0.0;
};

void to_json(json& out, const SearchHit& hit);

/// tf-idf name index over every entity in a corpus.
class SearchIndex {
 public:
  explicit SearchIndex(const IndexStore& store);

  /// Query/name similarity. Zero when no query token matches. A query token
  /// matches a name token exactly (full weight) or as an initial of it, either
  /// way round (half weight). An exact token-sequence match scores above any
  /// partial match for the same query.
  double base_relevance(std::string_view query, std::string_view name) const;

  /// Hits with nonzero relevance, best first; ties by citation count, then id.
  /// An empty `kinds` searches every kind.
  std::vector<SearchHit> search(std::string_view query, std::span<const EntityKind> kinds,
                                std::size_t limit) const;

  std::size_t document_count() const { return documents_; }

 private:
  double idf(const std::string& token) const;

  const IndexStore& store_;
  std::size_t documents_ = 0;
  std::unordered_map<std::string, std::size_t> document_frequency_;
  std::map<std::string, std::vector<EntityRef>> postings_;
};

/// Builds a selection from chosen hits. With an empty display name, the hit
/// names are joined with " + ".
EntitySelection curate(std::span<const SearchHit> chosen, std::string display_name = {});

}  // namespace influence
