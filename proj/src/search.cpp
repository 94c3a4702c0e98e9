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

#include "influence/search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace influence {

namespace {

bool initial_of(const std::string& initial, const std::string& token) {
  return initial.size() == 1 && token.size() > 1 && token.front() == initial.front();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalnum(c)) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double adjusted_relevance(double base, std::uint64_t citation_count) {
  return base * base * base * std::log(static_cast<double>(citation_count) + kCitationEpsilon);
}

void to_json(json& out, const SearchHit& hit) {
  out = json{{"entity_id", hit.entity_id},
             {"kind", std::string(to_string(hit.kind))},
             {"name", hit.name},
             {"paper_count", hit.paper_count},
             {"citation_count", hit.citation_count},
             {"hint", hit.hint},
             {"base_relevance", hit.base_relevance},
             {"adjusted_relevance", hit.adjusted_relevance}};
}

SearchIndex::SearchIndex(const IndexStore& store) : store_(store) {
  for (const auto& [key, record] : store.corpus().entities()) {
    ++documents_;
    auto tokens = tokenize(record.name);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (const auto& t : tokens) {
      ++document_frequency_[t];
      postings_[t].push_back({record.id, record.kind});
    }
  }
}

double SearchIndex::idf(const std::string& token) const {
  auto it = document_frequency_.find(token);
  const double df = it == document_frequency_.end() ? 0.0 : static_cast<double>(it->second);
  return std::log(1.0 + static_cast<double>(documents_) / (df + 0.5));
}

double SearchIndex::base_relevance(std::string_view query, std::string_view name) const {
  const auto q = tokenize(query);
  const auto t = tokenize(name);
  if (q.empty() || t.empty()) return 0.0;

  std::vector<bool> used(t.size(), false);
  double score = 0.0;
  for (const auto& qt : q) {
    std::size_t match = t.size();
    double weight = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!used[j] && t[j] == qt) {
        match = j;
        weight = 1.0;
        break;
      }
    }
    if (match == t.size()) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (!used[j] && (initial_of(qt, t[j]) || initial_of(t[j], qt))) {
          match = j;
          weight = 0.5;
          break;
        }
      }
    }
    if (match == t.size()) continue;
    used[match] = true;
    score += weight * idf(t[match]);
  }
  if (score == 0.0) return 0.0;
  score /= std::sqrt(static_cast<double>(t.size()));
  if (q == t) {
    // Partial scores never exceed |q| * max idf, so this keeps exact names on top.
    const double max_idf = std::log(1.0 + 2.0 * static_cast<double>(documents_));
    score += static_cast<double>(q.size()) * max_idf;
  }
  return score;
}

std::vector<SearchHit> SearchIndex::search(std::string_view query,
                                           std::span<const EntityKind> kinds,
                                           std::size_t limit) const {
  const auto q = tokenize(query);
  if (q.empty()) throw InvalidArgument("search query is empty");

  std::vector<EntityRef> candidates;
  auto take = [&](const std::vector<EntityRef>& refs) {
    candidates.insert(candidates.end(), refs.begin(), refs.end());
  };
  for (const auto& qt : q) {
    if (qt.size() == 1) {
      // An initial matches every token it starts.
      for (auto it = postings_.lower_bound(qt); it != postings_.end() && it->first.front() == qt.front(); ++it)
        take(it->second);
    } else {
      if (auto it = postings_.find(qt); it != postings_.end()) take(it->second);
      if (auto it = postings_.find(qt.substr(0, 1)); it != postings_.end()) take(it->second);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const auto& corpus = store_.corpus();
  std::vector<SearchHit> hits;
  for (const auto& ref : candidates) {
    if (!kinds.empty() && std::find(kinds.begin(), kinds.end(), ref.kind) == kinds.end()) continue;
    const auto* record = corpus.find_entity(ref.kind, ref.id);
    if (!record) continue;
    const double base = base_relevance(query, record->name);
    if (base <= 0.0) continue;
    SearchHit hit;
    hit.entity_id = ref.id;
    hit.kind = ref.kind;
    hit.name = record->name;
    hit.paper_count = store_.papers_of(ref.kind, ref.id).size();
    hit.citation_count = store_.citation_total(ref.kind, ref.id);
    if (ref.kind == EntityKind::paper) {
      if (auto p = corpus.find_paper(ref.id)) {
        std::string names;
        std::size_t shown = 0;
        for (const auto& slot : corpus.paper(*p).authors) {
          if (shown == 3) {
            names += ", et al.";
            break;
          }
          const auto* author = corpus.find_entity(EntityKind::author, slot.author_id);
          if (!names.empty()) names += ", ";
          names += author ? author->name : slot.author_id;
          ++shown;
        }
        hit.hint = names;
      }
    } else if (record->extra) {
      hit.hint = *record->extra;
    }
    hit.base_relevance = base;
    hit.adjusted_relevance = adjusted_relevance(base, hit.citation_count);
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.adjusted_relevance != b.adjusted_relevance)
      return a.adjusted_relevance > b.adjusted_relevance;
    if (a.citation_count != b.citation_count) return a.citation_count > b.citation_count;
    if (a.entity_id != b.entity_id) return a.entity_id < b.entity_id;
    return a.kind < b.kind;
  });
  if (limit && hits.size() > limit) hits.resize(limit);
  return hits;
}

EntitySelection curate(std::span<const SearchHit> chosen, std::string display_name) {
  if (chosen.empty()) throw InvalidArgument("curation list is empty");
  EntitySelection selection;
  std::string joined;
  for (const auto& hit : chosen) {
    EntityRef ref{hit.entity_id, hit.kind};
    if (std::find(selection.members.begin(), selection.members.end(), ref) != selection.members.end())
      continue;
    selection.members.push_back(std::move(ref));
    if (!joined.empty()) joined += " + ";
    joined += hit.name;
  }
  selection.display_name = display_name.empty() ? joined : std::move(display_name);
  return selection;
}

}  // namespace influence
