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

#include "influence/influence.hpp"

#include <algorithm>
#include <set>

namespace influence {

namespace {

std::optional<int> level_filter(const InfluenceConfig& config) {
  if (config.alter_kind == EntityKind::topic) return config.topic_level;
  return std::nullopt;
}

// Ego members that share the alter kind; they never appear on the arc.
std::set<std::string> excluded_alters(const EntitySelection& ego, EntityKind alter_kind) {
  std::set<std::string> out;
  for (const auto& m : ego.members)
    if (m.kind == alter_kind) out.insert(m.id);
  return out;
}

PaperBrief brief(const PaperBundle& bundle) {
  return {bundle.meta.id, bundle.meta.title, bundle.meta.year};
}

bool brief_order(const PaperBrief& a, const PaperBrief& b) {
  return std::tie(a.year, a.id) < std::tie(b.year, b.id);
}

}  // namespace

void validate(const InfluenceConfig& config) {
  if (!is_alter_kind(config.alter_kind))
    throw InvalidArgument("alter kind must be author, venue, institution or topic");
  if (config.pub_range.empty()) throw InvalidArgument("publication range is empty");
  if (config.cite_range.empty()) throw InvalidArgument("citation range is empty");
  if (config.topic_level < 0 || config.topic_level > 5)
    throw InvalidArgument("topic level must be within 0-5");
}

const AlterScore* InfluenceProfile::find(std::string_view id) const {
  auto it = std::lower_bound(alters.begin(), alters.end(), id,
                             [](const AlterScore& a, std::string_view key) { return a.id < key; });
  return it != alters.end() && it->id == id ? &*it : nullptr;
}

const PaperBundle& Neighbourhood::at(const std::string& id) const {
  auto it = papers.find(id);
  if (it == papers.end()) throw NotFound("paper " + id + " is outside the neighbourhood");
  return *it->second;
}

Neighbourhood gather(const Corpus& corpus, const PaperSet& ego, BundleSource& source,
                     FetchLedger& ledger) {
  Neighbourhood hood;
  std::set<std::string> linked;
  for (auto p : ego) hood.ego_ids.insert(corpus.paper(p).id);
  for (auto p : ego) {
    const auto& id = corpus.paper(p).id;
    auto bundle = source.fetch(id, BundleLevel::complete, ledger);
    for (const auto& r : bundle->references)
      if (!hood.ego_ids.count(r)) linked.insert(r);
    for (const auto& c : bundle->citers)
      if (!hood.ego_ids.count(c)) linked.insert(c);
    hood.papers.emplace(id, bundle);
    hood.ego.push_back(std::move(bundle));
  }
  std::vector<std::string> ids(linked.begin(), linked.end());
  auto bundles = source.fetch_batch(ids, BundleLevel::partial, ledger);
  for (std::size_t i = 0; i < ids.size(); ++i) hood.papers.emplace(ids[i], std::move(bundles[i]));
  return hood;
}

double normalization_weight(const PaperRecord& paper, EntityKind kind, std::string_view entity_id,
                            bool normalise) {
  if (!paper_has_entity(paper, kind, entity_id))
    throw InvalidArgument(std::string(to_string(kind)) + " " + std::string(entity_id) +
                          " is not on paper " + paper.id);
  if (!normalise) return 1.0;
  switch (kind) {
    case EntityKind::venue:
    case EntityKind::paper:
      return 1.0;
    case EntityKind::author: {
      auto mine = std::count_if(paper.authors.begin(), paper.authors.end(),
                                [&](const AuthorSlot& s) { return s.author_id == entity_id; });
      return static_cast<double>(mine) / static_cast<double>(paper.authors.size());
    }
    case EntityKind::institution: {
      std::size_t mine = 0;
      std::size_t affiliated = 0;
      for (const auto& s : paper.authors) {
        if (!s.institution_id) continue;
        ++affiliated;
        if (*s.institution_id == entity_id) ++mine;
      }
      return static_cast<double>(mine) / static_cast<double>(affiliated);
    }
    case EntityKind::topic: {
      int level = 0;
      std::size_t mine = 0;
      for (const auto& t : paper.topics) {
        if (t.topic_id == entity_id) {
          level = t.level;
          ++mine;
        }
      }
      auto same_level = std::count_if(paper.topics.begin(), paper.topics.end(),
                                      [&](const TopicTag& t) { return t.level == level; });
      return static_cast<double>(mine) / static_cast<double>(same_level);
    }
  }
  return 1.0;
}

double ego_weight(const EntitySelection& ego, const PaperRecord& paper, bool normalise) {
  if (!normalise || ego.members.empty()) return 1.0;
  const auto kind = ego.members.front().kind;
  for (const auto& m : ego.members)
    if (m.kind != kind || m.kind == EntityKind::paper) return 1.0;
  std::set<std::string> seen;
  double weight = 0.0;
  for (const auto& m : ego.members) {
    if (!seen.insert(m.id).second) continue;
    if (paper_has_entity(paper, kind, m.id)) weight += normalization_weight(paper, kind, m.id);
  }
  return weight;
}

InfluenceProfile compute_profile(const EntitySelection& ego, const Neighbourhood& hood,
                                 const InfluenceConfig& config, const Corpus& corpus) {
  validate(config);
  const auto kind = config.alter_kind;
  const auto level = level_filter(config);
  const auto excluded = excluded_alters(ego, kind);
  const auto& schemes = config.schemes;

  std::map<std::string, AlterScore> acc;
  auto slot = [&](const std::string& id) -> AlterScore& {
    auto [it, inserted] = acc.try_emplace(id);
    if (inserted) {
      it->second.id = id;
      it->second.kind = kind;
    }
    return it->second;
  };

  InfluenceProfile profile;
  profile.alter_kind = kind;

  for (const auto& ego_bundle : hood.ego) {
    const auto& p = ego_bundle->meta;
    if (!config.pub_range.contains(p.year)) continue;
    ++profile.ego_papers;

    // Outgoing: ego paper p is cited by q.
    const double ego_cited = ego_weight(ego, p, schemes.s1);
    for (const auto& qid : ego_bundle->citers) {
      const auto& q = hood.at(qid);
      if (!config.cite_range.contains(q.meta.year)) continue;
      if (!config.include_self_citations && hood.is_ego(qid)) continue;
      double factor = ego_cited;
      if (schemes.s2) factor /= static_cast<double>(q.reference_count);
      for (const auto& e : entities_on(q.meta, kind, level)) {
        if (excluded.count(e)) continue;
        auto& alter = slot(e);
        alter.out_score += factor * normalization_weight(q.meta, kind, e, schemes.s3);
        ++alter.raw_cite_count;
      }
    }

    // Incoming: ego paper p cites r.
    double factor = ego_weight(ego, p, schemes.s3);
    if (schemes.s2) factor /= static_cast<double>(ego_bundle->reference_count);
    for (const auto& rid : ego_bundle->references) {
      if (!config.include_self_citations && hood.is_ego(rid)) continue;
      const auto& r = hood.at(rid);
      for (const auto& e : entities_on(r.meta, kind, level)) {
        if (excluded.count(e)) continue;
        auto& alter = slot(e);
        alter.in_score += normalization_weight(r.meta, kind, e, schemes.s1) * factor;
        ++alter.raw_ref_count;
      }
    }
  }

  profile.alters.reserve(acc.size());
  for (auto& [id, alter] : acc) {
    const auto* record = corpus.find_entity(kind, id);
    alter.name = record ? record->name : id;
    alter.co_contributor = is_co_contributor(hood, kind, id);
    profile.total_in += alter.in_score;
    profile.total_out += alter.out_score;
    profile.raw_refs += alter.raw_ref_count;
    profile.raw_cites += alter.raw_cite_count;
    profile.alters.push_back(std::move(alter));
  }
  return profile;
}

InfluenceProfile compute_profile(const EntitySelection& ego, const InfluenceConfig& config,
                                 const IndexStore& store) {
  DirectSource source(store);
  FetchLedger ledger;
  auto papers = store.resolve(ego);
  auto hood = gather(store.corpus(), papers, source, ledger);
  return compute_profile(ego, hood, config, store.corpus());
}

bool is_co_contributor(const Neighbourhood& hood, EntityKind kind, std::string_view alter_id) {
  return std::any_of(hood.ego.begin(), hood.ego.end(), [&](const BundlePtr& b) {
    return paper_has_entity(b->meta, kind, alter_id);
  });
}

InfluenceProfile without_co_contributors(InfluenceProfile profile) {
  std::erase_if(profile.alters, [](const AlterScore& a) { return a.co_contributor; });
  return profile;
}

std::vector<AlterScore> select_alters(const InfluenceProfile& profile, std::size_t k) {
  if (k == 0) throw InvalidArgument("petal count must be at least 1");
  std::vector<AlterScore> ranked = profile.alters;
  std::sort(ranked.begin(), ranked.end(), [](const AlterScore& a, const AlterScore& b) {
    if (a.max_score() != b.max_score()) return a.max_score() > b.max_score();
    if (a.total() != b.total()) return a.total() > b.total();
    return a.id < b.id;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::string_view to_string(SortMode mode) {
  switch (mode) {
    case SortMode::ratio: return "ratio";
    case SortMode::influenced_by: return "influenced_by";
    case SortMode::influencing: return "influencing";
    case SortMode::total: return "total";
  }
  return "ratio";
}

std::optional<SortMode> parse_sort_mode(std::string_view text) {
  for (auto mode : {SortMode::ratio, SortMode::influenced_by, SortMode::influencing,
                    SortMode::total}) {
    if (to_string(mode) == text) return mode;
  }
  return std::nullopt;
}

double influence_ratio(double in_score, double out_score) {
  const double sum = in_score + out_score;
  return sum > 0.0 ? (in_score - out_score) / sum : 0.0;
}

std::vector<AlterScore> sort_alters(std::vector<AlterScore> selected, SortMode mode) {
  auto key = [mode](const AlterScore& a) {
    switch (mode) {
      case SortMode::ratio: return influence_ratio(a.in_score, a.out_score);
      case SortMode::influenced_by: return a.in_score;
      case SortMode::influencing: return a.out_score;
      case SortMode::total: return a.total();
    }
    return 0.0;
  };
  std::sort(selected.begin(), selected.end(), [&](const AlterScore& a, const AlterScore& b) {
    const double ka = key(a);
    const double kb = key(b);
    if (ka != kb) return ka > kb;
    return a.id < b.id;
  });
  return selected;
}

std::size_t DetailPairs::pair_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.incoming.size() + row.outgoing.size();
  return n;
}

DetailPairs detail_pairs(const Neighbourhood& hood, const EntityRef& alter,
                         const InfluenceConfig& config) {
  validate(config);
  const auto level = level_filter(config);
  auto carries = [&](const PaperRecord& paper) {
    auto ids = entities_on(paper, alter.kind, level);
    return std::find(ids.begin(), ids.end(), alter.id) != ids.end();
  };

  DetailPairs out;
  out.alter = alter;
  for (const auto& ego_bundle : hood.ego) {
    if (!config.pub_range.contains(ego_bundle->meta.year)) continue;
    DetailRow row;
    row.ego_paper = brief(*ego_bundle);
    for (const auto& rid : ego_bundle->references) {
      if (!config.include_self_citations && hood.is_ego(rid)) continue;
      const auto& r = hood.at(rid);
      if (carries(r.meta)) row.incoming.push_back(brief(r));
    }
    for (const auto& qid : ego_bundle->citers) {
      const auto& q = hood.at(qid);
      if (!config.cite_range.contains(q.meta.year)) continue;
      if (!config.include_self_citations && hood.is_ego(qid)) continue;
      if (carries(q.meta)) row.outgoing.push_back(brief(q));
    }
    if (row.incoming.empty() && row.outgoing.empty()) continue;
    std::sort(row.incoming.begin(), row.incoming.end(), brief_order);
    std::sort(row.outgoing.begin(), row.outgoing.end(), brief_order);
    out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const DetailRow& a, const DetailRow& b) {
    return brief_order(a.ego_paper, b.ego_paper);
  });
  return out;
}

SummaryStats summary_stats(const Neighbourhood& hood, const InfluenceConfig& config) {
  SummaryStats stats;
  for (const auto& ego_bundle : hood.ego) {
    const auto& p = ego_bundle->meta;
    if (!config.pub_range.contains(p.year)) continue;
    ++stats.papers;
    ++stats.publications_by_year[p.year];
    for (const auto& rid : ego_bundle->references) {
      if (!config.include_self_citations && hood.is_ego(rid)) continue;
      ++stats.refs_total;
    }
    for (const auto& qid : ego_bundle->citers) {
      if (!config.include_self_citations && hood.is_ego(qid)) continue;
      ++stats.cites_total;
      ++stats.citations_by_year[hood.at(qid).meta.year];
    }
  }
  if (stats.papers) {
    stats.refs_avg = static_cast<double>(stats.refs_total) / static_cast<double>(stats.papers);
    stats.cites_avg = static_cast<double>(stats.cites_total) / static_cast<double>(stats.papers);
  }
  return stats;
}

std::optional<YearRange> full_span(const Neighbourhood& hood) {
  if (hood.ego.empty()) return std::nullopt;
  YearRange span{3000, 1000};
  for (const auto& ego_bundle : hood.ego) {
    span.first = std::min(span.first, ego_bundle->meta.year);
    span.last = std::max(span.last, ego_bundle->meta.year);
    for (const auto& qid : ego_bundle->citers) span.last = std::max(span.last, hood.at(qid).meta.year);
  }
  return span;
}

}  // namespace influence
