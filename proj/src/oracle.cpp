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

#include "influence/oracle.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "influence/random_corpus.hpp"

namespace influence {

namespace {

using Matrix = std::vector<std::vector<double>>;

// Appearance count of an entity on a paper and the count of all appearances
// of its kind (topics: at the same level as the entity's tag).
struct Appearance {
  double mine = 0;
  double all = 0;
  int topic_level = -1;
};

Appearance appearance(const PaperRecord& paper, EntityKind kind, const std::string& id) {
  Appearance a;
  switch (kind) {
    case EntityKind::author:
      for (const auto& s : paper.authors) {
        a.all += 1;
        if (s.author_id == id) a.mine += 1;
      }
      break;
    case EntityKind::institution:
      for (const auto& s : paper.authors) {
        if (!s.institution_id) continue;
        a.all += 1;
        if (*s.institution_id == id) a.mine += 1;
      }
      break;
    case EntityKind::venue:
      if (paper.venue_id) {
        a.all = 1;
        a.mine = *paper.venue_id == id ? 1 : 0;
      }
      break;
    case EntityKind::topic:
      for (const auto& t : paper.topics)
        if (t.topic_id == id) {
          a.mine += 1;
          a.topic_level = t.level;
        }
      if (a.mine > 0)
        for (const auto& t : paper.topics)
          if (t.level == a.topic_level) a.all += 1;
      break;
    case EntityKind::paper:
      a.all = 1;
      a.mine = paper.id == id ? 1 : 0;
      break;
  }
  return a;
}

double association(const PaperRecord& paper, EntityKind kind, const std::string& id,
                   bool normalise) {
  auto a = appearance(paper, kind, id);
  if (a.mine == 0) return 0.0;
  return normalise ? a.mine / a.all : 1.0;
}

}  // namespace

InfluenceProfile brute_force_profile(const EntitySelection& ego, const InfluenceConfig& config,
                                     const Corpus& corpus) {
  validate(config);
  const auto& papers = corpus.papers();
  const std::size_t n = papers.size();
  const auto kind = config.alter_kind;
  const auto& schemes = config.schemes;

  // Ego indicator over papers.
  std::vector<bool> in_ego(n, false);
  for (auto p : resolve_selection(ego, corpus)) in_ego[p] = true;

  // Ego rows of the cited-side and citing-side association matrices.
  std::set<EntityKind> member_kinds;
  std::set<std::string> member_ids;
  for (const auto& m : ego.members) {
    member_kinds.insert(m.kind);
    member_ids.insert(m.id);
  }
  const bool aggregate = member_kinds.size() == 1 && *member_kinds.begin() != EntityKind::paper;
  auto ego_row = [&](bool normalise) {
    std::vector<double> row(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
      if (!in_ego[p]) continue;
      if (!normalise || !aggregate) {
        row[p] = 1.0;
        continue;
      }
      for (const auto& id : member_ids)
        row[p] += association(papers[p], *member_kinds.begin(), id, true);
    }
    return row;
  };
  const auto ego_cited = ego_row(schemes.s1);
  const auto ego_citing = ego_row(schemes.s3);

  // Alter entity universe for the requested kind.
  std::set<std::string> universe;
  for (const auto& paper : papers) {
    switch (kind) {
      case EntityKind::author:
        for (const auto& s : paper.authors) universe.insert(s.author_id);
        break;
      case EntityKind::institution:
        for (const auto& s : paper.authors)
          if (s.institution_id) universe.insert(*s.institution_id);
        break;
      case EntityKind::venue:
        if (paper.venue_id) universe.insert(*paper.venue_id);
        break;
      case EntityKind::topic:
        for (const auto& t : paper.topics)
          if (t.level == config.topic_level) universe.insert(t.topic_id);
        break;
      case EntityKind::paper:
        break;
    }
  }
  const std::vector<std::string> alters(universe.begin(), universe.end());
  const std::size_t m = alters.size();

  Matrix cited_assoc(m, std::vector<double>(n, 0.0));
  Matrix citing_assoc(m, std::vector<double>(n, 0.0));
  Matrix indicator(m, std::vector<double>(n, 0.0));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t p = 0; p < n; ++p) {
      const auto& paper = papers[p];
      if (kind == EntityKind::topic) {
        // Only tags at the configured level associate a topic alter.
        bool at_level = false;
        for (const auto& t : paper.topics)
          if (t.topic_id == alters[e] && t.level == config.topic_level) at_level = true;
        if (!at_level) continue;
      }
      cited_assoc[e][p] = association(paper, kind, alters[e], schemes.s1);
      citing_assoc[e][p] = association(paper, kind, alters[e], schemes.s3);
      indicator[e][p] = association(paper, kind, alters[e], false);
    }
  }

  // C[i][j] = 1 when paper j cites paper i.
  Matrix citation(n, std::vector<double>(n, 0.0));
  std::vector<double> reference_count(n, 0.0);
  for (const auto& edge : corpus.edges()) {
    citation[edge.cited][edge.citing] = 1.0;
    reference_count[edge.citing] += 1.0;
  }

  Matrix out_c(n, std::vector<double>(n, 0.0));
  Matrix in_c(n, std::vector<double>(n, 0.0));
  Matrix out_raw(n, std::vector<double>(n, 0.0));
  Matrix in_raw(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (citation[i][j] == 0.0) continue;
      if (!config.include_self_citations && in_ego[i] && in_ego[j]) continue;
      const double s2 = schemes.s2 ? 1.0 / reference_count[j] : 1.0;
      if (config.pub_range.contains(papers[i].year) && config.cite_range.contains(papers[j].year)) {
        out_c[i][j] = s2;
        out_raw[i][j] = 1.0;
      }
      if (config.pub_range.contains(papers[j].year)) {
        in_c[i][j] = s2;
        in_raw[i][j] = 1.0;
      }
    }
  }

  // out = ego_cited * C_out * A^T ; in = A * C_in * ego_citing^T
  std::vector<double> ego_indicator(n);
  for (std::size_t p = 0; p < n; ++p) ego_indicator[p] = in_ego[p] ? 1.0 : 0.0;
  auto row_times = [n](const std::vector<double>& row, const Matrix& c) {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] += row[i] * c[i][j];
    }
    return out;
  };
  auto times_col = [n](const Matrix& c, const std::vector<double>& col) {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += c[i][j] * col[j];
    return out;
  };
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
  };
  const auto out_flow = row_times(ego_cited, out_c);
  const auto in_flow = times_col(in_c, ego_citing);
  const auto out_flow_raw = row_times(ego_indicator, out_raw);
  const auto in_flow_raw = times_col(in_raw, ego_indicator);

  InfluenceProfile profile;
  profile.alter_kind = kind;
  for (std::size_t p = 0; p < n; ++p)
    if (in_ego[p] && config.pub_range.contains(papers[p].year)) ++profile.ego_papers;

  for (std::size_t e = 0; e < m; ++e) {
    const auto& id = alters[e];
    bool is_member = false;
    for (const auto& member : ego.members)
      if (member.kind == kind && member.id == id) is_member = true;
    if (is_member) continue;

    AlterScore alter;
    alter.id = id;
    alter.kind = kind;
    alter.out_score = dot(out_flow, citing_assoc[e]);
    alter.in_score = dot(cited_assoc[e], in_flow);
    alter.raw_cite_count = static_cast<std::uint64_t>(std::llround(dot(out_flow_raw, indicator[e])));
    alter.raw_ref_count = static_cast<std::uint64_t>(std::llround(dot(indicator[e], in_flow_raw)));
    if (alter.raw_cite_count == 0 && alter.raw_ref_count == 0) continue;
    for (std::size_t p = 0; p < n && !alter.co_contributor; ++p)
      if (in_ego[p] && appearance(papers[p], kind, id).mine > 0) alter.co_contributor = true;
    const auto* record = corpus.find_entity(kind, id);
    alter.name = record ? record->name : id;
    profile.total_in += alter.in_score;
    profile.total_out += alter.out_score;
    profile.raw_refs += alter.raw_ref_count;
    profile.raw_cites += alter.raw_cite_count;
    profile.alters.push_back(std::move(alter));
  }
  return profile;
}

std::optional<std::string> compare_profiles(const InfluenceProfile& actual,
                                            const InfluenceProfile& expected, double tolerance) {
  std::ostringstream why;
  if (actual.alters.size() != expected.alters.size()) {
    why << "alter count " << actual.alters.size() << " != " << expected.alters.size();
    return why.str();
  }
  if (actual.ego_papers != expected.ego_papers) {
    why << "ego paper count " << actual.ego_papers << " != " << expected.ego_papers;
    return why.str();
  }
  why.precision(17);
  for (std::size_t i = 0; i < actual.alters.size(); ++i) {
    const auto& a = actual.alters[i];
    const auto& b = expected.alters[i];
    if (a.id != b.id) {
      why << "alter " << i << " id " << a.id << " != " << b.id;
      return why.str();
    }
    if (std::abs(a.in_score - b.in_score) > tolerance) {
      why << a.id << " in_score " << a.in_score << " != " << b.in_score;
      return why.str();
    }
    if (std::abs(a.out_score - b.out_score) > tolerance) {
      why << a.id << " out_score " << a.out_score << " != " << b.out_score;
      return why.str();
    }
    if (a.raw_ref_count != b.raw_ref_count || a.raw_cite_count != b.raw_cite_count) {
      why << a.id << " raw counts (" << a.raw_ref_count << ", " << a.raw_cite_count << ") != ("
          << b.raw_ref_count << ", " << b.raw_cite_count << ")";
      return why.str();
    }
    if (a.co_contributor != b.co_contributor) {
      why << a.id << " co_contributor " << a.co_contributor << " != " << b.co_contributor;
      return why.str();
    }
  }
  return std::nullopt;
}

OracleCaseReport run_oracle_case(std::uint64_t seed, std::size_t case_index, double tolerance) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index)};
  std::mt19937_64 rng(seq);
  const auto corpus = random_corpus(rng);
  const auto store = IndexStore::build(corpus);

  OracleCaseReport report;
  constexpr EntityKind kAlterKinds[] = {EntityKind::author, EntityKind::venue,
                                        EntityKind::institution, EntityKind::topic};
  for (auto shape : kAllEgoShapes) {
    for (auto alter_kind : kAlterKinds) {
      for (int mask = 0; mask < 8; ++mask) {
        const auto ego = random_selection(rng, corpus, shape);
        auto config = random_config(rng);
        if (ego.members.empty()) {
          ++report.skipped;
          continue;
        }
        config.alter_kind = alter_kind;
        config.schemes = Schemes{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        config.topic_level = static_cast<int>(rng() % 3);
        const auto actual = compute_profile(ego, config, store);
        const auto expected = brute_force_profile(ego, config, corpus);
        ++report.comparisons;
        if (auto diff = compare_profiles(actual, expected, tolerance)) {
          std::ostringstream msg;
          msg << "case " << case_index << " ego " << to_string(shape) << " alters "
              << to_string(alter_kind) << " schemes " << mask << ": " << *diff;
          report.failures.push_back(msg.str());
        }
      }
    }
  }
  return report;
}

}  // namespace influence
