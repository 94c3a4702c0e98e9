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

#include "influence/random_corpus.hpp"

#include <algorithm>
#include <set>

namespace influence {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string make_id(char prefix, std::size_t i) { return prefix + std::to_string(i); }

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

}  // namespace

Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusLimits& limits) {
  const auto n_papers = uniform(rng, 1, limits.max_papers);
  const auto n_authors = uniform(rng, 1, limits.max_entities_per_kind);
  const auto n_venues = uniform(rng, 1, limits.max_entities_per_kind);
  const auto n_insts = uniform(rng, 1, limits.max_entities_per_kind);
  const auto n_topics = uniform(rng, 1, limits.max_entities_per_kind);

  std::vector<EntityRecord> entities;
  for (std::size_t i = 0; i < n_authors; ++i)
    entities.push_back({make_id('A', i), EntityKind::author, "Author " + std::to_string(i),
                        "Institute " + std::to_string(i % n_insts)});
  for (std::size_t i = 0; i < n_venues; ++i)
    entities.push_back({make_id('V', i), EntityKind::venue, "Venue " + std::to_string(i), {}});
  for (std::size_t i = 0; i < n_insts; ++i)
    entities.push_back(
        {make_id('I', i), EntityKind::institution, "Institute " + std::to_string(i), {}});
  for (std::size_t i = 0; i < n_topics; ++i)
    entities.push_back({make_id('T', i), EntityKind::topic, "Topic " + std::to_string(i), {}});

  std::vector<PaperRecord> papers;
  for (std::size_t i = 0; i < n_papers; ++i) {
    PaperRecord p;
    p.id = make_id('P', i);
    p.title = "Paper " + std::to_string(i);
    p.year = static_cast<int>(uniform(rng, static_cast<std::size_t>(limits.first_year),
                                      static_cast<std::size_t>(limits.last_year)));
    if (chance(rng, 0.85)) p.venue_id = make_id('V', uniform(rng, 0, n_venues - 1));
    const auto slots = uniform(rng, 0, 4);
    for (std::size_t s = 0; s < slots; ++s) {
      AuthorSlot slot{make_id('A', uniform(rng, 0, n_authors - 1)), std::nullopt};
      if (chance(rng, 0.7)) slot.institution_id = make_id('I', uniform(rng, 0, n_insts - 1));
      p.authors.push_back(std::move(slot));
    }
    const auto tags = uniform(rng, 0, 3);
    for (std::size_t t = 0; t < tags; ++t) {
      auto topic = uniform(rng, 0, n_topics - 1);
      p.topics.push_back({make_id('T', topic), static_cast<int>(topic % 3)});
    }
    papers.push_back(std::move(p));
  }

  std::vector<std::pair<std::string, std::string>> citations;
  if (n_papers > 1) {
    const auto n_edges = uniform(rng, 0, limits.max_edges);
    for (std::size_t e = 0; e < n_edges; ++e) {
      auto citing = uniform(rng, 0, n_papers - 1);
      auto cited = uniform(rng, 0, n_papers - 1);
      if (citing == cited) continue;
      citations.emplace_back(make_id('P', citing), make_id('P', cited));
    }
  }
  return Corpus::build(std::move(papers), citations, std::move(entities));
}

std::string_view to_string(EgoShape shape) {
  switch (shape) {
    case EgoShape::author: return "author";
    case EgoShape::venue: return "venue";
    case EgoShape::institution: return "institution";
    case EgoShape::topic: return "topic";
    case EgoShape::paper: return "paper";
    case EgoShape::project: return "project";
  }
  return "unknown";
}

EntitySelection random_selection(std::mt19937_64& rng, const Corpus& corpus, EgoShape shape) {
  EntitySelection selection;
  auto present = [&](EntityKind kind) {
    std::set<std::string> ids;
    for (const auto& paper : corpus.papers())
      for (auto& id : entities_on(paper, kind)) ids.insert(std::move(id));
    return std::vector<std::string>(ids.begin(), ids.end());
  };
  auto add = [&](EntityKind kind, std::size_t max_members) {
    auto ids = present(kind);
    if (ids.empty()) return;
    const auto count = uniform(rng, 1, std::min(max_members, ids.size()));
    std::shuffle(ids.begin(), ids.end(), rng);
    for (std::size_t i = 0; i < count; ++i) selection.members.push_back({ids[i], kind});
  };
  switch (shape) {
    case EgoShape::author: add(EntityKind::author, 2); break;
    case EgoShape::venue: add(EntityKind::venue, 1); break;
    case EgoShape::institution: add(EntityKind::institution, 2); break;
    case EgoShape::topic: add(EntityKind::topic, 1); break;
    case EgoShape::paper: add(EntityKind::paper, 1); break;
    case EgoShape::project:
      add(EntityKind::paper, 4);
      add(EntityKind::author, 1);
      break;
  }
  selection.display_name = std::string(to_string(shape)) + " ego";
  return selection;
}

InfluenceConfig random_config(std::mt19937_64& rng, const RandomCorpusLimits& limits) {
  InfluenceConfig config;
  auto range = [&]() {
    auto a = static_cast<int>(uniform(rng, static_cast<std::size_t>(limits.first_year - 2),
                                      static_cast<std::size_t>(limits.last_year + 2)));
    auto b = static_cast<int>(uniform(rng, static_cast<std::size_t>(limits.first_year - 2),
                                      static_cast<std::size_t>(limits.last_year + 2)));
    return YearRange{std::min(a, b), std::max(a, b)};
  };
  if (chance(rng, 0.3)) {
    config.pub_range = {limits.first_year, limits.last_year};
    config.cite_range = {limits.first_year, limits.last_year};
  } else {
    config.pub_range = range();
    config.cite_range = range();
  }
  config.include_self_citations = chance(rng, 0.5);
  return config;
}

}  // namespace influence
