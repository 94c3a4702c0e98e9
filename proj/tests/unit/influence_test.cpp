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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "influence/influence.hpp"
#include "influence/oracle.hpp"
#include "influence/random_corpus.hpp"

namespace influence {
namespace {

using testing::m1_corpus;

EntitySelection ego_of(std::initializer_list<EntityRef> members) {
  return EntitySelection{members, ""};
}

InfluenceConfig authors(bool self_citations = true) {
  InfluenceConfig c;
  c.alter_kind = EntityKind::author;
  c.include_self_citations = self_citations;
  return c;
}

double in_of(const InfluenceProfile& p, const std::string& id) {
  const auto* a = p.find(id);
  return a ? a->in_score : 0.0;
}

double out_of(const InfluenceProfile& p, const std::string& id) {
  const auto* a = p.find(id);
  return a ? a->out_score : 0.0;
}

class M1 : public ::testing::Test {
 protected:
  Corpus corpus = m1_corpus();
  IndexStore store = IndexStore::build(corpus);
};

TEST_F(M1, AuthorScoresWithSelfCitations) {
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), authors(true), store);
  ASSERT_EQ(p.alters.size(), 2u);
  EXPECT_EQ(out_of(p, "A3"), 1.0);
  EXPECT_EQ(in_of(p, "A3"), 1.0);
  EXPECT_EQ(in_of(p, "A2"), 0.5);
  EXPECT_EQ(out_of(p, "A2"), 0.0);
  EXPECT_EQ(p.find("A1"), nullptr);
}

TEST_F(M1, AuthorScoresWithoutSelfCitations) {
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), authors(false), store);
  EXPECT_EQ(out_of(p, "A3"), 0.5);
  EXPECT_EQ(in_of(p, "A3"), 1.0);
  EXPECT_EQ(in_of(p, "A2"), 0.0);
  EXPECT_EQ(out_of(p, "A2"), 0.0);
}

TEST_F(M1, VenueScores) {
  auto c = authors();
  c.alter_kind = EntityKind::venue;
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), c, store);
  EXPECT_EQ(in_of(p, "V1"), 1.0);
  EXPECT_EQ(in_of(p, "V2"), 1.0);
  EXPECT_EQ(out_of(p, "V1"), 0.5);
  EXPECT_EQ(out_of(p, "V2"), 0.5);
}

TEST_F(M1, RawCountsAreIncidences) {
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), authors(), store);
  const auto* a3 = p.find("A3");
  ASSERT_NE(a3, nullptr);
  EXPECT_EQ(a3->raw_ref_count, 1u);   // P3 -> P2
  EXPECT_EQ(a3->raw_cite_count, 2u);  // P2 -> P1, P3 -> P1
  EXPECT_TRUE(a3->co_contributor);
  EXPECT_TRUE(p.find("A2")->co_contributor);
}

TEST_F(M1, MatchesDenseReference) {
  const auto ego = ego_of({{"A1", EntityKind::author}});
  for (auto kind : {EntityKind::author, EntityKind::venue, EntityKind::institution,
                    EntityKind::topic}) {
    for (bool self : {true, false}) {
      auto c = authors(self);
      c.alter_kind = kind;
      const auto diff =
          compare_profiles(compute_profile(ego, c, store), brute_force_profile(ego, c, corpus));
      EXPECT_FALSE(diff) << *diff;
    }
  }
}

TEST_F(M1, UnknownMemberIsNotFound) {
  EXPECT_THROW(compute_profile(ego_of({{"NOPE", EntityKind::author}}), authors(), store), NotFound);
}

TEST_F(M1, ServesNPlusOneFetches) {
  DirectSource source(store);
  FetchLedger ledger;
  const auto papers = store.resolve(ego_of({{"A1", EntityKind::author}}));
  const auto hood = gather(corpus, papers, source, ledger);
  EXPECT_EQ(papers.size(), 2u);
  EXPECT_EQ(ledger.fetches, 3u);
  EXPECT_EQ(hood.ego.size(), 2u);
  EXPECT_EQ(hood.papers.size(), 3u);
}

TEST_F(M1, DetailPairsForA3) {
  DirectSource source(store);
  FetchLedger ledger;
  const auto hood = gather(corpus, store.resolve(ego_of({{"A1", EntityKind::author}})), source, ledger);
  const auto pairs = detail_pairs(hood, {"A3", EntityKind::author}, authors());
  ASSERT_EQ(pairs.rows.size(), 2u);
  EXPECT_EQ(pairs.rows[0].ego_paper.id, "P1");
  ASSERT_EQ(pairs.rows[0].outgoing.size(), 2u);
  EXPECT_EQ(pairs.rows[0].outgoing[0].id, "P2");
  EXPECT_EQ(pairs.rows[0].outgoing[1].id, "P3");
  EXPECT_TRUE(pairs.rows[0].incoming.empty());
  EXPECT_EQ(pairs.rows[1].ego_paper.id, "P3");
  ASSERT_EQ(pairs.rows[1].incoming.size(), 1u);
  EXPECT_EQ(pairs.rows[1].incoming[0].id, "P2");
  EXPECT_EQ(pairs.pair_count(), 3u);

  const auto none = detail_pairs(hood, {"A2", EntityKind::author}, authors(false));
  EXPECT_TRUE(none.rows.empty());
}

TEST_F(M1, SummaryStats) {
  DirectSource source(store);
  FetchLedger ledger;
  const auto hood = gather(corpus, store.resolve(ego_of({{"A1", EntityKind::author}})), source, ledger);
  const auto s = summary_stats(hood, authors());
  EXPECT_EQ(s.papers, 2u);
  EXPECT_EQ(s.cites_total, 2u);
  EXPECT_EQ(s.refs_total, 2u);
  EXPECT_DOUBLE_EQ(s.refs_avg, 1.0);
  EXPECT_EQ(s.publications_by_year.at(2000), 1u);
  EXPECT_EQ(s.publications_by_year.at(2005), 1u);
  EXPECT_EQ(s.citations_by_year.at(2001), 1u);
  EXPECT_EQ(s.citations_by_year.at(2005), 1u);

  const auto span = full_span(hood);
  ASSERT_TRUE(span);
  EXPECT_EQ(*span, (YearRange{2000, 2005}));
}

TEST_F(M1, PublicationRangeRestrictsEgoPapers) {
  auto c = authors();
  c.pub_range = {2005, 2005};
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), c, store);
  EXPECT_EQ(p.ego_papers, 1u);
  EXPECT_EQ(out_of(p, "A3"), 0.0);
  EXPECT_EQ(in_of(p, "A3"), 1.0);  // P3 -> P2
  EXPECT_EQ(in_of(p, "A2"), 0.5);  // P3 -> P1
}

TEST_F(M1, CitationRangeRestrictsCiters) {
  auto c = authors();
  c.cite_range = {2000, 2003};
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), c, store);
  EXPECT_EQ(out_of(p, "A3"), 0.5);  // only P2 -> P1
}

TEST_F(M1, ReferenceCountScheme) {
  auto c = authors();
  c.schemes.s2 = true;
  const auto p = compute_profile(ego_of({{"A1", EntityKind::author}}), c, store);
  // P2 has one reference, P3 has two.
  EXPECT_DOUBLE_EQ(out_of(p, "A3"), 0.5 * 1.0 + 0.5 * 0.5);
  EXPECT_DOUBLE_EQ(in_of(p, "A3"), 0.5);
  EXPECT_DOUBLE_EQ(in_of(p, "A2"), 0.25);
}

TEST_F(M1, NormalisationWeights) {
  const auto& p1 = corpus.paper(*corpus.find_paper("P1"));
  const auto& p3 = corpus.paper(*corpus.find_paper("P3"));
  EXPECT_EQ(normalization_weight(p1, EntityKind::author, "A2"), 0.5);
  EXPECT_EQ(normalization_weight(p1, EntityKind::author, "A2", false), 1.0);
  EXPECT_EQ(normalization_weight(p1, EntityKind::venue, "V1"), 1.0);
  // Only one of P3's author slots carries an institution.
  EXPECT_EQ(normalization_weight(p3, EntityKind::institution, "I1"), 1.0);
}

TEST(Selection, KeepsTopByMaxScore) {
  InfluenceProfile p;
  p.alters = {{"a", "a", EntityKind::author, 1.0, 0.0},
              {"b", "b", EntityKind::author, 0.2, 3.0},
              {"c", "c", EntityKind::author, 0.5, 0.5},
              {"d", "d", EntityKind::author, 2.0, 2.0}};
  const auto top = select_alters(p, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].id, "b");
  EXPECT_EQ(top[1].id, "d");
  EXPECT_THROW(select_alters(p, 0), InvalidArgument);
  EXPECT_EQ(select_alters(p, 50).size(), 4u);
}

TEST(Selection, TiesBreakByTotalThenId) {
  InfluenceProfile p;
  p.alters = {{"z", "z", EntityKind::author, 1.0, 0.0},
              {"y", "y", EntityKind::author, 1.0, 0.5},
              {"x", "x", EntityKind::author, 0.0, 1.0},
              {"w", "w", EntityKind::author, 1.0, 0.0}};
  const auto top = select_alters(p, 4);
  EXPECT_EQ(top[0].id, "y");
  EXPECT_EQ(top[1].id, "w");
  EXPECT_EQ(top[2].id, "x");
  EXPECT_EQ(top[3].id, "z");
}

TEST(Sorting, ModesAndTies) {
  std::vector<AlterScore> a = {{"a", "a", EntityKind::author, 1.0, 1.0},
                               {"b", "b", EntityKind::author, 2.0, 0.0},
                               {"c", "c", EntityKind::author, 0.0, 3.0},
                               {"d", "d", EntityKind::author, 2.0, 2.0}};
  auto ids = [](const std::vector<AlterScore>& v) {
    std::string s;
    for (const auto& x : v) s += x.id;
    return s;
  };
  EXPECT_EQ(ids(sort_alters(a, SortMode::ratio)), "badc");
  EXPECT_EQ(ids(sort_alters(a, SortMode::influenced_by)), "bdac");
  EXPECT_EQ(ids(sort_alters(a, SortMode::influencing)), "cdab");
  EXPECT_EQ(ids(sort_alters(a, SortMode::total)), "dcab");
  EXPECT_EQ(parse_sort_mode("influencing"), SortMode::influencing);
  EXPECT_FALSE(parse_sort_mode("bogus"));
}

TEST(Sorting, RatioIsAntisymmetric) {
  EXPECT_EQ(influence_ratio(0, 0), 0.0);
  EXPECT_EQ(influence_ratio(1, 0), 1.0);
  EXPECT_EQ(influence_ratio(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(influence_ratio(3, 1), -influence_ratio(1, 3));
  EXPECT_DOUBLE_EQ(influence_ratio(3, 1), influence_ratio(6, 2));
}

TEST(CoContributors, FilterDropsSharedAlters) {
  const auto corpus = m1_corpus();
  const auto store = IndexStore::build(corpus);
  auto p = compute_profile(ego_of({{"P2", EntityKind::paper}}), authors(), store);
  ASSERT_NE(p.find("A3"), nullptr);
  EXPECT_TRUE(p.find("A3")->co_contributor);
  EXPECT_FALSE(p.find("A1")->co_contributor);
  p = without_co_contributors(std::move(p));
  EXPECT_EQ(p.find("A3"), nullptr);
  EXPECT_NE(p.find("A1"), nullptr);
}

TEST(Symmetry, SingleEntityEgosMirror) {
  // For single-author egos with self-citations kept, out(A->B) == in(B->A).
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto corpus = random_corpus(rng);
    const auto store = IndexStore::build(corpus);
    std::vector<std::string> ids;
    for (const auto& [key, rec] : corpus.entities())
      if (key.first == EntityKind::author && !store.papers_of(key.first, key.second).empty())
        ids.push_back(key.second);
    if (ids.size() < 2) continue;
    InfluenceConfig c = authors();
    for (std::size_t i = 0; i + 1 < ids.size() && i < 5; ++i) {
      const auto pa = compute_profile(ego_of({{ids[i], EntityKind::author}}), c, store);
      const auto pb = compute_profile(ego_of({{ids[i + 1], EntityKind::author}}), c, store);
      EXPECT_NEAR(out_of(pa, ids[i + 1]), in_of(pb, ids[i]), 1e-12);
      EXPECT_NEAR(in_of(pa, ids[i + 1]), out_of(pb, ids[i]), 1e-12);
    }
  }
}

TEST(Validation, RejectsBadConfigs) {
  InfluenceConfig c;
  c.alter_kind = EntityKind::paper;
  EXPECT_THROW(validate(c), InvalidArgument);
  c = InfluenceConfig{};
  c.pub_range = {2005, 2000};
  EXPECT_THROW(validate(c), InvalidArgument);
}

}  // namespace
}  // namespace influence
