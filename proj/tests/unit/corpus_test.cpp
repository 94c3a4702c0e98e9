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

#include "fixtures.hpp"
#include "influence/corpus.hpp"

namespace influence {
namespace {

using testing::TempDir;
using testing::write_text;

struct Files {
  TempDir dir{"corpus"};
  std::filesystem::path papers = dir / "papers.jsonl";
  std::filesystem::path citations = dir / "citations.tsv";
  std::filesystem::path entities = dir / "entities.jsonl";

  Files(const std::string& p, const std::string& c, const std::string& e) {
    write_text(papers, p);
    write_text(citations, c);
    write_text(entities, e);
  }

  Corpus load(LoadReport* r = nullptr) const { return load_corpus(papers, citations, entities, r); }
};

const char* kEntities = R"({"id":"A1","kind":"author","name":"Ada"}
{"id":"T1","kind":"topic","name":"Graphs"}
)";

TEST(Corpus, LoadsM1FromDisk) {
  LoadReport report;
  const auto dir = testing::m1_dir();
  const auto loaded = load_corpus(dir / "papers.jsonl", dir / "citations.tsv",
                                  dir / "entities.jsonl", &report);
  EXPECT_EQ(report.papers, 3u);
  EXPECT_EQ(report.edges, 3u);
  EXPECT_EQ(report.implicit_entities, 0u);
  EXPECT_EQ(loaded, testing::m1_corpus());
  EXPECT_EQ(loaded.fingerprint(), testing::m1_corpus().fingerprint());
}

TEST(Corpus, EdgesAreSortedAndDeduplicated) {
  Files f(R"({"id":"P1","year":2000}
{"id":"P2","year":2001}
{"id":"P3","year":2002}
)",
          "P3\tP1\nP2\tP1\nP2\tP1\nP2\tP2\nP2\tPX\n", "");
  LoadReport r;
  const auto c = f.load(&r);
  EXPECT_EQ(r.edges, 2u);
  EXPECT_EQ(r.duplicate_edges, 1u);
  EXPECT_EQ(r.self_loops, 1u);
  EXPECT_EQ(r.dangling, 1u);
  ASSERT_EQ(c.edges().size(), 2u);
  EXPECT_EQ(c.edges()[0].citing, *c.find_paper("P2"));
  EXPECT_EQ(c.edges()[1].citing, *c.find_paper("P3"));
}

TEST(Corpus, MalformedPaperRowReportsLine) {
  Files f("{\"id\":\"P1\",\"year\":2000}\n\n{\"id\":\"P2\",\"year\":\n", "", kEntities);
  try {
    f.load();
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos);
  }
}

TEST(Corpus, MissingYearIsRejected) {
  Files f("{\"id\":\"P1\"}\n", "", kEntities);
  EXPECT_THROW(f.load(), ParseError);
}

TEST(Corpus, YearOutOfRangeIsRejected) {
  Files f("{\"id\":\"P1\",\"year\":999}\n", "", kEntities);
  EXPECT_THROW(f.load(), ParseError);
}

TEST(Corpus, DuplicatePaperIdIsRejected) {
  Files f("{\"id\":\"P1\",\"year\":2000}\n{\"id\":\"P1\",\"year\":2001}\n", "", kEntities);
  try {
    f.load();
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Corpus, BadCitationRowIsRejected) {
  Files f("{\"id\":\"P1\",\"year\":2000}\n", "P1 P2\n", kEntities);
  EXPECT_THROW(f.load(), ParseError);
}

TEST(Corpus, UnknownTopicsAreDroppedAndVenueConflictsCounted) {
  Files f(R"({"id":"P1","year":2000,"venue":["J1","C1"],"topics":[{"id":"T1","level":0},{"id":"T9","level":1},{"id":"T1","level":0}]})"
          "\n",
          "", kEntities);
  LoadReport r;
  const auto c = f.load(&r);
  EXPECT_EQ(r.dropped_topics, 1u);
  EXPECT_EQ(r.venue_conflicts, 1u);
  const auto& p = c.paper(0);
  ASSERT_TRUE(p.venue_id);
  EXPECT_EQ(*p.venue_id, "J1");
  ASSERT_EQ(p.topics.size(), 1u);
  EXPECT_EQ(p.topics[0].topic_id, "T1");
}

TEST(Corpus, ImplicitEntitiesAreRegistered) {
  Files f(R"({"id":"P1","title":"On Things","year":2000,"venue":"V7","authors":[{"id":"A1","inst":"I4"}]})"
          "\n",
          "", kEntities);
  LoadReport r;
  const auto c = f.load(&r);
  EXPECT_EQ(r.implicit_entities, 2u);  // V7 and I4
  const auto* v = c.find_entity(EntityKind::venue, "V7");
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->implicit);
  const auto* paper = c.find_entity(EntityKind::paper, "P1");
  ASSERT_NE(paper, nullptr);
  EXPECT_EQ(paper->name, "On Things");
  EXPECT_FALSE(c.find_entity(EntityKind::author, "A1")->implicit);
}

TEST(Corpus, EntitiesOnHonoursTopicLevel) {
  PaperRecord p{"P", "", 2000, std::nullopt, {{"A", "I"}, {"B", std::nullopt}, {"A", "I"}},
                {{"T0", 0}, {"T1", 1}}};
  EXPECT_EQ(entities_on(p, EntityKind::author), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(entities_on(p, EntityKind::institution), (std::vector<std::string>{"I"}));
  EXPECT_TRUE(entities_on(p, EntityKind::venue).empty());
  EXPECT_EQ(entities_on(p, EntityKind::topic, 1), (std::vector<std::string>{"T1"}));
  EXPECT_EQ(entities_on(p, EntityKind::topic).size(), 2u);
}

TEST(Corpus, ResolveSelectionIsUnionOfMembers) {
  const auto c = testing::m1_corpus();
  EntitySelection s{{{"A2", EntityKind::author}, {"V2", EntityKind::venue}}, ""};
  const auto papers = resolve_selection(s, c);
  EXPECT_EQ(papers, (PaperSet{0, 1}));
  s.members.push_back({"ZZ", EntityKind::author});
  EXPECT_THROW(resolve_selection(s, c), NotFound);
  EXPECT_THROW(resolve_selection(EntitySelection{}, c), InvalidArgument);
}

TEST(Corpus, FingerprintTracksContent) {
  auto a = testing::m1_corpus();
  std::vector<PaperRecord> papers = a.papers();
  papers[0].year = 1999;
  std::vector<std::pair<std::string, std::string>> edges = {{"P2", "P1"}};
  const auto b = Corpus::build(papers, edges, {});
  EXPECT_NE(a.fingerprint(), b.fingerprint());
}

TEST(Corpus, KindNamesRoundTrip) {
  for (auto k : {EntityKind::author, EntityKind::venue, EntityKind::institution,
                 EntityKind::topic, EntityKind::paper})
    EXPECT_EQ(parse_kind(to_string(k)), k);
  EXPECT_FALSE(parse_kind("journal"));
}

}  // namespace
}  // namespace influence
