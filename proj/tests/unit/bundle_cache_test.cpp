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

#include <thread>

#include "fixtures.hpp"
#include "influence/bundle_cache.hpp"
#include "influence/influence.hpp"

namespace influence {
namespace {

class CacheTest : public ::testing::Test {
 protected:
  Corpus corpus = testing::m1_corpus();
  IndexStore store = IndexStore::build(corpus);
  testing::TempDir dir{"cache"};
  EntitySelection a1{{{"A1", EntityKind::author}}, ""};
};

TEST_F(CacheTest, MissThenHitInMemory) {
  BundleCache cache(store, {});
  FetchLedger ledger;
  auto first = cache.fetch("P1", BundleLevel::complete, ledger);
  auto second = cache.fetch("P1", BundleLevel::complete, ledger);
  EXPECT_EQ(ledger.fetches, 2u);
  EXPECT_EQ(ledger.misses, 1u);
  EXPECT_EQ(ledger.hits, 1u);
  EXPECT_EQ(first.get(), second.get());
  EXPECT_THROW(cache.fetch("P9", BundleLevel::partial, ledger), NotFound);
}

TEST_F(CacheTest, CompleteEntryServesPartialRequests) {
  BundleCache cache(store, {});
  FetchLedger ledger;
  cache.fetch("P2", BundleLevel::complete, ledger);
  auto b = cache.fetch("P2", BundleLevel::partial, ledger);
  EXPECT_EQ(b->level, BundleLevel::complete);
  EXPECT_EQ(ledger.hits, 1u);
}

TEST_F(CacheTest, PartialEntryIsUpgraded) {
  BundleCache cache(store, {dir.path(), std::nullopt});
  FetchLedger ledger;
  cache.fetch("P2", BundleLevel::partial, ledger);
  EXPECT_EQ(cache.cached_level("P2"), BundleLevel::partial);
  auto b = cache.fetch("P2", BundleLevel::complete, ledger);
  EXPECT_EQ(b->level, BundleLevel::complete);
  EXPECT_EQ(ledger.misses, 2u);
  EXPECT_EQ(cache.cached_level("P2"), BundleLevel::complete);
}

TEST_F(CacheTest, DiskEntriesSurviveRestart) {
  {
    BundleCache cache(store, {dir.path(), std::nullopt});
    const auto r = cache.warm(a1);
    EXPECT_EQ(r.complete, 2u);
    EXPECT_EQ(r.partial, 1u);  // P2
    EXPECT_EQ(r.written, 3u);
    EXPECT_TRUE(std::filesystem::exists(BundleCache::entry_path(dir.path(), "P1")));
  }
  BundleCache reopened(store, {dir.path(), std::nullopt});
  EXPECT_EQ(reopened.cached_level("P1"), BundleLevel::complete);
  EXPECT_EQ(reopened.cached_level("P2"), BundleLevel::partial);
  FetchLedger ledger;
  const auto hood = gather(corpus, store.resolve(a1), reopened, ledger);
  EXPECT_EQ(ledger.fetches, 3u);
  EXPECT_EQ(ledger.misses, 0u);
  EXPECT_EQ(ledger.hits, 3u);
  EXPECT_EQ(reopened.writes(), 0u);
  EXPECT_EQ(reopened.warm(a1).written, 0u);
}

TEST_F(CacheTest, RejectsDirectoryOfAnotherCorpus) {
  { BundleCache cache(store, {dir.path(), std::nullopt}); }
  std::vector<PaperRecord> papers = corpus.papers();
  papers.pop_back();
  const auto other = Corpus::build(papers, {}, {});
  const auto other_store = IndexStore::build(other);
  EXPECT_THROW(BundleCache(other_store, {dir.path(), std::nullopt}), InvalidArgument);
}

TEST_F(CacheTest, CorruptEntryIsRebuilt) {
  BundleCache cache(store, {dir.path(), std::nullopt});
  FetchLedger ledger;
  cache.fetch("P1", BundleLevel::complete, ledger);
  testing::write_text(BundleCache::entry_path(dir.path(), "P1"), "{not json\n");
  BundleCache fresh(store, {dir.path(), std::nullopt});
  ledger.reset();
  auto b = fresh.fetch("P1", BundleLevel::complete, ledger);
  EXPECT_EQ(ledger.misses, 1u);
  EXPECT_EQ(b->meta.id, "P1");
  EXPECT_EQ(b->citers.size(), 2u);
}

TEST_F(CacheTest, CapacityEvictsLeastRecent) {
  BundleCache cache(store, {std::nullopt, 2});
  FetchLedger ledger;
  cache.fetch("P1", BundleLevel::partial, ledger);
  cache.fetch("P2", BundleLevel::partial, ledger);
  cache.fetch("P1", BundleLevel::partial, ledger);
  cache.fetch("P3", BundleLevel::partial, ledger);
  EXPECT_EQ(cache.memory_entries(), 2u);
  EXPECT_EQ(cache.cached_level("P2"), std::nullopt);
  EXPECT_EQ(cache.cached_level("P1"), BundleLevel::partial);
  EXPECT_THROW(BundleCache(store, {std::nullopt, 0}), InvalidArgument);
}

TEST_F(CacheTest, BatchCountsAsOneFetch) {
  BundleCache cache(store, {});
  FetchLedger ledger;
  std::vector<std::string> ids = {"P1", "P2", "P3"};
  const auto out = cache.fetch_batch(ids, BundleLevel::partial, ledger);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1]->meta.id, "P2");
  EXPECT_EQ(ledger.fetches, 1u);
  EXPECT_EQ(ledger.misses, 3u);
  ledger.reset();
  cache.fetch_batch({}, BundleLevel::partial, ledger);
  EXPECT_EQ(ledger.fetches, 1u);
}

TEST_F(CacheTest, ConcurrentFetchesWriteOnce) {
  BundleCache cache(store, {dir.path(), std::nullopt});
  std::vector<std::thread> threads;
  std::vector<FetchLedger> ledgers(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i)
        for (const char* id : {"P1", "P2", "P3"}) cache.fetch(id, BundleLevel::complete, ledgers[t]);
    });
  }
  for (auto& t : threads) t.join();
  std::size_t misses = 0;
  for (const auto& l : ledgers) misses += l.misses;
  EXPECT_EQ(misses, 3u);
  EXPECT_EQ(cache.writes(), 3u);
}

TEST(CachePath, FansOutByHash) {
  const auto p = BundleCache::entry_path("/c", "P1");
  EXPECT_EQ(p.filename(), "5031.jsonl");
  EXPECT_EQ(p.parent_path().parent_path().parent_path(), "/c");
  EXPECT_EQ(p.parent_path().filename().string().size(), 2u);
}

}  // namespace
}  // namespace influence
