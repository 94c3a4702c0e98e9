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

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <list>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "influence/index_store.hpp"

namespace influence {

/// Per-request fetch accounting. `fetches` counts issued queries (a batch is
/// one query); hits and misses count bundles.
struct FetchLedger {
  std::size_t fetches = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;

  void reset() { *this = FetchLedger{}; }
};

class BundleSource {
 public:
  virtual ~BundleSource() = default;

  /// Returns the bundle at `level` or higher. Throws NotFound for unknown ids.
  virtual BundlePtr fetch(std::string_view paper_id, BundleLevel level, FetchLedger& ledger) = 0;

  /// One query for many bundles; result order follows `paper_ids`.
  virtual std::vector<BundlePtr> fetch_batch(std::span<const std::string> paper_ids,
                                             BundleLevel level, FetchLedger& ledger) = 0;
};

/// Uncached source: every bundle is materialized from the indexes (all misses).
class DirectSource final : public BundleSource {
 public:
  explicit DirectSource(const IndexStore& store) : store_(store) {}

  BundlePtr fetch(std::string_view paper_id, BundleLevel level, FetchLedger& ledger) override;
  std::vector<BundlePtr> fetch_batch(std::span<const std::string> paper_ids, BundleLevel level,
                                     FetchLedger& ledger) override;

 private:
  const IndexStore& store_;
};

struct WarmReport {
  std::size_t complete = 0;  // ego papers held at complete level
  std::size_t partial = 0;   // linked papers covered at partial level
  std::size_t written = 0;   // entries created or upgraded by this call

  bool operator==(const WarmReport&) const = default;
};

/// Two-tier paper bundle cache: an in-memory LRU layer in front of an optional
/// on-disk directory (one record file per paper under a two-level fan-out).
/// Readers are concurrent; writes go through a single writer lock and replace
/// files atomically via rename.
class BundleCache final : public BundleSource {
 public:
  struct Options {
    std::optional<std::filesystem::path> directory;
    // Memory-layer entry cap; unbounded when unset. Evicted entries remain on disk.
    std::optional<std::size_t> capacity;
  };

  BundleCache(const IndexStore& store, Options options);

  BundlePtr fetch(std::string_view paper_id, BundleLevel level, FetchLedger& ledger) override;
  std::vector<BundlePtr> fetch_batch(std::span<const std::string> paper_ids, BundleLevel level,
                                     FetchLedger& ledger) override;

  /// Caches the selection's papers at complete level and every referenced or
  /// citing paper at partial level.
  WarmReport warm(const EntitySelection& selection);

  /// Level currently cached for a paper (memory or disk), without accounting.
  std::optional<BundleLevel> cached_level(std::string_view paper_id) const;

  std::size_t memory_entries() const;
  std::size_t writes() const { return writes_.load(); }

  /// Record file for a paper id inside the cache directory.
  static std::filesystem::path entry_path(const std::filesystem::path& root,
                                          std::string_view paper_id);

 private:
  struct Slot {
    BundlePtr bundle;
    std::list<std::string>::iterator lru;
  };

  BundlePtr lookup_memory(const std::string& id, BundleLevel level);
  BundlePtr lookup_disk(const std::string& id, BundleLevel level) const;
  void remember(const std::string& id, BundlePtr bundle);
  BundlePtr fetch_one(const std::string& id, BundleLevel level, FetchLedger& ledger);

  const IndexStore& store_;
  Options options_;

  mutable std::mutex memory_mutex_;
  std::unordered_map<std::string, Slot> memory_;
  std::list<std::string> lru_;  // front = most recent

  std::mutex writer_mutex_;
  std::atomic<std::size_t> writes_{0};
};

}  // namespace influence
