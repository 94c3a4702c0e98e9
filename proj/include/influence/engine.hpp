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

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "influence/bundle_cache.hpp"
#include "influence/flower_config.hpp"
#include "influence/flower_geometry.hpp"
#include "influence/search.hpp"

namespace influence {

struct GalleryEntry {
  std::string category;
  std::string name;
  std::string description;
  std::string config_token;
};

/// Reads a line-delimited gallery file. Blank lines are skipped; malformed
/// rows raise ParseError.
std::vector<GalleryEntry> load_gallery(const std::filesystem::path& path);

/// Entries grouped by category, categories in first-appearance order.
json gallery_to_json(std::span<const GalleryEntry> entries);

struct FlowerResult {
  FlowerConfig resolved;  // ranges filled in
  InfluenceProfile profile;  // after the co-contributor filter
  FlowerLayout layout;
  std::optional<ContrastLayout> contrast;
  OverviewBars bars;
  SummaryStats stats;
  FetchLedger ledger;
  double elapsed_ms = 0.0;
};

json stats_to_json(const SummaryStats& stats);
json profile_to_json(const InfluenceProfile& profile);
std::string profile_to_csv(const InfluenceProfile& profile);
json detail_to_json(const DetailPairs& pairs, const Corpus& corpus);

/// Response body for one flower. Everything but "diagnostics" is a pure
/// function of the corpus and the resolved config.
json flower_response(const FlowerResult& result);

/// Shared core of the CLI and the HTTP service: one immutable corpus with its
/// index, a bundle cache and a name search index.
class InfluenceEngine {
 public:
  struct Options {
    std::optional<std::filesystem::path> cache_dir;
    std::optional<std::size_t> cache_capacity;
    std::optional<std::filesystem::path> index_snapshot;  // loaded instead of rebuilt
    std::optional<std::filesystem::path> gallery_file;
    DisplayScale scale;
  };

  InfluenceEngine(Corpus corpus, Options options);

  const Corpus& corpus() const { return *corpus_; }
  const IndexStore& store() const { return *store_; }
  BundleCache& cache() { return *cache_; }
  const SearchIndex& search_index() const { return *search_; }

  /// Throws InvalidArgument for a malformed config and NotFound for unknown
  /// selection members.
  FlowerResult flower(const FlowerConfig& config);
  json flower_json(const FlowerConfig& config) { return flower_response(flower(config)); }

  /// Throws NotFound when the alter is not part of the flower's profile.
  DetailPairs detail(const FlowerConfig& config, std::string_view alter_id);

  /// Stats only; ranges resolve as for a flower.
  json stats(const FlowerConfig& config);

  std::vector<SearchHit> search(std::string_view query, std::span<const EntityKind> kinds,
                                std::size_t limit) const {
    return search_->search(query, kinds, limit);
  }

  const std::vector<GalleryEntry>& gallery() const { return gallery_; }

  WarmReport warm(const EntitySelection& selection) { return cache_->warm(selection); }

 private:
  struct Resolved {
    FlowerConfig config;
    InfluenceConfig anchor;
    Neighbourhood hood;
    FetchLedger ledger;
  };

  Resolved resolve(const FlowerConfig& config);

  std::unique_ptr<const Corpus> corpus_;
  std::unique_ptr<const IndexStore> store_;
  std::unique_ptr<BundleCache> cache_;
  std::unique_ptr<const SearchIndex> search_;
  std::vector<GalleryEntry> gallery_;
  DisplayScale scale_;
};

/// Link for a resolved config, as returned in flower responses.
std::string config_link(const FlowerConfig& config);

/// Extracts the token from a config link (or returns a bare token unchanged).
std::string token_from_link(std::string_view link);

}  // namespace influence
