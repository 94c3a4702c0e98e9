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

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/json_io.hpp"

namespace influence {

enum class BundleLevel { partial = 0, complete = 1 };

std::string_view to_string(BundleLevel level);

/// Per-paper cache record. A partial bundle carries metadata only; a complete
/// bundle adds the reference and citer id lists.
struct PaperBundle {
  BundleLevel level = BundleLevel::partial;
  PaperRecord meta;
  std::uint32_t reference_count = 0;
  std::uint32_t citation_count = 0;
  std::vector<std::string> references;
  std::vector<std::string> citers;

  bool operator==(const PaperBundle&) const = default;
};

using BundlePtr = std::shared_ptr<const PaperBundle>;

json bundle_to_json(const PaperBundle& bundle);
PaperBundle bundle_from_json(const json& in);

/// Inverted indexes over an immutable corpus. The corpus must outlive the store.
class IndexStore {
 public:
  static IndexStore build(const Corpus& corpus);

  /// Reads a snapshot written by `save`. Throws InvalidArgument if the snapshot
  /// was built from a different corpus.
  static IndexStore load(const std::filesystem::path& path, const Corpus& corpus);
  void save(const std::filesystem::path& path) const;

  const Corpus& corpus() const { return *corpus_; }

  /// Papers carrying an entity (any topic level). Empty for unknown ids.
  const PaperSet& papers_of(EntityKind kind, std::string_view id) const;

  /// Distinct entities of `kind` on a paper (topics at every level).
  const std::vector<std::string>& entities_of(PaperIndex paper, EntityKind kind) const {
    return paper_entities_[static_cast<std::size_t>(kind)].at(paper);
  }

  std::span<const PaperIndex> references(PaperIndex paper) const { return references_.at(paper); }
  std::span<const PaperIndex> citers(PaperIndex paper) const { return citers_.at(paper); }

  /// Sum of citer counts over the entity's papers.
  std::uint64_t citation_total(EntityKind kind, std::string_view id) const;

  /// Index-backed equivalent of resolve_selection.
  PaperSet resolve(const EntitySelection& selection) const;

  /// Builds a bundle straight from the indexes (no caching, no accounting).
  PaperBundle materialize(PaperIndex paper, BundleLevel level) const;

  /// Checks that citers is the exact transpose of references and that the
  /// citation totals agree with the adjacency.
  bool verify() const;

  bool operator==(const IndexStore& other) const;

 private:
  static constexpr std::size_t kKinds = 5;

  void finish();

  const Corpus* corpus_ = nullptr;
  std::array<std::unordered_map<std::string, PaperSet>, kKinds> entity_papers_;
  std::array<std::vector<std::vector<std::string>>, kKinds> paper_entities_;
  std::vector<std::vector<PaperIndex>> references_;
  std::vector<std::vector<PaperIndex>> citers_;
  std::array<std::unordered_map<std::string, std::uint64_t>, kKinds> citation_totals_;
};

}  // namespace influence
