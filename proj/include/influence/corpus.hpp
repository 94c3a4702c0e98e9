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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "influence/common.hpp"

namespace influence {

struct AuthorSlot {
  std::string author_id;
  std::optional<std::string> institution_id;

  bool operator==(const AuthorSlot&) const = default;
};

struct TopicTag {
  std::string topic_id;
  int level = 0;

  bool operator==(const TopicTag&) const = default;
};

struct PaperRecord {
  std::string id;
  std::string title;
  int year = 0;
  std::optional<std::string> venue_id;
  std::vector<AuthorSlot> authors;
  std::vector<TopicTag> topics;

  bool operator==(const PaperRecord&) const = default;
};

struct EntityRecord {
  std::string id;
  EntityKind kind = EntityKind::author;
  std::string name;
  std::optional<std::string> extra;
  // Set for ids seen on papers but absent from the entities file.
  bool implicit = false;

  bool operator==(const EntityRecord&) const = default;
};

using PaperIndex = std::uint32_t;

/// Sorted, duplicate-free paper indices (the multi-hot paper indicator).
using PaperSet = std::vector<PaperIndex>;

struct CitationEdge {
  PaperIndex citing = 0;
  PaperIndex cited = 0;

  auto operator<=>(const CitationEdge&) const = default;
};

struct EntitySelection {
  std::vector<EntityRef> members;
  std::string display_name;

  bool operator==(const EntitySelection&) const = default;
};

struct LoadReport {
  std::size_t papers = 0;
  std::size_t edges = 0;
  std::size_t dangling = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
  std::size_t dropped_topics = 0;
  std::size_t venue_conflicts = 0;
  std::size_t implicit_entities = 0;
  std::vector<std::string> warnings;
};

/// Distinct ids of `kind` attached to a paper, in first-appearance order.
/// Topics are filtered to `topic_level` when one is given.
std::vector<std::string> entities_on(const PaperRecord& paper, EntityKind kind,
                                     std::optional<int> topic_level = std::nullopt);

/// True if `entity_id` of `kind` appears on the paper (any topic level).
bool paper_has_entity(const PaperRecord& paper, EntityKind kind, std::string_view entity_id);

/// Immutable citation corpus. Construct through `Corpus::build` or `load_corpus`.
class Corpus {
 public:
  /// Validates and assembles a corpus. Citation pairs are (citing, cited) ids;
  /// dangling pairs, self-loops and duplicates are dropped and counted.
  static Corpus build(std::vector<PaperRecord> papers,
                      std::span<const std::pair<std::string, std::string>> citations,
                      std::vector<EntityRecord> entities, LoadReport* report = nullptr);

  std::size_t paper_count() const { return papers_.size(); }
  const std::vector<PaperRecord>& papers() const { return papers_; }
  const PaperRecord& paper(PaperIndex index) const { return papers_.at(index); }
  std::optional<PaperIndex> find_paper(std::string_view id) const;

  /// Sorted by (citing, cited).
  const std::vector<CitationEdge>& edges() const { return edges_; }

  const EntityRecord* find_entity(EntityKind kind, std::string_view id) const;
  const std::map<std::pair<EntityKind, std::string>, EntityRecord>& entities() const {
    return entities_;
  }

  /// Stable 64-bit digest of papers and edges; ties caches and snapshots to a corpus.
  std::uint64_t fingerprint() const { return fingerprint_; }

  bool operator==(const Corpus& other) const;

 private:
  std::vector<PaperRecord> papers_;
  std::unordered_map<std::string, PaperIndex> paper_by_id_;
  std::vector<CitationEdge> edges_;
  std::map<std::pair<EntityKind, std::string>, EntityRecord> entities_;
  std::uint64_t fingerprint_ = 0;
};

Corpus load_corpus(const std::filesystem::path& paper_file,
                   const std::filesystem::path& citation_file,
                   const std::filesystem::path& entity_file, LoadReport* report = nullptr);

/// Union of member paper sets. Throws NotFound naming an unknown member.
PaperSet resolve_selection(const EntitySelection& selection, const Corpus& corpus);

// Line parsers shared by the loader and the cache/gallery readers.
PaperRecord parse_paper_line(std::string_view line, const std::string& file, std::size_t line_no,
                             std::size_t* venue_conflicts = nullptr);
EntityRecord parse_entity_line(std::string_view line, const std::string& file,
                               std::size_t line_no);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 14695981039346656037ull);

}  // namespace influence
