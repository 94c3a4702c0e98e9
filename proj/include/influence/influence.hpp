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

// Citation-derived influence between an ego selection and every alter of one
// kind. One citation carries one unit of influence, flowing from the cited
// paper to the citing paper. Scores are one row and one column of
//
//     S = A_k C A_l^T
//
// evaluated from the ego's references and citers only; the citation matrix is
// never materialized.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "influence/bundle_cache.hpp"
#include "influence/corpus.hpp"
#include "influence/index_store.hpp"

namespace influence {

/// Normalization schemes. s1 divides by the entities on the cited paper, s2 by
/// the citing paper's reference count, s3 by the entities on the citing paper.
struct Schemes {
  bool s1 = true;
  bool s2 = false;
  bool s3 = false;

  bool operator==(const Schemes&) const = default;
};

struct InfluenceConfig {
  EntityKind alter_kind = EntityKind::author;
  YearRange pub_range{1000, 3000};
  YearRange cite_range{1000, 3000};
  bool include_self_citations = true;
  bool exclude_co_contributors = false;
  Schemes schemes;
  int topic_level = 1;

  bool operator==(const InfluenceConfig&) const = default;
};

/// Throws InvalidArgument on an out-of-contract configuration.
void validate(const InfluenceConfig& config);

struct AlterScore {
  std::string id;
  std::string name;
  EntityKind kind = EntityKind::author;
  double in_score = 0.0;   // alter -> ego
  double out_score = 0.0;  // ego -> alter
  std::uint64_t raw_ref_count = 0;   // references from ego papers to alter papers
  std::uint64_t raw_cite_count = 0;  // citations of ego papers by alter papers
  bool co_contributor = false;

  double max_score() const { return in_score > out_score ? in_score : out_score; }
  double total() const { return in_score + out_score; }
};

struct InfluenceProfile {
  EntityKind alter_kind = EntityKind::author;
  std::vector<AlterScore> alters;  // sorted by id
  std::size_t ego_papers = 0;      // ego papers inside pub_range
  double total_in = 0.0;
  double total_out = 0.0;
  std::uint64_t raw_refs = 0;
  std::uint64_t raw_cites = 0;

  const AlterScore* find(std::string_view id) const;
};

/// The ego's papers at complete level plus every linked paper at (at least)
/// partial level.
struct Neighbourhood {
  std::vector<BundlePtr> ego;  // ascending corpus order
  std::unordered_map<std::string, BundlePtr> papers;
  std::unordered_set<std::string> ego_ids;

  const PaperBundle& at(const std::string& id) const;
  bool is_ego(const std::string& id) const { return ego_ids.count(id) != 0; }
};

/// One complete fetch per ego paper plus one batched partial fetch for the
/// linked papers: exactly |ego| + 1 queries on the ledger.
Neighbourhood gather(const Corpus& corpus, const PaperSet& ego, BundleSource& source,
                     FetchLedger& ledger);

/// Share of one unit of influence credited to `entity_id` on `paper`:
/// appearances of the entity over all appearances of its kind (topics counted
/// within the entity's level). 1.0 when s1 is off. Throws InvalidArgument when
/// the entity is not on the paper.
double normalization_weight(const PaperRecord& paper, EntityKind kind, std::string_view entity_id,
                            bool normalise = true);

/// Weight of the ego on one of its papers. Single-kind selections sum their
/// members' shares; selections that include papers or mix kinds act as a
/// project and weigh 1.
double ego_weight(const EntitySelection& ego, const PaperRecord& paper, bool normalise);

InfluenceProfile compute_profile(const EntitySelection& ego, const Neighbourhood& hood,
                                 const InfluenceConfig& config, const Corpus& corpus);

/// Convenience path: resolve + uncached gather + score.
InfluenceProfile compute_profile(const EntitySelection& ego, const InfluenceConfig& config,
                                 const IndexStore& store);

bool is_co_contributor(const Neighbourhood& hood, EntityKind kind, std::string_view alter_id);

/// Drops co-contributor alters (used before selection when the filter is on).
InfluenceProfile without_co_contributors(InfluenceProfile profile);

/// Top-k by max(in, out); ties by total then id.
std::vector<AlterScore> select_alters(const InfluenceProfile& profile, std::size_t k);

enum class SortMode { ratio, influenced_by, influencing, total };

std::string_view to_string(SortMode mode);
std::optional<SortMode> parse_sort_mode(std::string_view text);

/// (in - out) / (in + out); 0 when both are 0.
double influence_ratio(double in_score, double out_score);

/// Reorders only. Primary key descending, ties by id.
std::vector<AlterScore> sort_alters(std::vector<AlterScore> selected, SortMode mode);

struct PaperBrief {
  std::string id;
  std::string title;
  int year = 0;

  bool operator==(const PaperBrief&) const = default;
};

struct DetailRow {
  PaperBrief ego_paper;
  std::vector<PaperBrief> incoming;  // alter papers cited by this ego paper
  std::vector<PaperBrief> outgoing;  // alter papers citing this ego paper

  bool operator==(const DetailRow&) const = default;
};

struct DetailPairs {
  EntityRef alter;
  std::vector<DetailRow> rows;  // ego paper year ascending

  std::size_t pair_count() const;
  bool operator==(const DetailPairs&) const = default;
};

DetailPairs detail_pairs(const Neighbourhood& hood, const EntityRef& alter,
                         const InfluenceConfig& config);

struct SummaryStats {
  std::size_t papers = 0;
  std::uint64_t refs_total = 0;
  std::uint64_t cites_total = 0;
  double refs_avg = 0.0;
  double cites_avg = 0.0;
  std::map<int, std::uint64_t> publications_by_year;
  std::map<int, std::uint64_t> citations_by_year;  // keyed by citing-paper year
};

SummaryStats summary_stats(const Neighbourhood& hood, const InfluenceConfig& config);

/// First ego publication year to the last year the ego was cited (or published).
std::optional<YearRange> full_span(const Neighbourhood& hood);

}  // namespace influence
