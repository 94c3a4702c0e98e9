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

#include "influence/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>

namespace influence {

namespace {

constexpr std::string_view kLinkPrefix = "/flower?config=";

// Ranges used when the ego has no papers at all.
constexpr YearRange kEmptySpan{1000, 3000};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string display_name(const EntitySelection& selection, const Corpus& corpus) {
  if (!selection.display_name.empty()) return selection.display_name;
  std::string joined;
  for (const auto& m : selection.members) {
    if (!joined.empty()) joined += " + ";
    const auto* record = corpus.find_entity(m.kind, m.id);
    joined += record ? record->name : m.id;
  }
  return joined;
}

json brief_json(const PaperBrief& p) { return {{"id", p.id}, {"title", p.title}, {"year", p.year}}; }

json year_counts(const std::map<int, std::uint64_t>& counts) {
  json out = json::array();
  for (const auto& [year, count] : counts) out.push_back({{"year", year}, {"count", count}});
  return out;
}

}  // namespace

std::vector<GalleryEntry> load_gallery(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open gallery file " + path.string());
  std::vector<GalleryEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto row = json::parse(line);
      GalleryEntry entry;
      entry.category = row.at("category").get<std::string>();
      entry.name = row.at("name").get<std::string>();
      entry.description = row.value("description", std::string{});
      entry.config_token = row.at("config_token").get<std::string>();
      entries.push_back(std::move(entry));
    } catch (const json::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
  return entries;
}

json gallery_to_json(std::span<const GalleryEntry> entries) {
  json out = json::array();
  std::vector<std::string> order;
  for (const auto& e : entries) {
    auto it = std::find(order.begin(), order.end(), e.category);
    std::size_t slot = static_cast<std::size_t>(it - order.begin());
    if (it == order.end()) {
      order.push_back(e.category);
      out.push_back({{"category", e.category}, {"entries", json::array()}});
    }
    out[slot]["entries"].push_back(
        {{"name", e.name}, {"description", e.description}, {"config_token", e.config_token}});
  }
  return out;
}

json stats_to_json(const SummaryStats& stats) {
  return {{"papers", stats.papers},
          {"refs_total", stats.refs_total},
          {"cites_total", stats.cites_total},
          {"refs_avg", stats.refs_avg},
          {"cites_avg", stats.cites_avg},
          {"publications_by_year", year_counts(stats.publications_by_year)},
          {"citations_by_year", year_counts(stats.citations_by_year)}};
}

json profile_to_json(const InfluenceProfile& profile) {
  json alters = json::array();
  for (const auto& a : profile.alters)
    alters.push_back({{"alter_id", a.id},
                      {"name", a.name},
                      {"kind", std::string(to_string(a.kind))},
                      {"in_score", a.in_score},
                      {"out_score", a.out_score},
                      {"raw_ref_count", a.raw_ref_count},
                      {"raw_cite_count", a.raw_cite_count},
                      {"co_contributor", a.co_contributor}});
  return {{"alter_kind", std::string(to_string(profile.alter_kind))},
          {"ego_papers", profile.ego_papers},
          {"total_in", profile.total_in},
          {"total_out", profile.total_out},
          {"raw_refs", profile.raw_refs},
          {"raw_cites", profile.raw_cites},
          {"alters", std::move(alters)}};
}

std::string profile_to_csv(const InfluenceProfile& profile) {
  std::string out = "alter_id,name,kind,in_score,out_score,raw_ref_count,raw_cite_count,co_contributor\n";
  for (const auto& a : profile.alters) {
    out += csv_field(a.id) + "," + csv_field(a.name) + "," + std::string(to_string(a.kind)) + "," +
           format_double(a.in_score) + "," + format_double(a.out_score) + "," +
           std::to_string(a.raw_ref_count) + "," + std::to_string(a.raw_cite_count) + "," +
           (a.co_contributor ? "true" : "false") + "\n";
  }
  return out;
}

json detail_to_json(const DetailPairs& pairs, const Corpus& corpus) {
  const auto* record = corpus.find_entity(pairs.alter.kind, pairs.alter.id);
  json rows = json::array();
  for (const auto& row : pairs.rows) {
    json incoming = json::array();
    json outgoing = json::array();
    for (const auto& p : row.incoming) incoming.push_back(brief_json(p));
    for (const auto& p : row.outgoing) outgoing.push_back(brief_json(p));
    rows.push_back({{"ego_paper", brief_json(row.ego_paper)},
                    {"incoming", std::move(incoming)},
                    {"outgoing", std::move(outgoing)}});
  }
  return {{"alter",
           {{"id", pairs.alter.id},
            {"kind", std::string(to_string(pairs.alter.kind))},
            {"name", record ? record->name : pairs.alter.id}}},
          {"pair_count", pairs.pair_count()},
          {"rows", std::move(rows)}};
}

json flower_response(const FlowerResult& result) {
  json out;
  out["layout"] = result.contrast ? layout_to_json(*result.contrast) : layout_to_json(result.layout);
  out["bars"] = bars_to_json(result.bars);
  out["stats"] = stats_to_json(result.stats);
  out["config"] = config_to_json(result.resolved);
  out["config_link"] = config_link(result.resolved);
  out["diagnostics"] = {{"fetches", result.ledger.fetches},
                        {"hits", result.ledger.hits},
                        {"misses", result.ledger.misses},
                        {"ego_papers", result.profile.ego_papers},
                        {"elapsed_ms", result.elapsed_ms}};
  return out;
}

std::string config_link(const FlowerConfig& config) {
  return std::string(kLinkPrefix) + encode_config(config);
}

std::string token_from_link(std::string_view link) {
  const auto pos = link.rfind("config=");
  if (pos == std::string_view::npos) return std::string(link);
  auto token = link.substr(pos + 7);
  if (auto amp = token.find('&'); amp != std::string_view::npos) token = token.substr(0, amp);
  return std::string(token);
}

InfluenceEngine::InfluenceEngine(Corpus corpus, Options options)
    : corpus_(std::make_unique<const Corpus>(std::move(corpus))), scale_(options.scale) {
  store_ = std::make_unique<const IndexStore>(
      options.index_snapshot ? IndexStore::load(*options.index_snapshot, *corpus_)
                             : IndexStore::build(*corpus_));
  cache_ = std::make_unique<BundleCache>(*store_,
                                         BundleCache::Options{options.cache_dir, options.cache_capacity});
  search_ = std::make_unique<const SearchIndex>(*store_);
  if (options.gallery_file) gallery_ = load_gallery(*options.gallery_file);
}

InfluenceEngine::Resolved InfluenceEngine::resolve(const FlowerConfig& config) {
  validate(config);
  Resolved r;
  r.config = config;
  const auto papers = store_->resolve(config.selection);
  r.hood = gather(*corpus_, papers, *cache_, r.ledger);

  const auto span = full_span(r.hood).value_or(kEmptySpan);
  if (!r.config.pub_range) r.config.pub_range = span;
  if (!r.config.cite_range) r.config.cite_range = span;
  // Re-check with the ranges filled in; the contrast must lie inside them.
  validate(r.config);

  r.anchor.alter_kind = config.alter_kind;
  r.anchor.pub_range = *r.config.pub_range;
  r.anchor.cite_range = *r.config.cite_range;
  r.anchor.include_self_citations = config.include_self_citations;
  r.anchor.exclude_co_contributors = config.exclude_co_contributors;
  r.anchor.schemes = config.schemes;
  r.anchor.topic_level = config.topic_level;
  return r;
}

FlowerResult InfluenceEngine::flower(const FlowerConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto r = resolve(config);

  FlowerResult result;
  result.resolved = r.config;
  result.profile = compute_profile(config.selection, r.hood, r.anchor, *corpus_);
  if (config.exclude_co_contributors)
    result.profile = without_co_contributors(std::move(result.profile));

  const auto sorted =
      sort_alters(select_alters(result.profile, config.petal_count), config.sort_mode);
  result.layout = layout_flower(sorted, display_name(config.selection, *corpus_), scale_);
  result.bars = overview_bars(result.profile, result.layout);
  result.stats = summary_stats(r.hood, r.anchor);

  if (config.contrast) {
    auto sub = r.anchor;
    sub.pub_range = config.contrast->pub_range;
    sub.cite_range = config.contrast->cite_range;
    const auto contrast = compute_profile(config.selection, r.hood, sub, *corpus_);
    result.contrast = compose_contrast(result.layout, contrast);
  }

  result.ledger = r.ledger;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

DetailPairs InfluenceEngine::detail(const FlowerConfig& config, std::string_view alter_id) {
  auto r = resolve(config);
  auto profile = compute_profile(config.selection, r.hood, r.anchor, *corpus_);
  if (config.exclude_co_contributors) profile = without_co_contributors(std::move(profile));
  if (!profile.find(alter_id))
    throw NotFound("alter " + std::string(alter_id) + " is not part of this flower");
  return detail_pairs(r.hood, EntityRef{std::string(alter_id), config.alter_kind}, r.anchor);
}

json InfluenceEngine::stats(const FlowerConfig& config) {
  auto r = resolve(config);
  auto out = stats_to_json(summary_stats(r.hood, r.anchor));
  out["pub_range"] = *r.config.pub_range;
  out["cite_range"] = *r.config.cite_range;
  return out;
}

}  // namespace influence
