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

#include "influence/index_store.hpp"

#include <algorithm>
#include <fstream>

namespace influence {

namespace {

constexpr std::array<EntityKind, 5> kAllKinds = {EntityKind::author, EntityKind::venue,
                                                 EntityKind::institution, EntityKind::topic,
                                                 EntityKind::paper};

std::size_t slot(EntityKind kind) { return static_cast<std::size_t>(kind); }

}  // namespace

std::string_view to_string(BundleLevel level) {
  return level == BundleLevel::complete ? "complete" : "partial";
}

json bundle_to_json(const PaperBundle& bundle) {
  json out{{"level", std::string(to_string(bundle.level))},
           {"meta", json(bundle.meta)},
           {"reference_count", bundle.reference_count},
           {"citation_count", bundle.citation_count}};
  if (bundle.level == BundleLevel::complete) {
    out["references"] = bundle.references;
    out["citers"] = bundle.citers;
  }
  return out;
}

PaperBundle bundle_from_json(const json& in) {
  PaperBundle bundle;
  auto level = in.at("level").get<std::string>();
  if (level == "complete") {
    bundle.level = BundleLevel::complete;
  } else if (level == "partial") {
    bundle.level = BundleLevel::partial;
  } else {
    throw InvalidArgument("unknown bundle level " + level);
  }
  bundle.meta = paper_from_json(in.at("meta"));
  bundle.reference_count = in.at("reference_count").get<std::uint32_t>();
  bundle.citation_count = in.at("citation_count").get<std::uint32_t>();
  if (bundle.level == BundleLevel::complete) {
    bundle.references = in.at("references").get<std::vector<std::string>>();
    bundle.citers = in.at("citers").get<std::vector<std::string>>();
  }
  return bundle;
}

IndexStore IndexStore::build(const Corpus& corpus) {
  IndexStore store;
  store.corpus_ = &corpus;
  const auto n = corpus.paper_count();
  for (auto kind : kAllKinds) store.paper_entities_[slot(kind)].resize(n);
  store.references_.resize(n);

  for (PaperIndex i = 0; i < n; ++i) {
    const auto& paper = corpus.paper(i);
    for (auto kind : kAllKinds) {
      auto ids = entities_on(paper, kind);
      for (const auto& id : ids) store.entity_papers_[slot(kind)][id].push_back(i);
      store.paper_entities_[slot(kind)][i] = std::move(ids);
    }
  }
  // Corpus edges are sorted by (citing, cited), so reference lists come out sorted.
  for (const auto& edge : corpus.edges()) store.references_[edge.citing].push_back(edge.cited);
  store.finish();
  return store;
}

void IndexStore::finish() {
  const auto n = corpus_->paper_count();
  citers_.assign(n, {});
  for (PaperIndex i = 0; i < n; ++i)
    for (auto cited : references_[i]) citers_[cited].push_back(i);

  for (auto kind : kAllKinds) {
    auto& totals = citation_totals_[slot(kind)];
    totals.clear();
    for (const auto& [id, papers] : entity_papers_[slot(kind)]) {
      std::uint64_t sum = 0;
      for (auto p : papers) sum += citers_[p].size();
      totals[id] = sum;
    }
  }
}

void IndexStore::save(const std::filesystem::path& path) const {
  json out;
  out["format"] = "influence-index-v1";
  out["fingerprint"] = std::to_string(corpus_->fingerprint());
  json entities = json::object();
  for (auto kind : kAllKinds) {
    json by_id = json::object();
    for (const auto& [id, papers] : entity_papers_[slot(kind)]) {
      json ids = json::array();
      for (auto p : papers) ids.push_back(corpus_->paper(p).id);
      by_id[id] = std::move(ids);
    }
    entities[std::string(to_string(kind))] = std::move(by_id);
  }
  out["entity_papers"] = std::move(entities);
  json refs = json::object();
  for (PaperIndex i = 0; i < references_.size(); ++i) {
    if (references_[i].empty()) continue;
    json ids = json::array();
    for (auto r : references_[i]) ids.push_back(corpus_->paper(r).id);
    refs[corpus_->paper(i).id] = std::move(ids);
  }
  out["references"] = std::move(refs);

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw UserError("cannot write " + tmp.string());
    file << out.dump() << '\n';
    if (!file) throw UserError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

IndexStore IndexStore::load(const std::filesystem::path& path, const Corpus& corpus) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UserError("cannot open " + path.string());
  json in;
  try {
    in = json::parse(file);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed index snapshot " + path.string() + ": " + e.what());
  }
  if (in.value("format", std::string()) != "influence-index-v1")
    throw InvalidArgument("unsupported index snapshot " + path.string());
  if (in.at("fingerprint").get<std::string>() != std::to_string(corpus.fingerprint()))
    throw InvalidArgument("index snapshot " + path.string() + " was built from a different corpus");

  IndexStore store;
  store.corpus_ = &corpus;
  const auto n = corpus.paper_count();
  auto lookup = [&](const std::string& id) {
    auto p = corpus.find_paper(id);
    if (!p) throw InvalidArgument("index snapshot references unknown paper " + id);
    return *p;
  };
  const auto& entities = in.at("entity_papers");
  for (auto kind : kAllKinds) {
    store.paper_entities_[slot(kind)].resize(n);
    auto& index = store.entity_papers_[slot(kind)];
    for (const auto& [id, papers] : entities.at(std::string(to_string(kind))).items()) {
      auto& set = index[id];
      for (const auto& pid : papers) set.push_back(lookup(pid.get<std::string>()));
      std::sort(set.begin(), set.end());
    }
  }
  // Per-paper entity order follows the paper record, as in build().
  for (PaperIndex i = 0; i < n; ++i)
    for (auto kind : kAllKinds) store.paper_entities_[slot(kind)][i] = entities_on(corpus.paper(i), kind);

  store.references_.assign(n, {});
  for (const auto& [id, refs] : in.at("references").items()) {
    auto& list = store.references_[lookup(id)];
    for (const auto& r : refs) list.push_back(lookup(r.get<std::string>()));
    std::sort(list.begin(), list.end());
  }
  store.finish();
  return store;
}

const PaperSet& IndexStore::papers_of(EntityKind kind, std::string_view id) const {
  static const PaperSet kEmpty;
  const auto& index = entity_papers_[slot(kind)];
  auto it = index.find(std::string(id));
  return it == index.end() ? kEmpty : it->second;
}

std::uint64_t IndexStore::citation_total(EntityKind kind, std::string_view id) const {
  const auto& totals = citation_totals_[slot(kind)];
  auto it = totals.find(std::string(id));
  return it == totals.end() ? 0 : it->second;
}

PaperSet IndexStore::resolve(const EntitySelection& selection) const {
  if (selection.members.empty()) throw InvalidArgument("selection has no members");
  PaperSet out;
  for (const auto& member : selection.members) {
    if (!corpus_->find_entity(member.kind, member.id))
      throw NotFound("unknown " + std::string(to_string(member.kind)) + " " + member.id);
    const auto& papers = papers_of(member.kind, member.id);
    PaperSet merged;
    std::set_union(out.begin(), out.end(), papers.begin(), papers.end(),
                   std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

PaperBundle IndexStore::materialize(PaperIndex paper, BundleLevel level) const {
  PaperBundle bundle;
  bundle.level = level;
  bundle.meta = corpus_->paper(paper);
  bundle.reference_count = static_cast<std::uint32_t>(references_.at(paper).size());
  bundle.citation_count = static_cast<std::uint32_t>(citers_.at(paper).size());
  if (level == BundleLevel::complete) {
    for (auto r : references_[paper]) bundle.references.push_back(corpus_->paper(r).id);
    for (auto c : citers_[paper]) bundle.citers.push_back(corpus_->paper(c).id);
  }
  return bundle;
}

bool IndexStore::verify() const {
  const auto n = corpus_->paper_count();
  std::vector<std::vector<PaperIndex>> transposed(n);
  for (PaperIndex i = 0; i < n; ++i)
    for (auto r : references_[i]) transposed[r].push_back(i);
  for (PaperIndex i = 0; i < n; ++i) {
    auto expected = transposed[i];
    auto actual = citers_[i];
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) return false;
  }
  for (auto kind : kAllKinds) {
    for (const auto& [id, papers] : entity_papers_[slot(kind)]) {
      std::uint64_t sum = 0;
      for (auto p : papers) sum += citers_[p].size();
      if (citation_total(kind, id) != sum) return false;
    }
  }
  return true;
}

bool IndexStore::operator==(const IndexStore& other) const {
  return entity_papers_ == other.entity_papers_ && paper_entities_ == other.paper_entities_ &&
         references_ == other.references_ && citers_ == other.citers_ &&
         citation_totals_ == other.citation_totals_;
}

}  // namespace influence
