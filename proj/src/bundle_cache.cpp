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

#include "influence/bundle_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

namespace influence {

namespace fs = std::filesystem;

namespace {

std::string hex_encode(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

PaperIndex require_paper(const Corpus& corpus, std::string_view id) {
  auto index = corpus.find_paper(id);
  if (!index) throw NotFound("unknown paper " + std::string(id));
  return *index;
}

std::string fingerprint_text(const Corpus& corpus) {
  return std::to_string(corpus.fingerprint());
}

}  // namespace

BundlePtr DirectSource::fetch(std::string_view paper_id, BundleLevel level, FetchLedger& ledger) {
  auto index = require_paper(store_.corpus(), paper_id);
  ++ledger.fetches;
  ++ledger.misses;
  return std::make_shared<const PaperBundle>(store_.materialize(index, level));
}

std::vector<BundlePtr> DirectSource::fetch_batch(std::span<const std::string> paper_ids,
                                                 BundleLevel level, FetchLedger& ledger) {
  std::vector<PaperIndex> indices;
  indices.reserve(paper_ids.size());
  for (const auto& id : paper_ids) indices.push_back(require_paper(store_.corpus(), id));
  ++ledger.fetches;
  std::vector<BundlePtr> out;
  out.reserve(indices.size());
  for (auto index : indices) {
    ++ledger.misses;
    out.push_back(std::make_shared<const PaperBundle>(store_.materialize(index, level)));
  }
  return out;
}

BundleCache::BundleCache(const IndexStore& store, Options options)
    : store_(store), options_(std::move(options)) {
  if (options_.capacity && *options_.capacity == 0)
    throw InvalidArgument("cache capacity must be positive");
  if (!options_.directory) return;
  fs::create_directories(*options_.directory);
  auto stamp = *options_.directory / "CORPUS";
  auto expected = fingerprint_text(store_.corpus());
  if (fs::exists(stamp)) {
    std::ifstream in(stamp);
    std::string found;
    std::getline(in, found);
    if (found != expected)
      throw InvalidArgument("cache directory " + options_.directory->string() +
                            " belongs to a different corpus");
  } else {
    std::ofstream out(stamp, std::ios::trunc);
    out << expected << '\n';
  }
}

fs::path BundleCache::entry_path(const fs::path& root, std::string_view paper_id) {
  auto hash = fnv1a64(paper_id);
  char fan[8];
  std::snprintf(fan, sizeof fan, "%02x", static_cast<unsigned>((hash >> 56) & 0xff));
  std::string first = fan;
  std::snprintf(fan, sizeof fan, "%02x", static_cast<unsigned>((hash >> 48) & 0xff));
  return root / first / fan / (hex_encode(paper_id) + ".jsonl");
}

BundlePtr BundleCache::lookup_memory(const std::string& id, BundleLevel level) {
  std::lock_guard lock(memory_mutex_);
  auto it = memory_.find(id);
  if (it == memory_.end() || it->second.bundle->level < level) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second.lru);
  return it->second.bundle;
}

BundlePtr BundleCache::lookup_disk(const std::string& id, BundleLevel level) const {
  if (!options_.directory) return nullptr;
  std::ifstream in(entry_path(*options_.directory, id), std::ios::binary);
  if (!in) return nullptr;
  std::string line;
  if (!std::getline(in, line)) return nullptr;
  try {
    auto bundle = bundle_from_json(json::parse(line));
    if (bundle.meta.id != id || bundle.level < level) return nullptr;
    return std::make_shared<const PaperBundle>(std::move(bundle));
  } catch (const std::exception&) {
    // Unreadable entries are rebuilt on the miss path.
    return nullptr;
  }
}

void BundleCache::remember(const std::string& id, BundlePtr bundle) {
  std::lock_guard lock(memory_mutex_);
  auto it = memory_.find(id);
  if (it != memory_.end()) {
    if (it->second.bundle->level < bundle->level) it->second.bundle = std::move(bundle);
    lru_.splice(lru_.begin(), lru_, it->second.lru);
    return;
  }
  lru_.push_front(id);
  memory_.emplace(id, Slot{std::move(bundle), lru_.begin()});
  if (options_.capacity) {
    while (memory_.size() > *options_.capacity) {
      memory_.erase(lru_.back());
      lru_.pop_back();
    }
  }
}

BundlePtr BundleCache::fetch_one(const std::string& id, BundleLevel level, FetchLedger& ledger) {
  if (auto hit = lookup_memory(id, level)) {
    ++ledger.hits;
    return hit;
  }
  if (auto hit = lookup_disk(id, level)) {
    ++ledger.hits;
    remember(id, hit);
    return hit;
  }
  auto index = require_paper(store_.corpus(), id);

  std::lock_guard writer(writer_mutex_);
  // Another writer may have filled the entry while we waited.
  if (auto hit = lookup_memory(id, level)) {
    ++ledger.hits;
    return hit;
  }
  if (auto hit = lookup_disk(id, level)) {
    ++ledger.hits;
    remember(id, hit);
    return hit;
  }
  ++ledger.misses;
  auto bundle = std::make_shared<const PaperBundle>(store_.materialize(index, level));
  if (options_.directory) {
    auto path = entry_path(*options_.directory, id);
    fs::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
      out << bundle_to_json(*bundle).dump() << '\n';
      if (!out) throw std::runtime_error("cache write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
  }
  remember(id, bundle);
  ++writes_;
  return bundle;
}

BundlePtr BundleCache::fetch(std::string_view paper_id, BundleLevel level, FetchLedger& ledger) {
  std::string id(paper_id);
  require_paper(store_.corpus(), id);
  ++ledger.fetches;
  return fetch_one(id, level, ledger);
}

std::vector<BundlePtr> BundleCache::fetch_batch(std::span<const std::string> paper_ids,
                                                BundleLevel level, FetchLedger& ledger) {
  for (const auto& id : paper_ids) require_paper(store_.corpus(), id);
  ++ledger.fetches;
  std::vector<BundlePtr> out;
  out.reserve(paper_ids.size());
  for (const auto& id : paper_ids) out.push_back(fetch_one(id, level, ledger));
  return out;
}

WarmReport BundleCache::warm(const EntitySelection& selection) {
  const auto papers = store_.resolve(selection);
  const auto before = writes_.load();
  FetchLedger ledger;
  WarmReport report;

  std::set<std::string> ego_ids;
  for (auto p : papers) ego_ids.insert(store_.corpus().paper(p).id);
  std::set<std::string> linked;
  for (auto p : papers) {
    auto bundle = fetch(store_.corpus().paper(p).id, BundleLevel::complete, ledger);
    for (const auto& r : bundle->references)
      if (!ego_ids.count(r)) linked.insert(r);
    for (const auto& c : bundle->citers)
      if (!ego_ids.count(c)) linked.insert(c);
  }
  std::vector<std::string> ids(linked.begin(), linked.end());
  fetch_batch(ids, BundleLevel::partial, ledger);

  report.complete = papers.size();
  report.partial = ids.size();
  report.written = writes_.load() - before;
  return report;
}

std::optional<BundleLevel> BundleCache::cached_level(std::string_view paper_id) const {
  std::string id(paper_id);
  std::optional<BundleLevel> level;
  {
    std::lock_guard lock(memory_mutex_);
    if (auto it = memory_.find(id); it != memory_.end()) level = it->second.bundle->level;
  }
  if (auto disk = lookup_disk(id, BundleLevel::partial)) {
    if (!level || *level < disk->level) level = disk->level;
  }
  return level;
}

std::size_t BundleCache::memory_entries() const {
  std::lock_guard lock(memory_mutex_);
  return memory_.size();
}

}  // namespace influence
