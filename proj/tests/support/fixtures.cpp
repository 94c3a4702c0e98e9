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

#include "fixtures.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>
#include <sys/wait.h>
#include <unistd.h>

#include "influence/json_io.hpp"

namespace influence::testing {

Corpus m1_corpus() {
  std::vector<PaperRecord> papers = {
      {"P1", "Foundations of Graph Indexing", 2000, "V1",
       {{"A1", "I1"}, {"A2", "I2"}}, {{"T1", 1}}},
      {"P2", "Scalable Citation Analysis", 2001, "V2", {{"A3", "I2"}}, {{"T1", 1}, {"T2", 1}}},
      {"P3", "Influence Across Venues", 2005, "V1", {{"A1", "I1"}, {"A3", std::nullopt}},
       {{"T2", 1}}},
  };
  std::vector<std::pair<std::string, std::string>> citations = {
      {"P2", "P1"}, {"P3", "P1"}, {"P3", "P2"}};
  std::vector<EntityRecord> entities = {
      {"A1", EntityKind::author, "Ada Lovelace", std::nullopt, false},
      {"A2", EntityKind::author, "Alan Turing", std::nullopt, false},
      {"A3", EntityKind::author, "John L. Hennessy", std::nullopt, false},
      {"V1", EntityKind::venue, "Journal of Graph Systems", "journal", false},
      {"V2", EntityKind::venue, "Conference on Data Analysis", "conference", false},
      {"I1", EntityKind::institution, "University of Cambridge", std::nullopt, false},
      {"I2", EntityKind::institution, "Stanford University", std::nullopt, false},
      {"T1", EntityKind::topic, "Graph Theory", "level 1", false},
      {"T2", EntityKind::topic, "Bibliometrics", "level 1", false},
  };
  return Corpus::build(std::move(papers), citations, std::move(entities));
}

std::filesystem::path data_dir() { return INFLUENCE_TEST_DATA; }
std::filesystem::path m1_dir() { return data_dir() / "m1"; }
std::filesystem::path cli_path() { return INFLUENCE_CLI_PATH; }

TempDir::TempDir(const std::string& tag) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("influence-" + tag + "-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++) + "-" + std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

namespace {

std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {"a", "Z", "0", " ", "\"", "\\", "/", "+",
                                                  "=", "&", "?", "\xc3\xa9", "\xe2\x82\xac", "\n", "%"};
  std::string out;
  const auto n = rng() % 12;
  for (std::size_t i = 0; i < n; ++i) out += pieces[rng() % pieces.size()];
  return out;
}

YearRange random_range(std::mt19937_64& rng) {
  const int a = 1900 + static_cast<int>(rng() % 150);
  const int b = a + static_cast<int>(rng() % 40);
  return {a, b};
}

}  // namespace

FlowerConfig random_flower_config(std::mt19937_64& rng) {
  static constexpr EntityKind kinds[] = {EntityKind::author, EntityKind::venue,
                                         EntityKind::institution, EntityKind::topic,
                                         EntityKind::paper};
  static constexpr SortMode modes[] = {SortMode::ratio, SortMode::influenced_by,
                                       SortMode::influencing, SortMode::total};
  FlowerConfig c;
  const auto members = 1 + rng() % 4;
  for (std::size_t i = 0; i < members; ++i)
    c.selection.members.push_back({"E" + random_text(rng), kinds[rng() % 5]});
  c.selection.display_name = random_text(rng);
  c.alter_kind = kinds[rng() % 4];
  if (rng() % 2) c.pub_range = random_range(rng);
  if (rng() % 2) c.cite_range = random_range(rng);
  c.petal_count = 1 + rng() % 50;
  c.sort_mode = modes[rng() % 4];
  c.include_self_citations = rng() % 2;
  c.exclude_co_contributors = rng() % 2;
  c.schemes = {rng() % 2 == 0, rng() % 2 == 0, rng() % 2 == 0};
  c.topic_level = static_cast<int>(rng() % 6);
  if (rng() % 2) c.contrast = ContrastRanges{random_range(rng), random_range(rng)};
  return c;
}

FlowerConfig random_valid_config(std::mt19937_64& rng, const Corpus& corpus) {
  static constexpr EntityKind alters[] = {EntityKind::author, EntityKind::venue,
                                          EntityKind::institution, EntityKind::topic};
  static constexpr SortMode modes[] = {SortMode::ratio, SortMode::influenced_by,
                                       SortMode::influencing, SortMode::total};
  std::vector<EntityRef> candidates;
  for (const auto& [key, rec] : corpus.entities()) candidates.push_back({key.second, key.first});
  FlowerConfig c;
  const auto members = 1 + rng() % 2;
  for (std::size_t i = 0; i < members && !candidates.empty(); ++i)
    c.selection.members.push_back(candidates[rng() % candidates.size()]);
  c.alter_kind = alters[rng() % 4];
  c.petal_count = 1 + rng() % 50;
  c.sort_mode = modes[rng() % 4];
  c.include_self_citations = rng() % 2;
  c.exclude_co_contributors = rng() % 2;
  c.schemes = {rng() % 2 == 0, rng() % 2 == 0, rng() % 2 == 0};
  c.topic_level = static_cast<int>(rng() % 3);
  if (rng() % 2) {
    const int a = 1988 + static_cast<int>(rng() % 20);
    c.pub_range = YearRange{a, a + static_cast<int>(rng() % 20)};
    c.cite_range = YearRange{a, a + 5 + static_cast<int>(rng() % 20)};
    if (rng() % 2) {
      c.contrast = ContrastRanges{{c.pub_range->first, c.pub_range->first + (c.pub_range->last - c.pub_range->first) / 2},
                                  {c.cite_range->first + 1, c.cite_range->last}};
    }
  }
  return c;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream papers(dir / "papers.jsonl", std::ios::trunc);
  for (const auto& p : corpus.papers()) papers << json(p).dump() << "\n";
  std::ofstream citations(dir / "citations.tsv", std::ios::trunc);
  for (const auto& e : corpus.edges())
    citations << corpus.paper(e.citing).id << "\t" << corpus.paper(e.cited).id << "\n";
  std::ofstream entities(dir / "entities.jsonl", std::ios::trunc);
  for (const auto& [key, rec] : corpus.entities()) {
    if (rec.implicit) continue;
    json row{{"id", rec.id}, {"kind", std::string(to_string(rec.kind))}, {"name", rec.name}};
    if (rec.extra) row["extra"] = *rec.extra;
    entities << row.dump() << "\n";
  }
}

int run_command(const std::string& command, std::string* output) {
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return -1;
  std::string captured;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, n);
  const int status = ::pclose(pipe);
  if (output) *output = std::move(captured);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace influence::testing
