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

#include "influence/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "influence/json_io.hpp"

namespace influence {

namespace {

constexpr int kMinYear = 1000;
constexpr int kMaxYear = 3000;

std::string trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return std::string(line);
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open " + path.string());
  return in;
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::author: return "author";
    case EntityKind::venue: return "venue";
    case EntityKind::institution: return "institution";
    case EntityKind::topic: return "topic";
    case EntityKind::paper: return "paper";
  }
  return "unknown";
}

std::optional<EntityKind> parse_kind(std::string_view text) {
  for (auto kind : {EntityKind::author, EntityKind::venue, EntityKind::institution,
                    EntityKind::topic, EntityKind::paper}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

ParseError::ParseError(const std::string& file, std::size_t line, const std::string& what)
    : UserError(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t hash = seed;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::vector<std::string> entities_on(const PaperRecord& paper, EntityKind kind,
                                     std::optional<int> topic_level) {
  std::vector<std::string> out;
  auto push = [&out](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  switch (kind) {
    case EntityKind::author:
      for (const auto& slot : paper.authors) push(slot.author_id);
      break;
    case EntityKind::institution:
      for (const auto& slot : paper.authors)
        if (slot.institution_id) push(*slot.institution_id);
      break;
    case EntityKind::venue:
      if (paper.venue_id) push(*paper.venue_id);
      break;
    case EntityKind::topic:
      for (const auto& tag : paper.topics)
        if (!topic_level || tag.level == *topic_level) push(tag.topic_id);
      break;
    case EntityKind::paper:
      push(paper.id);
      break;
  }
  return out;
}

bool paper_has_entity(const PaperRecord& paper, EntityKind kind, std::string_view entity_id) {
  switch (kind) {
    case EntityKind::author:
      return std::any_of(paper.authors.begin(), paper.authors.end(),
                         [&](const AuthorSlot& s) { return s.author_id == entity_id; });
    case EntityKind::institution:
      return std::any_of(paper.authors.begin(), paper.authors.end(), [&](const AuthorSlot& s) {
        return s.institution_id && *s.institution_id == entity_id;
      });
    case EntityKind::venue:
      return paper.venue_id && *paper.venue_id == entity_id;
    case EntityKind::topic:
      return std::any_of(paper.topics.begin(), paper.topics.end(),
                         [&](const TopicTag& t) { return t.topic_id == entity_id; });
    case EntityKind::paper:
      return paper.id == entity_id;
  }
  return false;
}

Corpus Corpus::build(std::vector<PaperRecord> papers,
                     std::span<const std::pair<std::string, std::string>> citations,
                     std::vector<EntityRecord> entities, LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  Corpus corpus;

  for (auto& entity : entities) {
    if (entity.name.empty()) throw InvalidArgument("entity " + entity.id + " has an empty name");
    auto key = std::make_pair(entity.kind, entity.id);
    if (corpus.entities_.count(key))
      throw InvalidArgument("duplicate entity id " + entity.id + " (" +
                            std::string(to_string(entity.kind)) + ")");
    corpus.entities_.emplace(std::move(key), std::move(entity));
  }

  corpus.papers_.reserve(papers.size());
  for (auto& paper : papers) {
    if (paper.year < kMinYear || paper.year > kMaxYear)
      throw InvalidArgument("paper " + paper.id + " has year " + std::to_string(paper.year) +
                            " outside [1000, 3000]");
    if (corpus.paper_by_id_.count(paper.id))
      throw InvalidArgument("duplicate paper id " + paper.id);

    std::vector<TopicTag> kept;
    std::set<std::string> seen_topics;
    for (auto& tag : paper.topics) {
      if (!corpus.entities_.count({EntityKind::topic, tag.topic_id})) {
        ++rep.dropped_topics;
        rep.warnings.push_back("paper " + paper.id + ": unknown topic " + tag.topic_id +
                               " dropped");
        continue;
      }
      if (seen_topics.insert(tag.topic_id).second) kept.push_back(std::move(tag));
    }
    paper.topics = std::move(kept);

    auto index = static_cast<PaperIndex>(corpus.papers_.size());
    corpus.paper_by_id_.emplace(paper.id, index);
    corpus.papers_.push_back(std::move(paper));
  }

  // Ids referenced from papers but not described in the entities file.
  auto ensure = [&](EntityKind kind, const std::string& id, const std::string& name) {
    auto key = std::make_pair(kind, id);
    if (corpus.entities_.count(key)) return;
    EntityRecord rec{id, kind, name.empty() ? id : name, std::nullopt, true};
    corpus.entities_.emplace(std::move(key), std::move(rec));
    if (kind != EntityKind::paper) ++rep.implicit_entities;
  };
  for (const auto& paper : corpus.papers_) {
    ensure(EntityKind::paper, paper.id, paper.title);
    if (paper.venue_id) ensure(EntityKind::venue, *paper.venue_id, *paper.venue_id);
    for (const auto& slot : paper.authors) {
      ensure(EntityKind::author, slot.author_id, slot.author_id);
      if (slot.institution_id)
        ensure(EntityKind::institution, *slot.institution_id, *slot.institution_id);
    }
  }

  std::set<CitationEdge> edges;
  for (const auto& [citing, cited] : citations) {
    auto from = corpus.find_paper(citing);
    auto to = corpus.find_paper(cited);
    if (!from || !to) {
      ++rep.dangling;
      continue;
    }
    if (*from == *to) {
      ++rep.self_loops;
      continue;
    }
    if (!edges.insert({*from, *to}).second) ++rep.duplicate_edges;
  }
  corpus.edges_.assign(edges.begin(), edges.end());

  std::uint64_t hash = fnv1a64("influence-corpus-v1");
  for (const auto& paper : corpus.papers_) {
    hash = fnv1a64(json(paper).dump(), hash);
    hash = fnv1a64("\n", hash);
  }
  for (const auto& edge : corpus.edges_) {
    hash = fnv1a64(corpus.papers_[edge.citing].id + "\t" + corpus.papers_[edge.cited].id + "\n",
                   hash);
  }
  corpus.fingerprint_ = hash;

  rep.papers = corpus.papers_.size();
  rep.edges = corpus.edges_.size();
  return corpus;
}

std::optional<PaperIndex> Corpus::find_paper(std::string_view id) const {
  auto it = paper_by_id_.find(std::string(id));
  if (it == paper_by_id_.end()) return std::nullopt;
  return it->second;
}

const EntityRecord* Corpus::find_entity(EntityKind kind, std::string_view id) const {
  auto it = entities_.find({kind, std::string(id)});
  return it == entities_.end() ? nullptr : &it->second;
}

bool Corpus::operator==(const Corpus& other) const {
  return papers_ == other.papers_ && edges_ == other.edges_ && entities_ == other.entities_ &&
         fingerprint_ == other.fingerprint_;
}

PaperRecord parse_paper_line(std::string_view line, const std::string& file, std::size_t line_no,
                             std::size_t* venue_conflicts) {
  try {
    return paper_from_json(json::parse(line), venue_conflicts);
  } catch (const json::exception& e) {
    throw ParseError(file, line_no, std::string("malformed paper record: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(file, line_no, e.what());
  }
}

EntityRecord parse_entity_line(std::string_view line, const std::string& file,
                               std::size_t line_no) {
  try {
    auto in = json::parse(line);
    if (!in.is_object()) throw InvalidArgument("entity record must be an object");
    EntityRecord rec;
    rec.id = in.at("id").get<std::string>();
    auto kind = parse_kind(in.at("kind").get<std::string>());
    if (!kind) throw InvalidArgument("unknown entity kind " + in.at("kind").get<std::string>());
    rec.kind = *kind;
    rec.name = in.at("name").get<std::string>();
    if (rec.id.empty()) throw InvalidArgument("entity id is empty");
    if (rec.name.empty()) throw InvalidArgument("entity " + rec.id + " has an empty name");
    if (auto it = in.find("extra"); it != in.end() && !it->is_null())
      rec.extra = it->get<std::string>();
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(file, line_no, std::string("malformed entity record: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(file, line_no, e.what());
  }
}

Corpus load_corpus(const std::filesystem::path& paper_file,
                   const std::filesystem::path& citation_file,
                   const std::filesystem::path& entity_file, LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  std::string line;

  std::vector<EntityRecord> entities;
  {
    auto in = open_input(entity_file);
    std::set<std::pair<EntityKind, std::string>> seen;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      if (blank(line)) continue;
      auto rec = parse_entity_line(trim_line(line), entity_file.string(), no);
      if (!seen.insert({rec.kind, rec.id}).second)
        throw ParseError(entity_file.string(), no, "duplicate entity id " + rec.id);
      entities.push_back(std::move(rec));
    }
  }

  std::vector<PaperRecord> papers;
  {
    auto in = open_input(paper_file);
    std::set<std::string> seen;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      if (blank(line)) continue;
      std::size_t conflicts = 0;
      auto rec = parse_paper_line(trim_line(line), paper_file.string(), no, &conflicts);
      if (conflicts) {
        rep.venue_conflicts += conflicts;
        rep.warnings.push_back("paper " + rec.id + ": multiple venues, kept " + *rec.venue_id);
      }
      if (!seen.insert(rec.id).second)
        throw ParseError(paper_file.string(), no, "duplicate paper id " + rec.id);
      papers.push_back(std::move(rec));
    }
  }

  std::vector<std::pair<std::string, std::string>> citations;
  {
    auto in = open_input(citation_file);
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      auto row = trim_line(line);
      if (blank(row)) continue;
      auto tab = row.find('\t');
      if (tab == std::string::npos || row.find('\t', tab + 1) != std::string::npos || tab == 0 ||
          tab + 1 == row.size())
        throw ParseError(citation_file.string(), no,
                         "expected citing_id<TAB>cited_id, got '" + row + "'");
      citations.emplace_back(row.substr(0, tab), row.substr(tab + 1));
    }
  }

  return Corpus::build(std::move(papers), citations, std::move(entities), &rep);
}

PaperSet resolve_selection(const EntitySelection& selection, const Corpus& corpus) {
  if (selection.members.empty()) throw InvalidArgument("selection has no members");
  for (const auto& member : selection.members) {
    if (!corpus.find_entity(member.kind, member.id))
      throw NotFound("unknown " + std::string(to_string(member.kind)) + " " + member.id);
  }
  PaperSet out;
  for (PaperIndex i = 0; i < corpus.paper_count(); ++i) {
    const auto& paper = corpus.paper(i);
    for (const auto& member : selection.members) {
      if (paper_has_entity(paper, member.kind, member.id)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace influence
