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

#include "influence/json_io.hpp"

namespace influence {

namespace {

EntityKind kind_from(const json& value) {
  auto kind = parse_kind(value.get<std::string>());
  if (!kind) throw InvalidArgument("unknown entity kind " + value.get<std::string>());
  return *kind;
}

}  // namespace

void to_json(json& out, const EntityRef& ref) {
  out = json{{"id", ref.id}, {"kind", std::string(to_string(ref.kind))}};
}

void from_json(const json& in, EntityRef& ref) {
  ref.id = in.at("id").get<std::string>();
  ref.kind = kind_from(in.at("kind"));
}

void to_json(json& out, const EntitySelection& selection) {
  out = json{{"members", selection.members}, {"display_name", selection.display_name}};
}

void from_json(const json& in, EntitySelection& selection) {
  selection.members = in.at("members").get<std::vector<EntityRef>>();
  selection.display_name = in.value("display_name", std::string());
}

void to_json(json& out, const YearRange& range) { out = json::array({range.first, range.last}); }

void from_json(const json& in, YearRange& range) {
  if (!in.is_array() || in.size() != 2) throw InvalidArgument("year range must be [first, last]");
  range.first = in.at(0).get<int>();
  range.last = in.at(1).get<int>();
}

void to_json(json& out, const PaperRecord& paper) {
  json authors = json::array();
  for (const auto& slot : paper.authors) {
    json a{{"id", slot.author_id}};
    if (slot.institution_id) a["inst"] = *slot.institution_id;
    authors.push_back(std::move(a));
  }
  json topics = json::array();
  for (const auto& tag : paper.topics) topics.push_back({{"id", tag.topic_id}, {"level", tag.level}});
  out = json{{"id", paper.id},
             {"title", paper.title},
             {"year", paper.year},
             {"venue", paper.venue_id ? json(*paper.venue_id) : json(nullptr)},
             {"authors", std::move(authors)},
             {"topics", std::move(topics)}};
}

PaperRecord paper_from_json(const json& in, std::size_t* venue_conflicts) {
  if (!in.is_object()) throw InvalidArgument("paper record must be an object");
  PaperRecord paper;
  paper.id = in.at("id").get<std::string>();
  if (paper.id.empty()) throw InvalidArgument("paper id is empty");
  paper.title = in.value("title", std::string());
  auto year = in.find("year");
  if (year == in.end() || year->is_null())
    throw InvalidArgument("paper " + paper.id + " has no year");
  if (!year->is_number_integer()) throw InvalidArgument("paper " + paper.id + ": year must be an integer");
  paper.year = year->get<int>();
  if (paper.year < 1000 || paper.year > 3000)
    throw InvalidArgument("paper " + paper.id + ": year outside [1000, 3000]");

  if (auto venue = in.find("venue"); venue != in.end() && !venue->is_null()) {
    if (venue->is_array()) {
      // Dual journal/conference rows keep the first-listed venue.
      if (!venue->empty()) paper.venue_id = venue->at(0).get<std::string>();
      if (venue->size() > 1 && venue_conflicts) *venue_conflicts += 1;
    } else {
      paper.venue_id = venue->get<std::string>();
    }
    if (paper.venue_id && paper.venue_id->empty()) paper.venue_id.reset();
  }

  if (auto authors = in.find("authors"); authors != in.end() && !authors->is_null()) {
    for (const auto& a : *authors) {
      AuthorSlot slot;
      slot.author_id = a.at("id").get<std::string>();
      if (slot.author_id.empty()) throw InvalidArgument("paper " + paper.id + ": empty author id");
      if (auto inst = a.find("inst"); inst != a.end() && !inst->is_null())
        slot.institution_id = inst->get<std::string>();
      paper.authors.push_back(std::move(slot));
    }
  }
  if (auto topics = in.find("topics"); topics != in.end() && !topics->is_null()) {
    for (const auto& t : *topics) {
      TopicTag tag;
      tag.topic_id = t.at("id").get<std::string>();
      tag.level = t.value("level", 0);
      if (tag.level < 0 || tag.level > 5)
        throw InvalidArgument("paper " + paper.id + ": topic level outside 0-5");
      paper.topics.push_back(std::move(tag));
    }
  }
  return paper;
}

}  // namespace influence
