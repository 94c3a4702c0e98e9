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

#include "influence/flower_config.hpp"

#include <array>
#include <set>

namespace influence {

namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

const std::set<std::string> kConfigKeys = {
    "selection",  "alter_kind", "pub_range",   "cite_range",
    "petal_count", "sort_mode", "include_self_citations", "exclude_co_contributors",
    "schemes",    "topic_level", "contrast"};

void reject_unknown(const json& in, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, value] : in.items())
    if (!allowed.count(key)) throw InvalidArgument(std::string("unknown ") + what + " field " + key);
}

bool get_bool(const json& in, const char* key, bool fallback) {
  auto it = in.find(key);
  if (it == in.end()) return fallback;
  if (!it->is_boolean()) throw InvalidArgument(std::string(key) + " must be a boolean");
  return it->get<bool>();
}

std::optional<YearRange> get_range(const json& in, const char* key) {
  auto it = in.find(key);
  if (it == in.end() || it->is_null()) return std::nullopt;
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
      !(*it)[1].is_number_integer())
    throw InvalidArgument(std::string(key) + " must be [first_year, last_year]");
  return YearRange{(*it)[0].get<int>(), (*it)[1].get<int>()};
}

json range_json(const std::optional<YearRange>& range) {
  return range ? json::array({range->first, range->last}) : json(nullptr);
}

EntityKind get_kind(const json& value, const char* what) {
  if (!value.is_string()) throw InvalidArgument(std::string(what) + " must be a string");
  auto kind = parse_kind(value.get<std::string>());
  if (!kind) throw InvalidArgument(std::string("unknown ") + what + " " + value.get<std::string>());
  return *kind;
}

}  // namespace

void validate(const FlowerConfig& config) {
  if (config.selection.members.empty()) throw InvalidArgument("selection has no members");
  for (const auto& m : config.selection.members)
    if (m.id.empty()) throw InvalidArgument("selection member with empty id");
  if (!is_alter_kind(config.alter_kind))
    throw InvalidArgument("alter kind must be author, venue, institution or topic");
  if (config.petal_count < 1 || config.petal_count > kMaxPetals)
    throw InvalidArgument("petal count must be within 1-50");
  if (config.pub_range && config.pub_range->empty())
    throw InvalidArgument("publication range is empty");
  if (config.cite_range && config.cite_range->empty())
    throw InvalidArgument("citation range is empty");
  if (config.topic_level < 0 || config.topic_level > 5)
    throw InvalidArgument("topic level must be within 0-5");
  if (config.contrast) {
    if (config.contrast->pub_range.empty() || config.contrast->cite_range.empty())
      throw InvalidArgument("contrast range is empty");
    if (config.pub_range && !config.pub_range->covers(config.contrast->pub_range))
      throw InvalidArgument("contrast publication range must lie inside the anchor range");
    if (config.cite_range && !config.cite_range->covers(config.contrast->cite_range))
      throw InvalidArgument("contrast citation range must lie inside the anchor range");
  }
}

json config_to_json(const FlowerConfig& config) {
  json members = json::array();
  for (const auto& m : config.selection.members)
    members.push_back({{"id", m.id}, {"kind", std::string(to_string(m.kind))}});
  json out = {
      {"selection", {{"members", std::move(members)}, {"display_name", config.selection.display_name}}},
      {"alter_kind", std::string(to_string(config.alter_kind))},
      {"pub_range", range_json(config.pub_range)},
      {"cite_range", range_json(config.cite_range)},
      {"petal_count", config.petal_count},
      {"sort_mode", std::string(to_string(config.sort_mode))},
      {"include_self_citations", config.include_self_citations},
      {"exclude_co_contributors", config.exclude_co_contributors},
      {"schemes", {{"s1", config.schemes.s1}, {"s2", config.schemes.s2}, {"s3", config.schemes.s3}}},
      {"topic_level", config.topic_level},
      {"contrast", config.contrast ? json{{"pub_range", range_json(config.contrast->pub_range)},
                                          {"cite_range", range_json(config.contrast->cite_range)}}
                                   : json(nullptr)}};
  return out;
}

namespace {

FlowerConfig parse_config(const json& in) {
  if (!in.is_object()) throw InvalidArgument("flower config must be an object");
  reject_unknown(in, kConfigKeys, "config");
  FlowerConfig config;

  const auto& selection = in.at("selection");
  if (!selection.is_object()) throw InvalidArgument("selection must be an object");
  reject_unknown(selection, {"members", "display_name"}, "selection");
  const auto& members = selection.at("members");
  if (!members.is_array()) throw InvalidArgument("selection members must be an array");
  for (const auto& m : members) {
    if (!m.is_object()) throw InvalidArgument("selection member must be an object");
    reject_unknown(m, {"id", "kind"}, "member");
    if (!m.at("id").is_string()) throw InvalidArgument("member id must be a string");
    config.selection.members.push_back({m.at("id").get<std::string>(), get_kind(m.at("kind"), "member kind")});
  }
  if (auto it = selection.find("display_name"); it != selection.end()) {
    if (!it->is_string()) throw InvalidArgument("display_name must be a string");
    config.selection.display_name = it->get<std::string>();
  }

  if (auto it = in.find("alter_kind"); it != in.end())
    config.alter_kind = get_kind(*it, "alter kind");
  config.pub_range = get_range(in, "pub_range");
  config.cite_range = get_range(in, "cite_range");
  if (auto it = in.find("petal_count"); it != in.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0)
      throw InvalidArgument("petal_count must be a non-negative integer");
    config.petal_count = it->get<std::size_t>();
  }
  if (auto it = in.find("sort_mode"); it != in.end()) {
    if (!it->is_string()) throw InvalidArgument("sort_mode must be a string");
    auto mode = parse_sort_mode(it->get<std::string>());
    if (!mode) throw InvalidArgument("unknown sort mode " + it->get<std::string>());
    config.sort_mode = *mode;
  }
  config.include_self_citations = get_bool(in, "include_self_citations", true);
  config.exclude_co_contributors = get_bool(in, "exclude_co_contributors", false);
  if (auto it = in.find("schemes"); it != in.end()) {
    if (!it->is_object()) throw InvalidArgument("schemes must be an object");
    reject_unknown(*it, {"s1", "s2", "s3"}, "schemes");
    config.schemes.s1 = get_bool(*it, "s1", true);
    config.schemes.s2 = get_bool(*it, "s2", false);
    config.schemes.s3 = get_bool(*it, "s3", false);
  }
  if (auto it = in.find("topic_level"); it != in.end()) {
    if (!it->is_number_integer()) throw InvalidArgument("topic_level must be an integer");
    config.topic_level = it->get<int>();
  }
  if (auto it = in.find("contrast"); it != in.end() && !it->is_null()) {
    if (!it->is_object()) throw InvalidArgument("contrast must be an object");
    reject_unknown(*it, {"pub_range", "cite_range"}, "contrast");
    auto pub = get_range(*it, "pub_range");
    auto cite = get_range(*it, "cite_range");
    if (!pub || !cite) throw InvalidArgument("contrast needs pub_range and cite_range");
    config.contrast = ContrastRanges{*pub, *cite};
  }
  return config;
}

}  // namespace

FlowerConfig config_from_json(const json& in) {
  try {
    return parse_config(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed flower config: ") + e.what());
  }
}

std::string encode_config(const FlowerConfig& config) {
  return base64url_encode(config_to_json(config).dump());
}

FlowerConfig decode_config(std::string_view token) {
  if (token.empty()) throw InvalidArgument("config token is empty");
  const auto text = base64url_decode(token);
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception&) {
    throw InvalidArgument("config token does not hold a config record");
  }
  return config_from_json(in);
}

std::string base64url_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                       static_cast<unsigned char>(bytes[i + 2]);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  const auto rest = bytes.size() - i;
  if (rest == 1) {
    const unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
  } else if (rest == 2) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
  }
  return out;
}

std::string base64url_decode(std::string_view text) {
  std::array<int, 256> lookup;
  lookup.fill(-1);
  for (std::size_t i = 0; i < kAlphabet.size(); ++i)
    lookup[static_cast<unsigned char>(kAlphabet[i])] = static_cast<int>(i);
  if (text.size() % 4 == 1) throw InvalidArgument("config token has an invalid length");

  std::string out;
  unsigned buffer = 0;
  int bits = 0;
  for (char c : text) {
    const int v = lookup[static_cast<unsigned char>(c)];
    if (v < 0) throw InvalidArgument("config token contains an invalid character");
    buffer = (buffer << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((buffer >> bits) & 0xff);
    }
  }
  // Leftover bits must be zero in a canonical encoding.
  if (bits > 0 && (buffer & ((1u << bits) - 1)) != 0)
    throw InvalidArgument("config token is not canonical");
  return out;
}

}  // namespace influence
