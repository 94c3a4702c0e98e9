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

#include <optional>
#include <string>
#include <string_view>

#include "influence/flower_geometry.hpp"
#include "influence/influence.hpp"
#include "influence/json_io.hpp"

namespace influence {

struct ContrastRanges {
  YearRange pub_range;
  YearRange cite_range;

  bool operator==(const ContrastRanges&) const = default;
};

/// Everything a user can set for one flower. Omitted ranges default to the
/// ego's full span when the flower is generated.
struct FlowerConfig {
  EntitySelection selection;
  EntityKind alter_kind = EntityKind::author;
  std::optional<YearRange> pub_range;
  std::optional<YearRange> cite_range;
  std::size_t petal_count = kDefaultPetals;
  SortMode sort_mode = SortMode::ratio;
  bool include_self_citations = true;
  bool exclude_co_contributors = false;
  Schemes schemes;
  int topic_level = 1;
  std::optional<ContrastRanges> contrast;

  bool operator==(const FlowerConfig&) const = default;
};

/// Checks everything that does not need the corpus. Throws InvalidArgument.
void validate(const FlowerConfig& config);

/// Canonical record; keys are emitted in a fixed order.
json config_to_json(const FlowerConfig& config);

/// Strict decoding: unknown keys and wrong types are rejected; missing keys
/// take their defaults. Throws InvalidArgument.
FlowerConfig config_from_json(const json& in);

/// URL-safe token (base64url of the canonical record, no padding).
std::string encode_config(const FlowerConfig& config);
FlowerConfig decode_config(std::string_view token);

std::string base64url_encode(std::string_view bytes);
/// Throws InvalidArgument on characters outside the alphabet or bad length.
std::string base64url_decode(std::string_view text);

}  // namespace influence
