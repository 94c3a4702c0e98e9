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

// JSON encodings of the on-disk and wire records.

#include <json.hpp>

#include "influence/corpus.hpp"

namespace influence {

using json = nlohmann::json;

void to_json(json& out, const EntityRef& ref);
void from_json(const json& in, EntityRef& ref);

void to_json(json& out, const EntitySelection& selection);
void from_json(const json& in, EntitySelection& selection);

void to_json(json& out, const YearRange& range);
void from_json(const json& in, YearRange& range);

/// Paper record in the `papers` file schema.
void to_json(json& out, const PaperRecord& paper);

/// Strict decoding; throws InvalidArgument on schema violations.
PaperRecord paper_from_json(const json& in, std::size_t* venue_conflicts = nullptr);

}  // namespace influence
