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

// Seeded synthetic corpora for property tests and the oracle check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/influence.hpp"

namespace influence {

struct RandomCorpusLimits {
  std::size_t max_papers = 50;
  std::size_t max_entities_per_kind = 20;
  std::size_t max_edges = 200;
  int first_year = 1990;
  int last_year = 2020;
};

Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusLimits& limits = {});

/// Ego shapes exercised by the property suites. `project` mixes papers and an author.
enum class EgoShape { author, venue, institution, topic, paper, project };

inline constexpr EgoShape kAllEgoShapes[] = {EgoShape::author, EgoShape::venue,
                                             EgoShape::institution, EgoShape::topic,
                                             EgoShape::paper, EgoShape::project};

std::string_view to_string(EgoShape shape);

/// A selection of the given shape whose members all occur on some paper.
/// Empty members when the corpus has no entity of that kind.
EntitySelection random_selection(std::mt19937_64& rng, const Corpus& corpus, EgoShape shape);

/// Random year ranges and self-citation toggle; alter kind and schemes left to the caller.
InfluenceConfig random_config(std::mt19937_64& rng, const RandomCorpusLimits& limits = {});

}  // namespace influence
