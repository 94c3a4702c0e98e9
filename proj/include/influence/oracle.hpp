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

// Dense reference evaluation of the influence scores. Builds the normalized
// association matrices, the filtered citation matrix and multiplies them out.
// Shares no code with the indexed path beyond the corpus record types, so it
// can serve as an oracle for it. Quadratic in the paper count: small corpora only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "influence/corpus.hpp"
#include "influence/influence.hpp"

namespace influence {

InfluenceProfile brute_force_profile(const EntitySelection& ego, const InfluenceConfig& config,
                                     const Corpus& corpus);

/// Empty when both profiles list the same alters with equal raw counts and
/// flags and every score within `tolerance`; otherwise a description of the
/// first difference.
std::optional<std::string> compare_profiles(const InfluenceProfile& actual,
                                            const InfluenceProfile& expected,
                                            double tolerance = 1e-9);

struct OracleCaseReport {
  std::size_t comparisons = 0;
  std::size_t skipped = 0;  // ego shapes with no candidate entity in the corpus
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// One random corpus checked for every ego shape, alter kind and scheme
/// combination. Deterministic in (seed, case_index).
OracleCaseReport run_oracle_case(std::uint64_t seed, std::size_t case_index,
                                 double tolerance = 1e-9);

}  // namespace influence
