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

#include <span>
#include <string>
#include <vector>

#include "influence/influence.hpp"
#include "influence/json_io.hpp"

namespace influence {

inline constexpr std::size_t kDefaultPetals = 25;
inline constexpr std::size_t kMaxPetals = 50;
inline constexpr std::size_t kOverviewRows = 50;

/// Display-scale parameters, in display units.
struct DisplayScale {
  double min_radius = 4.0;
  double max_radius = 14.0;
  double min_width = 1.0;
  double max_width = 10.0;

  bool operator==(const DisplayScale&) const = default;
};

/// Arc covered by the petals, in degrees: 18 per petal below 10 petals,
/// 180 from 10 to 25, then linear up to 270 at 50. `petals` is clamped to [1, 50].
double angular_span(std::size_t petals);

/// Position on the blue (0) to red (1) axis: (1 - ratio) / 2.
double node_color(double in_score, double out_score);

/// sRGB hex of a color_t on the #053061 -> #67001f diverging ramp.
std::string color_hex(double color_t);

/// Log-normalised edge width over the displayed nonzero scores; 0 for a zero score.
double edge_width(double score, std::span<const double> displayed, const DisplayScale& scale = {});

struct Petal {
  std::string alter_id;
  std::string label;
  bool greyed = false;
  double angle = 0.0;  // degrees; 0 = left, 90 = up, increasing clockwise
  double node_radius = 0.0;
  double color_t = 0.5;
  double in_width = 0.0;
  double out_width = 0.0;
  double in_score = 0.0;
  double out_score = 0.0;

  bool operator==(const Petal&) const = default;
};

struct FlowerLayout {
  std::string ego_label;
  double ego_radius = 0.0;
  std::string ego_color = "#ffffff";
  double span = 0.0;
  DisplayScale scale;
  std::vector<Petal> petals;

  bool operator==(const FlowerLayout&) const = default;
};

/// Lays out already selected and sorted alters.
FlowerLayout layout_flower(std::span<const AlterScore> sorted, std::string ego_label,
                           const DisplayScale& scale = {});

struct OverlayPetal {
  std::string alter_id;
  bool present = false;
  double node_radius = 0.0;
  double in_width = 0.0;
  double out_width = 0.0;
  double color_t = 0.5;
  double in_score = 0.0;
  double out_score = 0.0;

  bool operator==(const OverlayPetal&) const = default;
};

struct ContrastLayout {
  FlowerLayout anchor;
  std::vector<OverlayPetal> overlay;  // same order as anchor.petals

  bool operator==(const ContrastLayout&) const = default;
};

/// Overlays a sub-period profile on the anchor flower. Sizes and widths scale
/// by contrast / anchor score; order and positions come from the anchor.
ContrastLayout compose_contrast(const FlowerLayout& anchor, const InfluenceProfile& contrast);

struct OverviewRow {
  std::string alter_id;
  std::string label;
  std::uint64_t raw_ref_count = 0;
  std::uint64_t raw_cite_count = 0;
  bool in_flower = false;

  bool operator==(const OverviewRow&) const = default;
};

struct OverviewBars {
  std::vector<OverviewRow> rows;
  std::size_t total_alters = 0;

  bool operator==(const OverviewBars&) const = default;
};

OverviewBars overview_bars(const InfluenceProfile& profile, const FlowerLayout& flower);

json layout_to_json(const FlowerLayout& layout);
json layout_to_json(const ContrastLayout& layout);
json bars_to_json(const OverviewBars& bars);

}  // namespace influence
