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

#include "influence/flower_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace influence {

namespace {

// Eleven-stop diverging scheme, red end first (d3 RdBu).
constexpr std::array<std::array<int, 3>, 11> kRdBu = {{{0x67, 0x00, 0x1f},
                                                       {0xb2, 0x18, 0x2b},
                                                       {0xd6, 0x60, 0x4d},
                                                       {0xf4, 0xa5, 0x82},
                                                       {0xfd, 0xdb, 0xc7},
                                                       {0xf7, 0xf7, 0xf7},
                                                       {0xd1, 0xe5, 0xf0},
                                                       {0x92, 0xc5, 0xde},
                                                       {0x43, 0x93, 0xc3},
                                                       {0x21, 0x66, 0xac},
                                                       {0x05, 0x30, 0x61}}};

// Uniform cubic B-spline segment.
double basis(double t1, double v0, double v1, double v2, double v3) {
  const double t2 = t1 * t1;
  const double t3 = t2 * t1;
  return ((1 - 3 * t1 + 3 * t2 - t3) * v0 + (4 - 6 * t2 + 3 * t3) * v1 +
          (1 + 3 * t1 + 3 * t2 - 3 * t3) * v2 + t3 * v3) /
         6;
}

// interpolateRgbBasis over kRdBu, evaluated per channel.
std::array<int, 3> rdbu(double t) {
  const int n = static_cast<int>(kRdBu.size()) - 1;
  int i = 0;
  if (t <= 0) {
    t = 0;
    i = 0;
  } else if (t >= 1) {
    t = 1;
    i = n - 1;
  } else {
    i = static_cast<int>(std::floor(t * n));
  }
  std::array<int, 3> rgb{};
  for (int c = 0; c < 3; ++c) {
    const double v1 = kRdBu[i][c];
    const double v2 = kRdBu[i + 1][c];
    const double v0 = i > 0 ? kRdBu[i - 1][c] : 2 * v1 - v2;
    const double v3 = i < n - 1 ? kRdBu[i + 2][c] : 2 * v2 - v1;
    const double value = basis((t - static_cast<double>(i) / n) * n, v0, v1, v2, v3);
    rgb[c] = static_cast<int>(std::clamp(std::floor(value + 0.5), 0.0, 255.0));
  }
  return rgb;
}

double log_score(double score) { return std::log1p(score); }

}  // namespace

double angular_span(std::size_t petals) {
  const auto n = static_cast<double>(std::clamp<std::size_t>(petals, 1, kMaxPetals));
  if (n < 10) return 18.0 * n;
  if (n <= 25) return 180.0;
  return 180.0 + (n - 25.0) * (90.0 / 25.0);
}

double node_color(double in_score, double out_score) {
  return (1.0 - influence_ratio(in_score, out_score)) / 2.0;
}

std::string color_hex(double color_t) {
  // The ramp's t runs red -> blue, color_t runs blue -> red.
  auto rgb = rdbu(1.0 - color_t);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

double edge_width(double score, std::span<const double> displayed, const DisplayScale& scale) {
  if (score <= 0.0) return 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double s : displayed) {
    if (s <= 0.0) continue;
    lo = std::min(lo, log_score(s));
    hi = std::max(hi, log_score(s));
  }
  if (!(hi > lo)) return (scale.min_width + scale.max_width) / 2.0;
  const double t = std::clamp((log_score(score) - lo) / (hi - lo), 0.0, 1.0);
  return scale.min_width + (scale.max_width - scale.min_width) * t;
}

FlowerLayout layout_flower(std::span<const AlterScore> sorted, std::string ego_label,
                           const DisplayScale& scale) {
  FlowerLayout layout;
  layout.ego_label = std::move(ego_label);
  layout.ego_radius = scale.max_radius;
  layout.scale = scale;
  if (sorted.empty()) return layout;

  const auto n = sorted.size();
  layout.span = angular_span(n);

  std::vector<double> displayed;
  double max_total = 0.0;
  for (const auto& a : sorted) {
    displayed.push_back(a.in_score);
    displayed.push_back(a.out_score);
    max_total = std::max(max_total, a.total());
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = sorted[i];
    Petal petal;
    petal.alter_id = a.id;
    petal.label = a.name;
    petal.greyed = a.co_contributor;
    petal.angle = n == 1 ? 90.0
                         : 90.0 - layout.span / 2.0 +
                               layout.span * static_cast<double>(i) / static_cast<double>(n - 1);
    petal.node_radius =
        max_total > 0.0
            ? scale.min_radius + (scale.max_radius - scale.min_radius) * (a.total() / max_total)
            : scale.min_radius;
    petal.color_t = node_color(a.in_score, a.out_score);
    petal.in_width = edge_width(a.in_score, displayed, scale);
    petal.out_width = edge_width(a.out_score, displayed, scale);
    petal.in_score = a.in_score;
    petal.out_score = a.out_score;
    layout.petals.push_back(std::move(petal));
  }
  return layout;
}

ContrastLayout compose_contrast(const FlowerLayout& anchor, const InfluenceProfile& contrast) {
  ContrastLayout out;
  out.anchor = anchor;
  for (const auto& petal : anchor.petals) {
    OverlayPetal overlay;
    overlay.alter_id = petal.alter_id;
    if (const auto* c = contrast.find(petal.alter_id)) {
      overlay.in_score = c->in_score;
      overlay.out_score = c->out_score;
      const double anchor_total = petal.in_score + petal.out_score;
      const double total = c->total();
      overlay.present = total > 0.0;
      if (overlay.present) {
        overlay.node_radius = anchor_total > 0.0 ? petal.node_radius * (total / anchor_total) : 0.0;
        overlay.in_width =
            petal.in_score > 0.0 ? petal.in_width * (c->in_score / petal.in_score) : 0.0;
        overlay.out_width =
            petal.out_score > 0.0 ? petal.out_width * (c->out_score / petal.out_score) : 0.0;
        overlay.color_t = node_color(c->in_score, c->out_score);
      }
    }
    out.overlay.push_back(std::move(overlay));
  }
  return out;
}

OverviewBars overview_bars(const InfluenceProfile& profile, const FlowerLayout& flower) {
  std::set<std::string> petals;
  for (const auto& p : flower.petals) petals.insert(p.alter_id);
  OverviewBars bars;
  bars.total_alters = profile.alters.size();
  for (const auto& a : select_alters(profile, kOverviewRows)) {
    bars.rows.push_back({a.id, a.name, a.raw_ref_count, a.raw_cite_count, petals.count(a.id) > 0});
  }
  return bars;
}

json layout_to_json(const FlowerLayout& layout) {
  json petals = json::array();
  for (const auto& p : layout.petals) {
    petals.push_back({{"alter_id", p.alter_id},
                      {"label", p.label},
                      {"greyed", p.greyed},
                      {"angle", p.angle},
                      {"node_radius", p.node_radius},
                      {"color_t", p.color_t},
                      {"color", color_hex(p.color_t)},
                      {"in_width", p.in_width},
                      {"out_width", p.out_width},
                      {"in_score", p.in_score},
                      {"out_score", p.out_score}});
  }
  return {{"type", "flower"},
          {"ego", {{"label", layout.ego_label},
                   {"radius", layout.ego_radius},
                   {"color", layout.ego_color}}},
          {"span", layout.span},
          {"scale", {{"min_radius", layout.scale.min_radius},
                     {"max_radius", layout.scale.max_radius},
                     {"min_width", layout.scale.min_width},
                     {"max_width", layout.scale.max_width}}},
          {"petals", std::move(petals)}};
}

json layout_to_json(const ContrastLayout& layout) {
  json overlay = json::array();
  for (const auto& o : layout.overlay) {
    overlay.push_back({{"alter_id", o.alter_id},
                       {"present", o.present},
                       {"node_radius", o.node_radius},
                       {"in_width", o.in_width},
                       {"out_width", o.out_width},
                       {"color_t", o.color_t},
                       {"color", color_hex(o.color_t)},
                       {"in_score", o.in_score},
                       {"out_score", o.out_score}});
  }
  return {{"type", "contrast"}, {"anchor", layout_to_json(layout.anchor)}, {"overlay", std::move(overlay)}};
}

json bars_to_json(const OverviewBars& bars) {
  json rows = json::array();
  for (const auto& r : bars.rows) {
    rows.push_back({{"alter_id", r.alter_id},
                    {"label", r.label},
                    {"raw_ref_count", r.raw_ref_count},
                    {"raw_cite_count", r.raw_cite_count},
                    {"in_flower", r.in_flower}});
  }
  return {{"rows", std::move(rows)}, {"total_alters", bars.total_alters}};
}

}  // namespace influence
