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

#include <gtest/gtest.h>

#include "influence/svg.hpp"

namespace influence {
namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<AlterScore> sample() {
  std::vector<AlterScore> v(3);
  v[0] = {"a", "Alpha & Co", EntityKind::author, 2.0, 0.0};
  v[1] = {"b", "Beta", EntityKind::author, 1.0, 1.0};
  v[2] = {"c", "<Gamma>", EntityKind::author, 0.0, 3.0, 0, 0, true};
  return v;
}

TEST(Svg, DeterministicAndWellFormed) {
  const auto l = layout_flower(sample(), "Ego \"One\"");
  const auto a = render_svg(l);
  const auto b = render_svg(l);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(a, "class=\"alter\""), 3u);
  EXPECT_EQ(count(a, "class=\"ego\""), 1u);
  // Zero-score sides draw no edge: a has no outgoing, c no incoming.
  EXPECT_EQ(count(a, "class=\"in edge-"), 2u);
  EXPECT_EQ(count(a, "class=\"out edge-"), 2u);
  EXPECT_NE(a.find("Alpha &amp; Co"), std::string::npos);
  EXPECT_NE(a.find("&lt;Gamma&gt;"), std::string::npos);
  EXPECT_NE(a.find("Ego &quot;One&quot;"), std::string::npos);
  EXPECT_NE(a.find("fill=\"#053061\""), std::string::npos);
  EXPECT_NE(a.find("fill=\"#67001f\""), std::string::npos);
  EXPECT_NE(a.find("fill=\"#9a9a9a\""), std::string::npos);  // greyed co-contributor label
}

TEST(Svg, ContrastDrawsAnchorUnderneath) {
  const auto l = layout_flower(sample(), "E");
  InfluenceProfile sub;
  sub.alters = {{"a", "Alpha & Co", EntityKind::author, 1.0, 0.0}};
  const auto svg = render_svg(compose_contrast(l, sub));
  EXPECT_NE(svg.find("class=\"anchor\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"contrast\""), std::string::npos);
  EXPECT_EQ(count(svg, "class=\"alter\""), 4u);  // three anchor nodes plus one overlay
  EXPECT_LT(svg.find("class=\"anchor\""), svg.find("class=\"contrast\""));
}

TEST(Svg, EmptyFlowerStillRenders) {
  const auto svg = render_svg(layout_flower({}, "Nobody"));
  EXPECT_EQ(count(svg, "class=\"alter\""), 0u);
  EXPECT_EQ(count(svg, "class=\"ego\""), 1u);
}

}  // namespace
}  // namespace influence
