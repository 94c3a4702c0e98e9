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

#include <string>

#include "influence/flower_geometry.hpp"

namespace influence {

struct SvgCanvas {
  double width = 900.0;
  double height = 560.0;
  double arc_radius = 320.0;
};

/// Standalone SVG 1.1 documents. Output is a pure function of the layout.
std::string render_svg(const FlowerLayout& layout, const SvgCanvas& canvas = {});
std::string render_svg(const ContrastLayout& layout, const SvgCanvas& canvas = {});

}  // namespace influence
