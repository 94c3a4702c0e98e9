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

#include "influence/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace influence {

namespace {

constexpr const char* kInColor = "#2166ac";
constexpr const char* kOutColor = "#b2182b";
constexpr const char* kAnchorNode = "#e6e6e6";
constexpr const char* kAnchorEdge = "#cfcfcf";

struct Point {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const SvgCanvas& c)
      : canvas_(c), centre_{c.width / 2.0, c.height - 70.0} {}

  Point centre() const { return centre_; }

  Point on_arc(double angle_deg, double radius) const {
    const double a = angle_deg * std::numbers::pi / 180.0;
    return {centre_.x - radius * std::cos(a), centre_.y - radius * std::sin(a)};
  }

  Point alter_at(double angle_deg) const { return on_arc(angle_deg, canvas_.arc_radius); }

  double arc_radius() const { return canvas_.arc_radius; }

  void open(const std::string& title) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(canvas_.width) +
            "\" height=\"" + num(canvas_.height) + "\" viewBox=\"0 0 " + num(canvas_.width) + " " +
            num(canvas_.height) + "\">\n";
    out_ += "<title>" + escape(title) + "</title>\n";
    out_ += "<defs>\n";
    marker("arrow-in", kInColor);
    marker("arrow-out", kOutColor);
    marker("arrow-anchor", kAnchorEdge);
    out_ += "</defs>\n";
    out_ += "<rect x=\"0\" y=\"0\" width=\"" + num(canvas_.width) + "\" height=\"" +
            num(canvas_.height) + "\" fill=\"#ffffff\"/>\n";
  }

  void close() { out_ += "</svg>\n"; }

  void group_open(const std::string& attrs) { out_ += "<g " + attrs + ">\n"; }
  void group_close() { out_ += "</g>\n"; }

  // One curved edge of a petal. `side` bows it left (+1) or right (-1) of the
  // straight line; the path stops at the target node boundary.
  void edge(Point from, Point to, double from_r, double to_r, double width, int side,
            const char* color, const char* marker_id, const std::string& cls) {
    if (width <= 0.0) return;
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double len = std::hypot(dx, dy);
    if (len <= from_r + to_r) return;
    const Point mid{(from.x + to.x) / 2.0, (from.y + to.y) / 2.0};
    const double bow = 0.12 * len * side;
    const Point ctrl{mid.x - dy / len * bow, mid.y + dx / len * bow};
    auto trim = [](Point end, Point toward, double r) {
      const double ex = toward.x - end.x;
      const double ey = toward.y - end.y;
      const double d = std::hypot(ex, ey);
      return Point{end.x + ex / d * r, end.y + ey / d * r};
    };
    // Leave room for the arrowhead at the target.
    const Point start = trim(from, ctrl, from_r);
    const Point end = trim(to, ctrl, to_r + 2.0);
    out_ += "<path class=\"" + cls + "\" d=\"M " + num(start.x) + " " + num(start.y) + " Q " +
            num(ctrl.x) + " " + num(ctrl.y) + " " + num(end.x) + " " + num(end.y) +
            "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
            "\" stroke-linecap=\"round\" marker-end=\"url(#" + marker_id + ")\"/>\n";
  }

  void node(Point at, double r, const std::string& fill, const std::string& attrs) {
    out_ += "<circle " + attrs + " cx=\"" + num(at.x) + "\" cy=\"" + num(at.y) + "\" r=\"" +
            num(r) + "\" fill=\"" + fill + "\" stroke=\"#4d4d4d\" stroke-width=\"1.00\"/>\n";
  }

  void label(double angle_deg, double offset, const std::string& text, bool greyed) {
    const Point at = on_arc(angle_deg, canvas_.arc_radius + offset);
    const char* anchor = angle_deg < 80.0 ? "end" : angle_deg > 100.0 ? "start" : "middle";
    out_ += "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y) + "\" text-anchor=\"" + anchor +
            "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"11\" fill=\"" +
            (greyed ? "#9a9a9a" : "#222222") + "\">" + escape(text) + "</text>\n";
  }

  void ego_label(const std::string& text) {
    out_ += "<text x=\"" + num(centre_.x) + "\" y=\"" + num(centre_.y + 34.0) +
            "\" text-anchor=\"middle\" font-family=\"Helvetica, Arial, sans-serif\" "
            "font-size=\"13\" font-weight=\"bold\" fill=\"#222222\">" +
            escape(text) + "</text>\n";
  }

  std::string take() { return std::move(out_); }

 private:
  void marker(const char* id, const char* color) {
    out_ += std::string("<marker id=\"") + id +
            "\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"4\" "
            "markerHeight=\"4\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
            color + "\"/></marker>\n";
  }

  SvgCanvas canvas_;
  Point centre_;
  std::string out_;
};

// Incoming edges run alter -> ego on one side of the petal, outgoing ego -> alter on the other.
void draw_petal_edges(Canvas& canvas, double angle, double alter_r, double ego_r, double in_w,
                      double out_w, bool anchor, const std::string& id) {
  const Point ego = canvas.centre();
  const Point alter = canvas.alter_at(angle);
  canvas.edge(alter, ego, alter_r, ego_r, in_w, +1, anchor ? kAnchorEdge : kInColor,
              anchor ? "arrow-anchor" : "arrow-in", "in edge-" + escape(id));
  canvas.edge(ego, alter, ego_r, alter_r, out_w, +1, anchor ? kAnchorEdge : kOutColor,
              anchor ? "arrow-anchor" : "arrow-out", "out edge-" + escape(id));
}

void draw_flower(Canvas& canvas, const FlowerLayout& layout, bool anchor) {
  canvas.group_open(anchor ? "class=\"anchor\"" : "class=\"flower\"");
  for (const auto& p : layout.petals)
    draw_petal_edges(canvas, p.angle, p.node_radius, layout.ego_radius, p.in_width, p.out_width,
                     anchor, p.alter_id);
  for (const auto& p : layout.petals) {
    canvas.node(canvas.alter_at(p.angle), p.node_radius,
                anchor ? kAnchorNode : color_hex(p.color_t),
                "class=\"alter\" data-alter=\"" + escape(p.alter_id) + "\"");
    canvas.label(p.angle, layout.scale.max_radius + 8.0, p.label, p.greyed);
  }
  canvas.group_close();
  canvas.node(canvas.centre(), layout.ego_radius, layout.ego_color, "class=\"ego\"");
  canvas.ego_label(layout.ego_label);
}

}  // namespace

std::string render_svg(const FlowerLayout& layout, const SvgCanvas& canvas_options) {
  Canvas canvas(canvas_options);
  canvas.open(layout.ego_label);
  draw_flower(canvas, layout, false);
  canvas.close();
  return canvas.take();
}

std::string render_svg(const ContrastLayout& layout, const SvgCanvas& canvas_options) {
  Canvas canvas(canvas_options);
  canvas.open(layout.anchor.ego_label);
  draw_flower(canvas, layout.anchor, true);
  canvas.group_open("class=\"contrast\"");
  for (std::size_t i = 0; i < layout.overlay.size(); ++i) {
    const auto& o = layout.overlay[i];
    const auto& p = layout.anchor.petals[i];
    if (!o.present) continue;
    draw_petal_edges(canvas, p.angle, o.node_radius, layout.anchor.ego_radius, o.in_width,
                     o.out_width, false, o.alter_id);
  }
  for (std::size_t i = 0; i < layout.overlay.size(); ++i) {
    const auto& o = layout.overlay[i];
    if (!o.present) continue;
    canvas.node(canvas.alter_at(layout.anchor.petals[i].angle), o.node_radius,
                color_hex(o.color_t), "class=\"alter\" data-alter=\"" + escape(o.alter_id) + "\"");
  }
  canvas.group_close();
  canvas.node(canvas.centre(), layout.anchor.ego_radius, layout.anchor.ego_color, "class=\"ego\"");
  canvas.close();
  return canvas.take();
}

}  // namespace influence
