// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <cstdio>
#include <string>

#include "mindmap/render.hpp"

namespace mindmap {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string pt(double x, double y) { return num(x) + "," + num(y); }

std::string glyph(const MindMapNode& n) {
  const double x = n.position.x;
  const double y = n.position.y;
  const double s = n.element.size;
  std::string out;
  switch (n.domain) {
    case PaintingDomain::Architecture:
      out += "<rect x=\"" + num(x - s / 3) + "\" y=\"" + num(y - s / 4) + "\" width=\"" + num(2 * s / 3) +
             "\" height=\"" + num(s / 2) + "\" fill=\"#c9a27e\" stroke=\"#5b3a1e\"/>";
      out += "<polygon points=\"" + pt(x - s / 2, y - s / 4) + " " + pt(x, y - s / 2) + " " + pt(x + s / 2, y - s / 4) +
             "\" fill=\"#8c4a2f\"/>";
      break;
    case PaintingDomain::Mountain:
      out += "<polygon points=\"" + pt(x - s / 2, y + s / 3) + " " + pt(x - s / 6, y - s / 3) + " " + pt(x, y) + " " +
             pt(x + s / 6, y - s / 2) + " " + pt(x + s / 2, y + s / 3) + "\" fill=\"#6f8f72\" stroke=\"#2f4a33\"/>";
      break;
    case PaintingDomain::River:
      out += "<path d=\"M " + num(x - s / 2) + " " + num(y) + " Q " + num(x - s / 4) + " " + num(y - s / 4) + " " +
             num(x) + " " + num(y) + " T " + num(x + s / 2) + " " + num(y) +
             "\" fill=\"none\" stroke=\"#3b7ea1\" stroke-width=\"3\"/>";
      break;
    case PaintingDomain::Grassland:
      out += "<polyline points=\"" + pt(x - s / 2, y + s / 4) + " " + pt(x - s / 4, y - s / 4) + " " + pt(x, y + s / 4) +
             " " + pt(x + s / 4, y - s / 4) + " " + pt(x + s / 2, y + s / 4) +
             "\" fill=\"none\" stroke=\"#7fa650\" stroke-width=\"2\"/>";
      break;
    case PaintingDomain::Road:
      out += "<line x1=\"" + num(x - s / 2) + "\" y1=\"" + num(y + s / 4) + "\" x2=\"" + num(x + s / 2) + "\" y2=\"" +
             num(y - s / 4) + "\" stroke=\"#9a8c7a\" stroke-width=\"4\" stroke-dasharray=\"6 3\"/>";
      break;
    case PaintingDomain::Lake:
      out += "<ellipse cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" rx=\"" + num(s / 2) + "\" ry=\"" + num(s / 4) +
             "\" fill=\"#a8cfe0\" stroke=\"#3b7ea1\"/>";
      break;
  }
  return out;
}

bool inside(const Canvas& c, Point p) { return p.x >= 0 && p.y >= 0 && p.x <= c.width && p.y <= c.height; }

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
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

std::vector<Point> edge_polyline(Point from, Point to, double length, const Canvas& canvas) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double d = std::hypot(dx, dy);
  if (d >= length) return {from, to};
  // Bend at the midpoint so both halves together measure `length`.
  const double h = std::sqrt(std::max(0.0, length * length / 4.0 - d * d / 4.0));
  const Point perp = d > 0.0 ? Point{-dy / d, dx / d} : Point{0.0, -1.0};
  const Point mid{(from.x + to.x) / 2.0, (from.y + to.y) / 2.0};
  Point bend{mid.x + perp.x * h, mid.y + perp.y * h};
  if (!inside(canvas, bend)) {
    const Point other{mid.x - perp.x * h, mid.y - perp.y * h};
    if (inside(canvas, other)) bend = other;
  }
  return {from, bend, to};
}

std::string render_svg(const MindMap& map) {
  const auto& c = map.canvas;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(c.width) + "\" height=\"" + num(c.height) +
         "\" viewBox=\"0 0 " + num(c.width) + " " + num(c.height) + "\">\n";
  out += "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" + num(c.width) + "\" height=\"" + num(c.height) +
         "\" fill=\"#f7f3e8\" stroke=\"#333333\"/>\n";
  out += "  <g class=\"edges\" fill=\"none\" stroke=\"#7a6a55\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < map.nodes.size(); ++i) {
    const auto& n = map.nodes[i];
    if (!n.parent) continue;
    const auto points = edge_polyline(map.nodes[*n.parent].position, n.position, n.path_length, c);
    std::string d = "M " + num(points[0].x) + " " + num(points[0].y);
    for (std::size_t k = 1; k < points.size(); ++k) d += " L " + num(points[k].x) + " " + num(points[k].y);
    out += "    <path class=\"edge\" data-from=\"" + std::to_string(*n.parent) + "\" data-to=\"" + std::to_string(i) +
           "\" data-length=\"" + num(n.path_length) + "\" d=\"" + d + "\"/>\n";
  }
  out += "  </g>\n";
  for (std::size_t i = 0; i < map.nodes.size(); ++i) {
    const auto& n = map.nodes[i];
    out += "  <g class=\"node\" id=\"node-" + std::to_string(i) + "\" data-domain=\"" +
           std::string(to_string(n.domain)) + "\" data-glyph=\"" + std::string(n.element.glyph) + "\"";
    if (n.provenance) out += " data-provenance=\"" + std::string(to_string(*n.provenance)) + "\"";
    out += ">" + glyph(n);
    out += "<text x=\"" + num(n.position.x) + "\" y=\"" + num(n.position.y + n.element.size / 2 + 14) +
           "\" text-anchor=\"middle\" font-size=\"" + (n.parent ? "14" : "20") + "\">" + xml_escape(n.word) +
           "</text></g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mindmap
