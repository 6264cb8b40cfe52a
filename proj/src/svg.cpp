// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "barter/errors.hpp"
#include "barter/result_io.hpp"

namespace barter {

namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// SVG's y axis points down; flip so the picture matches the usual plane.
Vec2 to_canvas(const Point& p) {
  if (p.size() == 1) return {p[0], 0.0};
  return {p[0], -p[1]};
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string geometry_svg(const ScenarioSpec& spec, const Outcome* outcome) {
  if (spec.dimension > 2)
    throw GuardError("render: only 1- and 2-dimensional scenarios are drawable (got dimension " +
                     std::to_string(spec.dimension) + ")");

  struct Glyph {
    int id;
    Vec2 demand;
    Vec2 offer;
    double radius;
  };
  std::vector<Glyph> glyphs;
  std::map<int, Vec2> demand_at;
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };

  for (const Agent& a : spec.agents) {
    validate(a);
    Glyph g{a.id, to_canvas(a.demand), to_canvas(a.offer),
            reservation_radius(a, {a.id, 0})};
    grow(g.demand.x - g.radius, g.demand.y - g.radius);
    grow(g.demand.x + g.radius, g.demand.y + g.radius);
    grow(g.offer.x, g.offer.y);
    demand_at[a.id] = g.demand;
    glyphs.push_back(g);
  }

  const double pad = 0.08 * std::max({max_x - min_x, max_y - min_y, 1.0});
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double hair = 0.004 * extent;
  const double dot = 0.012 * extent;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(min_x) << " "
      << format_double(min_y) << " " << format_double(max_x - min_x) << " "
      << format_double(max_y - min_y) << "\">\n";
  out << "  <title>" << escape_xml(spec.name) << "</title>\n";

  if (spec.dimension == 1) {
    out << "  <line class=\"axis\" x1=\"" << format_double(min_x) << "\" y1=\"0\" x2=\""
        << format_double(max_x) << "\" y2=\"0\" stroke=\"#9ca3af\" stroke-width=\""
        << format_double(hair) << "\"/>\n";
  }

  if (outcome) {
    for (const auto& [i, j] : outcome->matching) {
      const Vec2& a = demand_at.at(i);
      const Vec2& b = demand_at.at(j);
      out << "  <line class=\"match\" x1=\"" << format_double(a.x) << "\" y1=\""
          << format_double(a.y) << "\" x2=\"" << format_double(b.x) << "\" y2=\""
          << format_double(b.y) << "\" stroke=\"#16a34a\" stroke-width=\""
          << format_double(2.0 * hair) << "\" stroke-dasharray=\"" << format_double(4.0 * hair)
          << " " << format_double(3.0 * hair) << "\"/>\n";
    }
  }

  for (const Glyph& g : glyphs) {
    out << "  <line class=\"link\" x1=\"" << format_double(g.demand.x) << "\" y1=\""
        << format_double(g.demand.y) << "\" x2=\"" << format_double(g.offer.x) << "\" y2=\""
        << format_double(g.offer.y) << "\" stroke=\"#d1d5db\" stroke-width=\""
        << format_double(hair) << "\"/>\n";
    out << "  <circle class=\"demand\" cx=\"" << format_double(g.demand.x) << "\" cy=\""
        << format_double(g.demand.y) << "\" r=\"" << format_double(g.radius)
        << "\" fill=\"none\" stroke=\"#2563eb\" stroke-width=\"" << format_double(hair)
        << "\"/>\n";
    out << "  <circle class=\"offer\" cx=\"" << format_double(g.offer.x) << "\" cy=\""
        << format_double(g.offer.y) << "\" r=\"" << format_double(dot)
        << "\" fill=\"#dc2626\"/>\n";
    out << "  <text class=\"label\" x=\"" << format_double(g.demand.x + 1.2 * dot) << "\" y=\""
        << format_double(g.demand.y - 1.2 * dot) << "\" font-size=\""
        << format_double(0.03 * extent) << "\" fill=\"#111827\">" << g.id << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace barter
