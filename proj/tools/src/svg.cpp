// Copyright 2026 The bcpaths Authors
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


#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

namespace bcp::cli
{

namespace
{

constexpr double kPanelGap = 20.0;
constexpr double kTitleHeight = 20.0;

std::string escape(const std::string & s)
{
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void SvgDocument::panel(const Vec2 & lo, const Vec2 & hi, const std::string & title)
{
  double x0 = 0.0;
  if (!panels_.empty()) {
    const auto & last = *panels_.back();
    x0 = last.x0 + (last.hi.x - last.lo.x) * kPixelsPerUnit + kPanelGap;
  }
  auto p = std::make_unique<Panel>();
  p->lo = lo;
  p->hi = hi;
  p->x0 = x0;
  p->title = title;
  p->body << std::fixed << std::setprecision(2);
  panels_.push_back(std::move(p));
}

SvgDocument::Panel & SvgDocument::current()
{
  if (panels_.empty()) {
    panel({-5, -5}, {5, 5});
  }
  return *panels_.back();
}

Vec2 SvgDocument::px(const Vec2 & p)
{
  const auto & pn = current();
  return {pn.x0 + (p.x - pn.lo.x) * kPixelsPerUnit, kTitleHeight + (pn.hi.y - p.y) * kPixelsPerUnit};
}

std::string SvgDocument::attrs(const Style & s)
{
  std::ostringstream o;
  o << "stroke=\"" << s.stroke << "\" stroke-width=\"" << s.width << "\" fill=\"" << s.fill <<
    "\"";
  if (s.opacity < 1.0) {
    o << " opacity=\"" << s.opacity << "\"";
  }
  if (!s.dash.empty()) {
    o << " stroke-dasharray=\"" << s.dash << "\"";
  }
  return o.str();
}

void SvgDocument::path(const CsPath & p, const Style & s)
{
  auto & body = current().body;
  const Vec2 a = px(p.start().point);
  body << "<path d=\"M " << a.x << ' ' << a.y;
  const double r = kPixelsPerUnit;
  for (const auto & el : p.elements()) {
    if (!el.is_arc()) {
      const Vec2 b = px(el.end_point());
      body << " L " << b.x << ' ' << b.y;
      continue;
    }
    // Pieces of at most pi keep the large-arc flag unambiguous. The y flip
    // turns counterclockwise arcs into clockwise screen arcs (sweep flag 1).
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(el.sweep) / kPi - 1e-12)));
    const int flag = el.sweep >= 0.0 ? 1 : 0;
    for (int i = 1; i <= pieces; ++i) {
      const Vec2 b = px(el.position_at(el.length() * i / pieces));
      body << " A " << r << ' ' << r << " 0 0 " << flag << ' ' << b.x << ' ' << b.y;
    }
  }
  body << "\" " << attrs(s) << "/>\n";
}

void SvgDocument::polyline(const std::vector<Vec2> & pts, const Style & s)
{
  if (pts.empty()) {
    return;
  }
  auto & body = current().body;
  body << "<polyline points=\"";
  for (const auto & p : pts) {
    const Vec2 q = px(p);
    body << q.x << ',' << q.y << ' ';
  }
  body << "\" " << attrs(s) << "/>\n";
}

void SvgDocument::circle(const Vec2 & c, double r, const Style & s)
{
  const Vec2 q = px(c);
  current().body << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"" <<
    r * kPixelsPerUnit << "\" " << attrs(s) << "/>\n";
}

void SvgDocument::pose(const DirectedPoint & x, const std::string & color)
{
  const Vec2 tip = x.point + x.direction() * 0.4;
  const Vec2 l = tip - rotate(x.direction(), 0.4) * 0.15;
  const Vec2 r = tip - rotate(x.direction(), -0.4) * 0.15;
  polyline({x.point, tip}, Style::of(color, 2.0));
  polyline({l, tip, r}, Style::of(color, 2.0));
  circle(x.point, 0.05, Style::of(color, 1.0, color));
}

void SvgDocument::adjacent(const DirectedPoint & x, const DirectedPoint & y)
{
  for (const auto * z : {&x, &y}) {
    const auto c = adjacent_circles(*z);
    circle(c.left.center, 1.0, Style::of("#2a9d8f", 1.0, "none", "4 3"));
    circle(c.right.center, 1.0, Style::of("#e76f51", 1.0, "none", "4 3"));
  }
}

void SvgDocument::omega(const OmegaRegion & region, const std::string & color)
{
  auto & body = current().body;
  const double side = region.resolution() * kPixelsPerUnit;
  for (int j = 0; j < region.ny(); ++j) {
    for (int i = 0; i < region.nx(); ++i) {
      if (!region.cell(i, j)) {
        continue;
      }
      const Vec2 c = region.cell_center(i, j);
      const Vec2 q = px({c.x - 0.5 * region.resolution(), c.y + 0.5 * region.resolution()});
      body << "<rect x=\"" << q.x << "\" y=\"" << q.y << "\" width=\"" << side <<
        "\" height=\"" << side << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
    }
  }
}

void SvgDocument::label(const Vec2 & at, const std::string & text)
{
  const Vec2 q = px(at);
  current().body << "<text x=\"" << q.x << "\" y=\"" << q.y <<
    "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(text) << "</text>\n";
}

std::string SvgDocument::str() const
{
  double width = 0.0;
  double height = 0.0;
  for (const auto & p : panels_) {
    width = std::max(width, p->x0 + (p->hi.x - p->lo.x) * kPixelsPerUnit);
    height = std::max(height, kTitleHeight + (p->hi.y - p->lo.y) * kPixelsPerUnit);
  }
  std::ostringstream o;
  o << std::fixed << std::setprecision(2);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width <<
    "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto & p : panels_) {
    if (!p->title.empty()) {
      o << "<text x=\"" << p->x0 + 4 << "\" y=\"14\" font-family=\"sans-serif\" font-size=\"12\">" <<
        escape(p->title) << "</text>\n";
    }
    o << "<g>\n" << p->body.str() << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::pair<Vec2, Vec2> bounds_of(const std::vector<Vec2> & pts, double margin, double min_extent)
{
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi{-lo.x, -lo.y};
  for (const auto & p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  if (pts.empty()) {
    lo = {0, 0};
    hi = {0, 0};
  }
  lo = lo - Vec2{margin, margin};
  hi = hi + Vec2{margin, margin};
  const Vec2 mid = (lo + hi) * 0.5;
  const Vec2 half{std::max(0.5 * (hi.x - lo.x), 0.5 * min_extent),
    std::max(0.5 * (hi.y - lo.y), 0.5 * min_extent)};
  return {mid - half, mid + half};
}

std::vector<Vec2> positions(const SampledPath & p)
{
  std::vector<Vec2> out;
  out.reserve(p.samples.size());
  for (const auto & s : p.samples) {
    out.push_back(s.position);
  }
  return out;
}

}  // namespace bcp::cli
