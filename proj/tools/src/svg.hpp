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


// Minimal SVG 1.1 writer for paths, circles, regions and poses.

#ifndef BCP_TOOLS__SVG_HPP_
#define BCP_TOOLS__SVG_HPP_

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"
#include "bcp/proximity.hpp"

namespace bcp::cli
{

struct Style
{
  std::string stroke{"black"};
  double width{1.5};
  std::string fill{"none"};
  double opacity{1.0};
  std::string dash;

  static Style of(std::string stroke, double width, std::string fill = "none", std::string dash = "")
  {
    Style s;
    s.stroke = std::move(stroke);
    s.width = width;
    s.fill = std::move(fill);
    s.dash = std::move(dash);
    return s;
  }
};

/// Drawing in world units, 50 px per unit, y pointing up. Each panel is laid
/// out left to right with its own world window.
class SvgDocument
{
public:
  static constexpr double kPixelsPerUnit = 50.0;

  /// Starts a new panel showing [lo, hi]; the first panel starts implicitly.
  void panel(const Vec2 & lo, const Vec2 & hi, const std::string & title = "");

  void path(const CsPath & p, const Style & s = {});
  void polyline(const std::vector<Vec2> & pts, const Style & s = {});
  void circle(const Vec2 & c, double r, const Style & s = {});
  /// Heading arrow of a directed point.
  void pose(const DirectedPoint & x, const std::string & color = "black");
  /// The four adjacent circles of x and y.
  void adjacent(const DirectedPoint & x, const DirectedPoint & y);
  /// Filled cells of the region mask at its grid resolution.
  void omega(const OmegaRegion & region, const std::string & color = "#4c9be8");
  void label(const Vec2 & at, const std::string & text);

  std::string str() const;

private:
  struct Panel
  {
    Vec2 lo;
    Vec2 hi;
    double x0{0.0};
    std::string title;
    std::ostringstream body;
  };

  Panel & current();
  Vec2 px(const Vec2 & p);
  static std::string attrs(const Style & s);

  std::vector<std::unique_ptr<Panel>> panels_;
};

/// Smallest box containing the points, padded by `margin` and grown about its
/// center to at least `min_extent` on each side.
std::pair<Vec2, Vec2> bounds_of(
  const std::vector<Vec2> & pts, double margin = 1.0, double min_extent = 0.0);
std::vector<Vec2> positions(const SampledPath & p);

}  // namespace bcp::cli

#endif  // BCP_TOOLS__SVG_HPP_
