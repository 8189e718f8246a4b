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

#include "bcp/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcp/dubins.hpp"

namespace bcp
{

std::string_view to_string(RawCondition c)
{
  switch (c) {
    case RawCondition::I: return "i";
    case RawCondition::II: return "ii";
    case RawCondition::III: return "iii";
    case RawCondition::IV: return "iv";
  }
  return "?";
}

std::string_view to_string(Condition c)
{
  switch (c) {
    case Condition::A: return "A";
    case Condition::B: return "B";
    case Condition::C: return "C";
    case Condition::D: return "D";
  }
  return "?";
}

std::string_view to_string(DSubcase c)
{
  switch (c) {
    case DSubcase::SingleArc: return "SingleArc";
    case DSubcase::TwoArc: return "TwoArc";
    case DSubcase::OmegaRegion: return "OmegaRegion";
  }
  return "?";
}

OmegaRegion::OmegaRegion(
  Vec2 origin, double resolution, int nx, int ny, std::vector<std::uint8_t> mask,
  DirectedPoint x, DirectedPoint y, std::array<Vec2, 4> centers)
: origin_(origin), resolution_(resolution), nx_(nx), ny_(ny), mask_(std::move(mask)),
  x_(x), y_(y), centers_(centers) {}

std::size_t OmegaRegion::cell_count() const
{
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

double OmegaRegion::area() const
{
  return static_cast<double>(cell_count()) * resolution_ * resolution_;
}

bool OmegaRegion::cell(int i, int j) const
{
  if (i < 0 || j < 0 || i >= nx_ || j >= ny_) {
    return false;
  }
  return mask_[static_cast<std::size_t>(j) * nx_ + i] != 0;
}

Vec2 OmegaRegion::cell_center(int i, int j) const
{
  return origin_ + Vec2{(i + 0.5) * resolution_, (j + 0.5) * resolution_};
}

double OmegaRegion::attach_radius() const
{
  return 2.0 * std::sqrt(resolution_) + resolution_;
}

double OmegaRegion::diameter() const
{
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      if (cell(i, j)) {
        const Vec2 c = cell_center(i, j);
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
      }
    }
  }
  return cell_count() == 0 ? 0.0 : norm(hi - lo) + 2.0 * resolution_;
}

bool OmegaRegion::contains(const Vec2 & p) const
{
  constexpr double eps = 1e-9;
  for (const auto & c : centers_) {
    if (distance(p, c) < 1.0 - eps) {
      return false;
    }
  }
  const double r = attach_radius();
  if (distance(p, x_.point) <= r && dot(p - x_.point, x_.direction()) >= -eps) {
    return true;
  }
  if (distance(p, y_.point) <= r && dot(p - y_.point, y_.direction()) <= eps) {
    return true;
  }
  const int i = static_cast<int>(std::floor((p.x - origin_.x) / resolution_));
  const int j = static_cast<int>(std::floor((p.y - origin_.y) / resolution_));
  for (int dj = -1; dj <= 1; ++dj) {
    for (int di = -1; di <= 1; ++di) {
      if (cell(i + di, j + dj)) {
        return true;
      }
    }
  }
  return false;
}

RawCondition raw_condition(double d_ll, double d_rr, bool * boundary)
{
  if (boundary) {
    *boundary = std::abs(d_ll - 4.0) <= kGeomTol || std::abs(d_rr - 4.0) <= kGeomTol;
  }
  const bool far_l = d_ll >= 4.0;
  const bool far_r = d_rr >= 4.0;
  if (far_l && far_r) {
    return RawCondition::I;
  }
  if (!far_l && far_r) {
    return RawCondition::II;
  }
  if (far_l && !far_r) {
    return RawCondition::III;
  }
  return RawCondition::IV;
}

namespace
{

// Sweep from heading `from` to `to` along orientation t, in [0, 2pi).
double sweep_between(double from, double to, Turn t)
{
  return wrap_two_pi(turn_sign(t) * (to - from));
}

bool is_tangent_on(const Circle & c, const DirectedPoint & p)
{
  if (std::abs(distance(c.center, p.point) - 1.0) > kGeomTol) {
    return false;
  }
  const double h = angle_of(perp(p.point - c.center) * turn_sign(c.orientation));
  return std::abs(normalize_angle(h - p.heading)) <= kGeomTol;
}

bool short_sweep(double s, bool * boundary)
{
  if (boundary && std::abs(s - kPi) <= kGeomTol) {
    *boundary = true;
  }
  return s > kGeomTol && s < kPi - kGeomTol;
}

}  // namespace

std::optional<ArcWitness> detect_single_arc(
  const DirectedPoint & x, const DirectedPoint & y, bool * boundary)
{
  const auto ac = adjacent_circles(x);
  for (const Turn t : {Turn::Left, Turn::Right}) {
    const Circle & c = ac.get(t);
    if (!is_tangent_on(c, y)) {
      continue;
    }
    const double s = sweep_between(x.heading, y.heading, t);
    if (short_sweep(s, boundary)) {
      return ArcWitness{c, s};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<ArcWitness, ArcWitness>> detect_two_arc(
  const DirectedPoint & x, const DirectedPoint & y, bool * boundary)
{
  const auto ax = adjacent_circles(x);
  const auto ay = adjacent_circles(y);
  for (const Turn t : {Turn::Left, Turn::Right}) {
    const Circle & c1 = ax.get(t);
    const Circle & c2 = ay.get(opposite(t));
    if (std::abs(distance(c1.center, c2.center) - 2.0) > kGeomTol) {
      continue;
    }
    const Vec2 q = (c1.center + c2.center) * 0.5;
    const double hq = angle_of(perp(q - c1.center) * turn_sign(t));
    const double s1 = sweep_between(x.heading, hq, t);
    const double s2 = sweep_between(hq, y.heading, opposite(t));
    if (short_sweep(s1, boundary) && short_sweep(s2, boundary)) {
      return std::make_pair(ArcWitness{c1, s1}, ArcWitness{c2, s2});
    }
  }
  return std::nullopt;
}

std::optional<OmegaRegion> detect_omega(
  const DirectedPoint & x, const DirectedPoint & y, double resolution)
{
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw Error(ErrorCode::InvalidParameter, "grid resolution must be positive");
  }
  const auto ax = adjacent_circles(x);
  const auto ay = adjacent_circles(y);
  const std::array<Vec2, 4> centers{ax.left.center, ax.right.center, ay.left.center,
    ay.right.center};
  Vec2 lo = centers[0];
  Vec2 hi = centers[0];
  for (const auto & c : centers) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  }
  lo -= Vec2{3.0, 3.0};
  hi += Vec2{3.0, 3.0};
  const int nx = static_cast<int>(std::ceil((hi.x - lo.x) / resolution));
  const int ny = static_cast<int>(std::ceil((hi.y - lo.y) / resolution));
  const auto idx = [nx](int i, int j) {return static_cast<std::size_t>(j) * nx + i;};

  std::vector<std::uint8_t> free(static_cast<std::size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Vec2 p = lo + Vec2{(i + 0.5) * resolution, (j + 0.5) * resolution};
      bool ok = true;
      for (const auto & c : centers) {
        const Vec2 d = p - c;
        if (dot(d, d) < 1.0) {
          ok = false;
          break;
        }
      }
      free[idx(i, j)] = ok ? 1 : 0;
    }
  }

  // Cell centers miss passages narrower than a cell. Every gap between two disks is
  // opened explicitly along the perpendicular bisector through its narrowest point.
  auto cell_of = [&](const Vec2 & p) {
      return std::pair{static_cast<int>(std::floor((p.x - lo.x) / resolution)),
        static_cast<int>(std::floor((p.y - lo.y) / resolution))};
    };
  auto outside_all = [&](const Vec2 & p) {
      return std::all_of(centers.begin(), centers.end(), [&](const Vec2 & c) {
               return distance(p, c) >= 1.0;
             });
    };
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      const Vec2 v = centers[b] - centers[a];
      const double d = norm(v);
      if (d <= 2.0 + kGeomTol || d >= 2.0 + 4.0 * resolution) {
        continue;
      }
      const Vec2 m = (centers[a] + centers[b]) * 0.5;
      const Vec2 n = perp(v / d);
      for (const double dir : {1.0, -1.0}) {
        auto prev = cell_of(m);
        for (double t = 0.0; t <= 1.0; t += resolution / 4.0) {
          const Vec2 p = m + n * (dir * t);
          if (!outside_all(p)) {
            break;
          }
          const auto c = cell_of(p);
          if (c.first < 0 || c.second < 0 || c.first >= nx || c.second >= ny) {
            break;
          }
          free[idx(c.first, c.second)] = 1;
          if (c.first != prev.first && c.second != prev.second) {
            free[idx(c.first, prev.second)] = 1;
          }
          prev = c;
        }
      }
    }
  }

  // The region is entered through the cusp ahead of x and left through the cusp
  // behind y. The cusp tips are thinner than a cell, so their axes are opened the
  // same way as the gaps above; the first axis cell is the seed.
  auto cusp_seed = [&](const DirectedPoint & p, double dir) -> std::optional<std::pair<int, int>> {
      std::optional<std::pair<int, int>> seed;
      std::pair<int, int> prev{};
      // Stop halfway so the ray never reaches past the other cusp.
      const double reach = std::min(1.0, 0.5 * distance(x.point, y.point));
      for (double t = resolution / 4.0; t <= reach; t += resolution / 4.0) {
        const Vec2 q = p.point + p.direction() * (dir * t);
        if (!outside_all(q)) {
          break;
        }
        const auto c = cell_of(q);
        if (c.first < 0 || c.second < 0 || c.first >= nx || c.second >= ny) {
          break;
        }
        free[idx(c.first, c.second)] = 1;
        if (!seed) {
          seed = c;
        } else if (c.first != prev.first && c.second != prev.second) {
          free[idx(c.first, prev.second)] = 1;
        }
        prev = c;
      }
      return seed;
    };
  const auto seed_x = cusp_seed(x, 1.0);
  const auto seed_y = cusp_seed(y, -1.0);
  if (!seed_x || !seed_y) {
    return std::nullopt;
  }
  std::vector<std::uint8_t> mask(free.size(), 0);
  std::vector<std::pair<int, int>> stack{*seed_x};
  mask[idx(seed_x->first, seed_x->second)] = 1;
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) {
      return std::nullopt;
    }
    const std::array<std::pair<int, int>, 4> nbrs{
      std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}};
    for (const auto & [a, b] : nbrs) {
      if (free[idx(a, b)] && !mask[idx(a, b)]) {
        mask[idx(a, b)] = 1;
        stack.emplace_back(a, b);
      }
    }
  }
  if (!mask[idx(seed_y->first, seed_y->second)]) {
    return std::nullopt;
  }
  return OmegaRegion(lo, resolution, nx, ny, std::move(mask), x, y, centers);
}

CsPath arc_path(const DirectedPoint & x, const std::vector<ArcWitness> & arcs)
{
  CsPath p(x);
  for (const auto & a : arcs) {
    p.append_arc(a.circle.orientation, a.sweep);
  }
  return p;
}

namespace
{

bool has_long_component(const CsPath & p)
{
  for (const auto & el : p.elements()) {
    if (el.is_arc() ? std::abs(el.sweep) >= kPi : el.length() >= 4.0) {
      return true;
    }
  }
  return false;
}

}  // namespace

ProximityReport classify(const DirectedPoint & x, const DirectedPoint & y, double resolution)
{
  ProximityReport rep;
  const auto ax = adjacent_circles(x);
  const auto ay = adjacent_circles(y);
  rep.centers = {ax.left.center, ax.right.center, ay.left.center, ay.right.center};
  rep.d_ll = distance(ax.left.center, ay.left.center);
  rep.d_rr = distance(ax.right.center, ay.right.center);
  rep.raw = raw_condition(rep.d_ll, rep.d_rr, &rep.boundary);
  switch (rep.raw) {
    case RawCondition::I:
      rep.condition = Condition::A;
      return rep;
    case RawCondition::II:
    case RawCondition::III:
      rep.condition = Condition::B;
      return rep;
    case RawCondition::IV:
      break;
  }
  if (auto arc = detect_single_arc(x, y, &rep.boundary)) {
    rep.condition = Condition::D;
    rep.subcase = DSubcase::SingleArc;
    rep.isolated_path = arc_path(x, {*arc});
    return rep;
  }
  if (auto two = detect_two_arc(x, y, &rep.boundary)) {
    rep.condition = Condition::D;
    rep.subcase = DSubcase::TwoArc;
    rep.isolated_path = arc_path(x, {two->first, two->second});
    return rep;
  }
  if (auto omega = detect_omega(x, y, resolution)) {
    rep.condition = Condition::D;
    rep.subcase = DSubcase::OmegaRegion;
    rep.omega = std::move(omega);
    return rep;
  }
  rep.condition = Condition::C;
  for (const auto & c : solve_all(x, y)) {
    if (c.feasible && has_long_component(c.path)) {
      rep.c_witness = c.path;
      return rep;
    }
  }
  // Detour: the minimal path preceded by a full loop on an adjacent circle of x.
  CsPath detour(x);
  detour.append_arc(Turn::Left, kTwoPi);
  detour.append_path(minimal_path(x, y).path);
  if (endpoint_residual(detour, y) < 1e-7 && has_long_component(detour)) {
    rep.c_witness = detour;
  } else {
    rep.c_witness_failed = true;
  }
  return rep;
}

}  // namespace bcp
