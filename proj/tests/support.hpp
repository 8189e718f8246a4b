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

// Shared generators and independent oracles for the test binaries.

#ifndef BCP_TESTS__SUPPORT_HPP_
#define BCP_TESTS__SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

namespace bcp::testing
{

inline DirectedPoint random_point(std::mt19937 & rng, double half_width = 6.0)
{
  std::uniform_real_distribution<double> pos(-half_width, half_width);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const double px = pos(rng);
  const double py = pos(rng);
  return DirectedPoint::make(px, py, ang(rng));
}

/// L(a1) S(l1) R(a2) S(l2) L(a3) with random amounts.
inline CsPath random_cscsc(std::mt19937 & rng, const DirectedPoint & start)
{
  std::uniform_real_distribution<double> sweep(0.1, 2.5);
  std::uniform_real_distribution<double> seg(0.2, 3.0);
  CsPath p(start);
  p.append_arc(Turn::Left, sweep(rng));
  p.append_line(seg(rng));
  p.append_arc(Turn::Right, sweep(rng));
  p.append_line(seg(rng));
  p.append_arc(Turn::Left, sweep(rng));
  return p;
}

/// Smooth path whose curvature is a clamped cubic spline through random knots,
/// integrated with a fine midpoint rule.
inline SampledPath random_spline_path(
  std::mt19937 & rng, const DirectedPoint & start, double length, double step = 0.01)
{
  std::uniform_real_distribution<double> kdist(-1.3, 1.3);
  const int knots = 6;
  std::vector<double> k(knots);
  for (auto & v : k) {
    v = kdist(rng);
  }
  auto curvature = [&](double s) {
      // Catmull-Rom interpolation of the knot values, clamped to the unit bound.
      const double u = s / length * (knots - 1);
      const int i = std::clamp(static_cast<int>(u), 0, knots - 2);
      const double t = u - i;
      const double p0 = k[std::max(i - 1, 0)];
      const double p1 = k[i];
      const double p2 = k[i + 1];
      const double p3 = k[std::min(i + 2, knots - 1)];
      const double v = 0.5 * ((2 * p1) + (-p0 + p2) * t + (2 * p0 - 5 * p1 + 4 * p2 - p3) * t * t +
        (-p0 + 3 * p1 - 3 * p2 + p3) * t * t * t);
      return std::clamp(v, -1.0, 1.0);
    };
  SampledPath out;
  out.step_bound = step;
  const int n = static_cast<int>(std::ceil(length / step));
  const double h = length / n;
  Vec2 p = start.point;
  double heading = start.heading;
  out.samples.push_back({0.0, p, heading});
  const int sub = 20;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < sub; ++j) {
      const double s = i * h + (j + 0.5) * h / sub;
      const double mid_heading = heading + curvature(s) * h / sub / 2.0;
      p += unit(mid_heading) * (h / sub);
      heading += curvature(s) * h / sub;
    }
    out.samples.push_back({(i + 1) * h, p, heading});
  }
  return out;
}

/// Number of proper crossings between non-adjacent segments of a dense polyline
/// of the closed curve. Independent of the analytic contact computation.
inline int polyline_crossings(const CsPath & closed_curve, double step)
{
  const auto smp = sample_path(closed_curve, step).samples;
  std::vector<Vec2> pts;
  for (const auto & s : smp) {
    pts.push_back(s.position);
  }
  const std::size_t n = pts.size() - 1;
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) {
        continue;
      }
      const Vec2 a = pts[i];
      const Vec2 b = pts[i + 1];
      const Vec2 c = pts[j];
      const Vec2 d = pts[j + 1];
      const double d1 = cross(b - a, c - a);
      const double d2 = cross(b - a, d - a);
      const double d3 = cross(d - c, a - c);
      const double d4 = cross(d - c, b - c);
      if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace bcp::testing

#endif  // BCP_TESTS__SUPPORT_HPP_
