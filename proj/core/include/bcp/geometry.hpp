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

#ifndef BCP__GEOMETRY_HPP_
#define BCP__GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <optional>

#include "bcp/error.hpp"

namespace bcp
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance for coincidence and tangency predicates.
inline constexpr double kGeomTol = 1e-9;

struct Vec2
{
  double x{0.0};
  double y{0.0};

  constexpr Vec2 operator+(const Vec2 & o) const {return {x + o.x, y + o.y};}
  constexpr Vec2 operator-(const Vec2 & o) const {return {x - o.x, y - o.y};}
  constexpr Vec2 operator-() const {return {-x, -y};}
  constexpr Vec2 operator*(double k) const {return {x * k, y * k};}
  constexpr Vec2 operator/(double k) const {return {x / k, y / k};}
  constexpr Vec2 & operator+=(const Vec2 & o) {x += o.x; y += o.y; return *this;}
  constexpr Vec2 & operator-=(const Vec2 & o) {x -= o.x; y -= o.y; return *this;}
  constexpr bool operator==(const Vec2 &) const = default;
};

constexpr Vec2 operator*(double k, const Vec2 & v) {return v * k;}
constexpr double dot(const Vec2 & a, const Vec2 & b) {return a.x * b.x + a.y * b.y;}
constexpr double cross(const Vec2 & a, const Vec2 & b) {return a.x * b.y - a.y * b.x;}
inline double norm(const Vec2 & v) {return std::hypot(v.x, v.y);}
inline double distance(const Vec2 & a, const Vec2 & b) {return norm(b - a);}
/// Counterclockwise quarter turn.
constexpr Vec2 perp(const Vec2 & v) {return {-v.y, v.x};}
inline Vec2 unit(double angle) {return {std::cos(angle), std::sin(angle)};}
inline double angle_of(const Vec2 & v) {return std::atan2(v.y, v.x);}
inline Vec2 rotate(const Vec2 & v, double angle)
{
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Maps an angle into (-pi, pi].
double normalize_angle(double angle);
/// Maps an angle into [0, 2pi).
double wrap_two_pi(double angle);

enum class Turn { Left, Right };

/// +1 for counterclockwise (left) turning, -1 for clockwise.
constexpr int turn_sign(Turn t) {return t == Turn::Left ? 1 : -1;}
constexpr Turn opposite(Turn t) {return t == Turn::Left ? Turn::Right : Turn::Left;}
constexpr char turn_letter(Turn t) {return t == Turn::Left ? 'L' : 'R';}

/// A point of the tangent bundle: position plus unit heading.
struct DirectedPoint
{
  Vec2 point;
  /// Radians, normalized to (-pi, pi] by make().
  double heading{0.0};

  static DirectedPoint make(double x, double y, double heading);
  static DirectedPoint make(const Vec2 & p, double heading);
  Vec2 direction() const {return unit(heading);}
  bool valid() const;
};

struct Circle
{
  Vec2 center;
  double radius{1.0};
  Turn orientation{Turn::Left};
};

struct AdjacentCircles
{
  Circle left;
  Circle right;

  const Circle & get(Turn t) const {return t == Turn::Left ? left : right;}
};

/// Unit circles tangent to x on either side; left is counterclockwise, right clockwise.
AdjacentCircles adjacent_circles(const DirectedPoint & x);

/// Center of the unit circle tangent to a point travelling with `heading` and turning `t`.
Vec2 turning_center(const Vec2 & p, double heading, Turn t);

struct ScaledEndpoints
{
  DirectedPoint x;
  DirectedPoint y;
  double scale{1.0};

  /// Converts a length measured in unit-curvature space back to the caller's units.
  double unscale_length(double length) const {return length / scale;}
  Vec2 unscale_point(const Vec2 & p) const {return p / scale;}
};

/// Dilates the plane by kappa so that downstream work uses curvature bound 1.
/// Throws ErrorCode::InvalidParameter for kappa <= 0.
ScaledEndpoints scale_to_unit_curvature(
  const DirectedPoint & x, const DirectedPoint & y, double kappa);

/// Rotation about the origin followed by a translation.
struct RigidMotion
{
  double rotation{0.0};
  Vec2 translation;

  Vec2 apply(const Vec2 & p) const {return rotate(p, rotation) + translation;}
  DirectedPoint apply(const DirectedPoint & x) const
  {
    return DirectedPoint::make(apply(x.point), x.heading + rotation);
  }
};

/// Reflection across the x-axis.
DirectedPoint reflect_x(const DirectedPoint & x);
inline Vec2 reflect_x(const Vec2 & p) {return {p.x, -p.y};}

/// Three-point (circumscribed circle) signed curvature; zero for collinear points.
double three_point_curvature(const Vec2 & a, const Vec2 & b, const Vec2 & c);

}  // namespace bcp

#endif  // BCP__GEOMETRY_HPP_
