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

#include "bcp/geometry.hpp"

#include <cmath>

namespace bcp
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InsufficientData: return "insufficient-data";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::ClassUnreachableAtCap: return "class-unreachable-at-cap";
    case ErrorCode::CorruptedLift: return "corrupted-lift";
    case ErrorCode::SingularProjection: return "singular-projection";
    case ErrorCode::CurvatureViolation: return "curvature-violation";
    case ErrorCode::FragmentInvalid: return "fragment-invalid";
    case ErrorCode::InvalidAxis: return "invalid-axis";
    case ErrorCode::PushInfeasible: return "push-infeasible";
    case ErrorCode::SkewInfeasible: return "skew-infeasible";
    case ErrorCode::OracleUnreachable: return "oracle-unreachable";
  }
  return "unknown";
}

bool is_domain_error(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidParameter:
    case ErrorCode::InsufficientData:
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidAxis:
      return false;
    default:
      return true;
  }
}

double normalize_angle(double angle)
{
  double a = std::fmod(angle, kTwoPi);
  if (a <= -kPi) {
    a += kTwoPi;
  } else if (a > kPi) {
    a -= kTwoPi;
  }
  return a;
}

double wrap_two_pi(double angle)
{
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) {
    a += kTwoPi;
  }
  if (a >= kTwoPi) {
    a -= kTwoPi;
  }
  return a;
}

DirectedPoint DirectedPoint::make(double x, double y, double heading)
{
  return make(Vec2{x, y}, heading);
}

DirectedPoint DirectedPoint::make(const Vec2 & p, double heading)
{
  if (!std::isfinite(heading) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw Error(ErrorCode::InvalidParameter, "directed point must be finite");
  }
  return DirectedPoint{p, normalize_angle(heading)};
}

bool DirectedPoint::valid() const
{
  return std::isfinite(point.x) && std::isfinite(point.y) && std::isfinite(heading) &&
         heading > -kPi && heading <= kPi;
}

Vec2 turning_center(const Vec2 & p, double heading, Turn t)
{
  return p + unit(heading + turn_sign(t) * kPi / 2.0);
}

AdjacentCircles adjacent_circles(const DirectedPoint & x)
{
  return AdjacentCircles{
    Circle{turning_center(x.point, x.heading, Turn::Left), 1.0, Turn::Left},
    Circle{turning_center(x.point, x.heading, Turn::Right), 1.0, Turn::Right}};
}

ScaledEndpoints scale_to_unit_curvature(
  const DirectedPoint & x, const DirectedPoint & y, double kappa)
{
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidParameter, "curvature bound must be positive");
  }
  return ScaledEndpoints{
    DirectedPoint{x.point * kappa, x.heading},
    DirectedPoint{y.point * kappa, y.heading},
    kappa};
}

DirectedPoint reflect_x(const DirectedPoint & x)
{
  return DirectedPoint::make(reflect_x(x.point), -x.heading);
}

double three_point_curvature(const Vec2 & a, const Vec2 & b, const Vec2 & c)
{
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);
  const double denom = ab * bc * ca;
  if (denom <= 0.0) {
    return 0.0;
  }
  return 2.0 * cross(b - a, c - a) / denom;
}

}  // namespace bcp
