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

#ifndef BCP__CS_PATH_HPP_
#define BCP__CS_PATH_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "bcp/geometry.hpp"

namespace bcp
{

/// One component of a cs path: an arc of a unit circle or a line segment.
///
/// Arcs are stored by circle, polar start angle about the center and a signed
/// sweep (positive counterclockwise). Lines are stored by their endpoints.
struct ArcSegment
{
  enum class Kind { Arc, Line };

  Kind kind{Kind::Line};
  Circle circle;
  double start_angle{0.0};
  double sweep{0.0};
  Vec2 start;
  Vec2 end;
  /// Length of a line as constructed, so steps() reproduce their input exactly.
  double extent{0.0};

  static ArcSegment arc(const Circle & circle, double start_angle, double sweep);
  static ArcSegment line(const Vec2 & start, const Vec2 & end);

  bool is_arc() const {return kind == Kind::Arc;}
  double length() const;
  /// Signed heading change along the element.
  double turning() const {return is_arc() ? sweep : 0.0;}
  Turn turn() const {return sweep >= 0.0 ? Turn::Left : Turn::Right;}
  Vec2 start_point() const;
  Vec2 end_point() const;
  /// Heading at the start; arcs report the tangent of their circle.
  double start_heading() const;
  /// Position at local arc length s in [0, length()].
  Vec2 position_at(double s) const;
  /// Heading at local arc length s, lifted from start_heading().
  double heading_at(double s) const;
  /// Signed curvature: +1 left arc, -1 right arc, 0 line.
  double curvature() const;
};

/// Relative description of a component, independent of where it starts.
struct CsStep
{
  ArcSegment::Kind kind{ArcSegment::Kind::Line};
  Turn turn{Turn::Left};
  /// Unsigned sweep for arcs, length for lines.
  double amount{0.0};
};

/// Finite concatenation of unit arcs and line segments that is C^1 at the joints.
class CsPath
{
public:
  /// Components shorter than this are dropped when appended.
  static constexpr double kDropLength = 1e-12;
  /// Largest sweep a single stored arc may have.
  static constexpr double kMaxSweep = 2.0 * kTwoPi;

  CsPath() = default;
  explicit CsPath(const DirectedPoint & start);

  /// Builds from absolute elements, checking G^1 continuity within kGeomTol.
  static CsPath from_elements(const DirectedPoint & start, std::vector<ArcSegment> elements);
  static CsPath from_steps(const DirectedPoint & start, std::span<const CsStep> steps);

  CsPath & append_arc(Turn turn, double sweep);
  CsPath & append_line(double length);
  CsPath & append(const CsStep & step);
  /// Appends `other`, which must start where this path ends.
  CsPath & append_path(const CsPath & other);

  const DirectedPoint & start() const {return start_;}
  DirectedPoint end() const;
  /// Lifted end heading: start heading plus total turning.
  double end_heading_lift() const {return end_heading_;}
  const std::vector<ArcSegment> & elements() const {return elements_;}
  std::vector<CsStep> steps() const;
  bool empty() const {return elements_.empty();}
  std::size_t complexity() const {return elements_.size();}

  double length() const;
  double total_turning() const;
  /// Position and lifted heading at global arc length s (clamped to [0, length]).
  Vec2 position_at(double s) const;
  double heading_at(double s) const;
  /// Index of the element containing s and the local offset into it.
  std::pair<std::size_t, double> locate(double s) const;

  /// Merges adjacent arcs of the same circle/orientation and collinear lines.
  CsPath canonical() const;
  /// Word of arc/line letters, e.g. "LSR".
  std::string word() const;

private:
  DirectedPoint start_;
  Vec2 end_point_;
  double end_heading_{0.0};
  std::vector<ArcSegment> elements_;
};

CsPath concat(const CsPath & a, const CsPath & b);
double length(const CsPath & path);
double endpoint_residual(const CsPath & path, const DirectedPoint & target);

struct PathSample
{
  double s{0.0};
  Vec2 position;
  /// Lifted heading (not wrapped), radians.
  double heading{0.0};
};

/// Arc-length sampled C^1 path; the general input to validation and normalization.
struct SampledPath
{
  std::vector<PathSample> samples;
  double step_bound{0.0};

  double length() const {return samples.empty() ? 0.0 : samples.back().s;}
  DirectedPoint start() const;
  DirectedPoint end() const;
  /// Heading change from first to last sample, unwrapping jumps between samples.
  double total_turning() const;
  /// Samples with s in [s0, s1], rebased so the first has s = 0.
  SampledPath slice(std::size_t first, std::size_t last) const;
};

/// Samples with spacing <= step; every element junction is a sample.
/// Throws ErrorCode::InvalidParameter for step <= 0.
SampledPath sample_path(const CsPath & path, double step);

struct ValidityReport
{
  bool valid{false};
  double unit_speed_residual{0.0};
  double max_curvature{0.0};
  std::vector<std::size_t> violations;
  double start_residual{0.0};
  double end_residual{0.0};
};

/// Three-point curvature check of a sampled path against the unit bound.
/// Endpoint residuals are checked (tol 1e-6) when the declared endpoints are given.
ValidityReport validate_bounded_curvature(
  const SampledPath & path, double tol,
  const std::optional<DirectedPoint> & start = std::nullopt,
  const std::optional<DirectedPoint> & end = std::nullopt);

/// Transversal self-intersections of the closed curve path + closure.
/// Tangential contacts count once when the branches swap sides across the
/// contact (the perturbed curve crosses) and zero otherwise.
/// Throws ErrorCode::InvalidInput if the concatenation is not closed.
int transversal_crossings(const CsPath & path, const CsPath & closure);

/// Self-intersections of an open path, same rule, ignoring its two endpoints.
int self_crossings(const CsPath & path);

}  // namespace bcp

#endif  // BCP__CS_PATH_HPP_
