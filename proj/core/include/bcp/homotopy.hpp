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


#ifndef BCP__HOMOTOPY_HPP_
#define BCP__HOMOTOPY_HPP_

#include <cstddef>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/error.hpp"
#include "bcp/geometry.hpp"
#include "bcp/winding.hpp"

namespace bcp
{

/// Breakpoints of a sampled path into short fragments of small heading variation.
struct Fragmentation
{
  /// Arc-length breakpoints; front() == 0 and back() == path length.
  std::vector<double> times;
  /// Sample index of every breakpoint.
  std::vector<std::size_t> indices;
  double max_fragment_length{0.0};
  /// Bound on the heading variation inside one fragment.
  double delta_max{0.0};

  std::size_t count() const {return times.empty() ? 0 : times.size() - 1;}
  double fragment_length(std::size_t i) const {return times.at(i + 1) - times.at(i);}
};

/// Cuts at samples so that every fragment has length <= target_len and
/// heading variation < delta_max.
/// Throws ErrorCode::InvalidParameter unless 0 < target_len < 1 and delta_max > 0,
/// or when a single sample step already exceeds either bound.
Fragmentation fragment(const SampledPath & path, double target_len, double delta_max = 0.2);

/// Samples of fragment i, rebased to s = 0.
SampledPath fragment_samples(const SampledPath & path, const Fragmentation & f, std::size_t i);

/// Closed unit disk at z minus the two open adjacent disks of z.
struct RegionRz
{
  DirectedPoint z;

  /// Boundary points within `tol` are members.
  bool contains(const Vec2 & p, double tol = kGeomTol) const;
};

/// Shortest CSC from a to b whose arcs each sweep less than pi.
/// Throws ErrorCode::FragmentInvalid when no such CSC exists.
CsPath replacement_path(const DirectedPoint & a, const DirectedPoint & b);

/// Local coordinates of the curvature analysis: the curve point sits at
/// distance u = x_offset + 1 from the origin of the radial projection.
struct LocalFrame
{
  DirectedPoint z;
  double x_offset{0.0};
  double theta_range{0.1};

  double u() const {return x_offset + 1.0;}
};

/// Frame for the radial projection about `origin`, with z on its positive
/// abscissa. Throws ErrorCode::InvalidParameter when |z - origin| < 1.
LocalFrame make_local_frame(const DirectedPoint & z, const Vec2 & origin, double theta_range = 0.1);

struct RadialCurvature
{
  double a_p{0.0};
  double b_p{0.0};
  double kappa{0.0};
  double dkappa_dp{0.0};
};

/// Second-order curvature model of the radially projected unit circle.
/// `bend` = -1 is the circle centered at (x_offset, 0), curving away from the
/// projection origin; `bend` = +1 is its mirror centered at (x_offset + 2, 0).
/// kappa = 2B / (1 + (2B theta)^2)^(3/2) and dkappa_dp is its exact p-derivative.
RadialCurvature radial_curvature(double p, double theta, double x_offset, double bend = -1.0);

/// Closed-form slope 1 + x/(2(x+1)) + x/(2(x+1)^2) stated for dkappa/dp at (0,0).
double reference_radial_slope(double x_offset);

/// Curvature at theta = 0 of the second-order image as a graph over its
/// ordinate, 2B / A^2, which accounts for the reparameterization by A.
double graph_curvature(double p, double x_offset, double bend = -1.0);

/// Sample-wise (1 - p + p / |q|) q about `center`; headings from central
/// differences, arc length from chords.
/// Throws ErrorCode::SingularProjection when a sample is within kGeomTol of center,
/// ErrorCode::InvalidParameter for p outside [0, 1].
SampledPath radial_step(const SampledPath & path, const Vec2 & center, double p);

/// Sample-wise (1 - p)(u, v) + p (0, v) in the frame whose u axis points along
/// the heading of `axis`; same recomputation of headings and arc length.
SampledPath orthogonal_step(const SampledPath & path, const DirectedPoint & axis, double p);

struct FrameInfo
{
  double p{0.0};
  int winding{0};
  double max_curvature{0.0};
  double start_residual{0.0};
  double end_residual{0.0};
  bool valid{false};
};

/// Sequence of full paths with fixed endpoints, one per homotopy parameter.
struct DeformationTrace
{
  std::vector<SampledPath> frames;
  std::vector<FrameInfo> info;

  bool winding_constant() const;
  bool all_valid() const;
  double max_curvature() const;
};

/// Raised when a frame breaks the curvature bound; carries the frame.
class CurvatureViolationError : public Error
{
public:
  CurvatureViolationError(const std::string & what, SampledPath frame, double p)
  : Error(ErrorCode::CurvatureViolation, what), frame_(std::move(frame)), p_(p) {}

  const SampledPath & frame() const {return frame_;}
  double p() const {return p_;}

private:
  SampledPath frame_;
  double p_;
};

struct DeformOptions
{
  /// Frames at p = i / (p_steps - 1).
  int p_steps{10};
  double tol_frame{0.02};
};

/// Orthogonal blend of the fragment onto its replacement: both are graphs over
/// the chord from the fragment start to its end, and the frame at p has
/// ordinate (1 - p) f0 + p f1 at every fragment sample.
/// A fragment that already matches its replacement gives a single frame.
/// Throws ErrorCode::FragmentInvalid if either curve is not a graph over the chord
/// and CurvatureViolationError when a frame exceeds 1 + tol_frame.
DeformationTrace deform_fragment_to_replacement(
  const SampledPath & fragment, const CsPath & replacement, const DeformOptions & opts = {});

struct NormalizeOptions
{
  double target_len{0.5};
  double delta_max{0.2};
  DeformOptions deform;
  /// Number of times the fragmentation is halved after a curvature violation.
  int retry_cap{3};
};

struct NormalizeResult
{
  CsPath path;
  Fragmentation fragmentation;
  /// Frames of the whole path; fragment frames with equal p are joined.
  DeformationTrace trace;
};

/// Fragment, replace and deform every fragment; the result is the concatenation
/// of the replacements. Throws ErrorCode::InvalidInput when the input fails the
/// curvature check at tol_frame.
NormalizeResult normalize_to_cs(const SampledPath & path, const NormalizeOptions & opts = {});

/// Merges same-circle arcs and collinear lines, then replaces windows of four or
/// more components by the minimal path of the same winding when that has fewer
/// components and is not longer, until nothing changes.
CsPath reduce_complexity(const CsPath & path, int loop_cap = 8);

/// Inserts a counterclockwise then a clockwise full loop at arc length s.
/// Throws ErrorCode::InvalidAxis when s is within kGeomTol of either end.
CsPath type_i(const CsPath & path, double s);

/// Removes the first adjacent pair of opposite full loops and merges the
/// split component back. Throws ErrorCode::InvalidInput if there is none.
CsPath collapse_type_i(const CsPath & path);

/// Replaces line `index` of length l by the bump
/// C(a) S(m) C'(2a) S(m) C(a) with 4 sin a + 2 m cos a = l reaching lateral
/// distance |depth|; positive depth pushes to the left of the segment.
/// Throws ErrorCode::InvalidParameter if `index` is not a line and
/// ErrorCode::PushInfeasible when no bump reaches the depth.
CsPath type_ii(const CsPath & path, std::size_t index, double depth);

/// Largest depth type_ii can reach on a segment of length l (unbounded above 4).
double max_push_depth(double l);

struct SkewOptions
{
  double step{0.05};
  double tol_frame{0.02};
};

/// RSL to LSR through a figure eight inserted at the middle of S whose loops are
/// slid to the start and the end of the path; the last frame is the LSR path.
/// Throws ErrorCode::InvalidInput unless the word is RSL and
/// ErrorCode::SkewInfeasible when a loop would meet an end circle, the LSR path
/// does not exist or its winding differs.
DeformationTrace skew_homotopy(const CsPath & rsl, const SkewOptions & opts = {});

}  // namespace bcp

#endif  // BCP__HOMOTOPY_HPP_
