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

#ifndef BCP__PROXIMITY_HPP_
#define BCP__PROXIMITY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

namespace bcp
{

/// Distance relations (i)-(iv) between same-orientation adjacent circle centers.
enum class RawCondition { I, II, III, IV };
enum class Condition { A, B, C, D };
enum class DSubcase { SingleArc, TwoArc, OmegaRegion };

std::string_view to_string(RawCondition c);
std::string_view to_string(Condition c);
std::string_view to_string(DSubcase c);

/// Grid mask of the bounded free region trapped between the four adjacent disks.
class OmegaRegion
{
public:
  OmegaRegion() = default;
  OmegaRegion(
    Vec2 origin, double resolution, int nx, int ny, std::vector<std::uint8_t> mask,
    DirectedPoint x, DirectedPoint y, std::array<Vec2, 4> centers);

  Vec2 box_min() const {return origin_;}
  Vec2 box_max() const {return origin_ + Vec2{nx_ * resolution_, ny_ * resolution_};}
  double resolution() const {return resolution_;}
  int nx() const {return nx_;}
  int ny() const {return ny_;}
  double area() const;
  std::size_t cell_count() const;
  bool cell(int i, int j) const;
  Vec2 cell_center(int i, int j) const;
  const std::vector<std::uint8_t> & mask() const {return mask_;}
  /// Distance within which the cusps at x and y count as attached to the region.
  double attach_radius() const;
  /// Largest distance between two mask cells (bounds the length scale of the region).
  double diameter() const;

  /// Point test: outside the open disks and either in the mask with one-cell
  /// dilation or inside the cusp at x (ahead of x) or at y (behind y).
  bool contains(const Vec2 & p) const;

private:
  Vec2 origin_;
  double resolution_{0.0};
  int nx_{0};
  int ny_{0};
  std::vector<std::uint8_t> mask_;
  DirectedPoint x_;
  DirectedPoint y_;
  std::array<Vec2, 4> centers_{};
};

struct ArcWitness
{
  Circle circle;
  double sweep{0.0};
};

struct ProximityReport
{
  /// c_l(x), c_r(x), c_l(y), c_r(y).
  std::array<Vec2, 4> centers{};
  double d_ll{0.0};
  double d_rr{0.0};
  RawCondition raw{RawCondition::I};
  Condition condition{Condition::A};
  std::optional<DSubcase> subcase;
  std::optional<OmegaRegion> omega;
  /// Arc or two-arc path of the isolated-point subcases.
  std::optional<CsPath> isolated_path;
  /// Condition C: a path with an arc of sweep >= pi or a segment of length >= 4.
  std::optional<CsPath> c_witness;
  /// Condition C was assigned but no witness could be built.
  bool c_witness_failed{false};
  /// Some compared distance or sweep lies within kGeomTol of its threshold.
  bool boundary{false};
};

/// Raw relation from the two distances; ">= 4" is exact, ties flag `boundary`.
RawCondition raw_condition(double d_ll, double d_rr, bool * boundary = nullptr);

/// y reached from x along one adjacent circle of x with sweep in (0, pi).
std::optional<ArcWitness> detect_single_arc(
  const DirectedPoint & x, const DirectedPoint & y, bool * boundary = nullptr);

/// Two oppositely oriented tangent arcs, each of sweep in (0, pi).
std::optional<std::pair<ArcWitness, ArcWitness>> detect_two_arc(
  const DirectedPoint & x, const DirectedPoint & y, bool * boundary = nullptr);

/// Flood fill of the complement of the four open adjacent disks.
/// Throws ErrorCode::InvalidParameter for resolution <= 0.
std::optional<OmegaRegion> detect_omega(
  const DirectedPoint & x, const DirectedPoint & y, double resolution);

/// Full classification; `resolution` is the grid step of the region search.
ProximityReport classify(
  const DirectedPoint & x, const DirectedPoint & y, double resolution = 0.01);

/// Path realizing an arc witness list from x.
CsPath arc_path(const DirectedPoint & x, const std::vector<ArcWitness> & arcs);

}  // namespace bcp

#endif  // BCP__PROXIMITY_HPP_
