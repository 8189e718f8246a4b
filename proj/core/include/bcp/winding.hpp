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

#ifndef BCP__WINDING_HPP_
#define BCP__WINDING_HPP_

#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/dubins.hpp"

namespace bcp
{

struct TurningBreakpoint
{
  double s{0.0};
  double tau{0.0};
};

/// Piecewise linear lift of the heading along a cs path.
/// Counterclockwise turning is positive.
struct TurningMap
{
  std::vector<TurningBreakpoint> breakpoints;

  /// Linear interpolation between breakpoints, clamped to the ends.
  double at(double s) const;
  double total() const;
};

TurningMap turning_map(const CsPath & path);

struct RelativeWinding
{
  double rho{0.0};
  bool integral{false};
};

/// (tau(end) - z) / 2pi with tau(0) the start heading in (-pi, pi] and z the
/// final heading normalized to (-pi, pi].
RelativeWinding relative_winding(const CsPath & path);

/// Fixed path from y back to x that closes every path of the space.
struct ClosurePath
{
  CsPath path;
  DubinsWord word{DubinsWord::LSL};
  /// Always true once built; the closure never changes afterwards.
  bool pinned{false};
  /// The reversed endpoint condition had more than one minimizer.
  bool tie_broken{false};
};

/// Minimal path from y to x, ties broken by canonical word order.
ClosurePath make_closure(const DirectedPoint & x, const DirectedPoint & y);

/// Integer winding number of path + closure.
/// Throws ErrorCode::InvalidInput when the path does not join the closure's endpoints
/// and ErrorCode::CorruptedLift when the turning is not integral.
int winding_number(const CsPath & path, const ClosurePath & closure);
int winding_number(const SampledPath & path, const ClosurePath & closure);

struct ClassIndex
{
  int k{0};
  /// Diagnostic: k lies in {-1, 0, 1}.
  bool in_expected_range{true};
  /// Winding and length of every global minimizer.
  std::vector<std::pair<int, double>> minimizers;
};

/// Winding number of the global minimizer.
ClassIndex class_index_k(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure);

}  // namespace bcp

#endif  // BCP__WINDING_HPP_
