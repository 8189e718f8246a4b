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


#ifndef BCP__LATTICE_ORACLE_HPP_
#define BCP__LATTICE_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"
#include "bcp/winding.hpp"

namespace bcp
{

/// Discretization of the brute-force search. Primitives are a left arc, a
/// straight and a right arc, all of length 2pi / heading_bins. Poses keep exact
/// positions; one pose per (cell, heading) is expanded.
struct LatticeConfig
{
  /// Resolution of the search; pruning cells have side position_step / 2.
  double position_step{0.1};
  /// 0 derives round(2pi / (1.5 position_step)).
  int heading_bins{0};
  /// Position tolerance of the goal, 0 derives position_step. The heading
  /// tolerance is half a bin.
  double goal_tolerance{0.0};
  /// Padding of the search box around the two endpoints.
  double margin{4.0};
  /// Best-first search on the distance and turning lower bound. Faster, but
  /// cell pruning makes it inexact. Uniform-cost when false.
  bool use_heuristic{false};
  std::size_t max_expansions{200'000'000};
  /// C in slack = C (position_step + goal_tolerance).
  double slack_constant{2.0};

  int bins() const;
  double primitive_length() const;
  double tolerance() const {return goal_tolerance > 0.0 ? goal_tolerance : position_step;}
  double slack() const {return slack_constant * (position_step + tolerance());}
};

struct OracleResult
{
  /// Length of the repaired path, which joins x to y exactly.
  double length{0.0};
  /// Number of primitives times the primitive length, before repair.
  double lattice_length{0.0};
  CsPath path;
  std::vector<Vec2> polyline;
  /// The endpoint repair converged.
  bool repaired{false};
  double residual{0.0};
  /// Lattice turning in units of 2pi / bins, relative to the start heading.
  long turning_bins{0};
  std::size_t expansions{0};
  double runtime_seconds{0.0};
};

/// Shortest lattice path to the goal tolerance, then repaired onto y.
/// Throws ErrorCode::OracleUnreachable when the search exhausts the box or the
/// expansion budget, ErrorCode::InvalidParameter for non-positive steps.
OracleResult shortest_path(
  const DirectedPoint & x, const DirectedPoint & y, const LatticeConfig & cfg = {});

/// Same search over lifted headings; the goal also requires the total turning of
/// winding number n against `closure`.
OracleResult shortest_path_in_class(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure, int n,
  const LatticeConfig & cfg = {});

}  // namespace bcp

#endif  // BCP__LATTICE_ORACLE_HPP_
