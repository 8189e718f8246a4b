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

#ifndef BCP__DUBINS_HPP_
#define BCP__DUBINS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/geometry.hpp"

namespace bcp
{

enum class DubinsWord { LSL, RSR, LSR, RSL, LRL, RLR };

/// Tie-break order used whenever several words share the least length.
inline constexpr std::array<DubinsWord, 6> kCanonicalWordOrder{
  DubinsWord::LSL, DubinsWord::RSR, DubinsWord::LSR,
  DubinsWord::RSL, DubinsWord::LRL, DubinsWord::RLR};

std::string_view to_string(DubinsWord word);
bool is_ccc(DubinsWord word);

struct DubinsCandidate
{
  DubinsWord word{DubinsWord::LSL};
  CsPath path;
  double length{0.0};
  /// The tangent construction exists.
  bool feasible{false};
  /// CSC words, or CCC words whose middle arc exceeds pi.
  bool minimizer_form{false};
  /// Middle sweep of CCC words, zero otherwise.
  double middle_sweep{0.0};
  /// Set on minimal_path results when another word ties within kGeomTol.
  bool multiple_minimizers{false};

  /// Word of the stored path, e.g. "LSR", or "S-degenerate CSC" when components vanish.
  std::string label() const;
};

/// Evaluates all six words. Infeasible words are returned with feasible = false.
std::vector<DubinsCandidate> solve_all(const DirectedPoint & x, const DirectedPoint & y);

/// Every least-length candidate (within kGeomTol), in canonical word order.
std::vector<DubinsCandidate> minimal_paths(const DirectedPoint & x, const DirectedPoint & y);

/// First entry of minimal_paths().
DubinsCandidate minimal_path(const DirectedPoint & x, const DirectedPoint & y);

/// Where extra full loops were inserted in an in-class candidate.
enum class LoopPlacement { None, FirstArc, MiddleArc, LastArc, AtStart, SegmentMiddle, AtEnd };

std::string_view to_string(LoopPlacement placement);

/// Arc added before (CCSC) or after (CSCC) the Dubins word, turning opposite to
/// the adjacent arc of the word, with its sweep optimized per winding number.
enum class ExtraArc { None, Leading, Trailing };

std::string_view to_string(ExtraArc extra);

struct InClassCandidate
{
  DubinsWord base_word{DubinsWord::LSL};
  ExtraArc extra_arc{ExtraArc::None};
  LoopPlacement placement{LoopPlacement::None};
  int loops{0};
  CsPath path;
  double length{0.0};
  int winding{0};
};

/// Every Dubins word, and every four-component CCSC or CSCC form, with
/// |winding change| <= loop_cap full loops in each placement whose closed
/// concatenation with `closure` has winding number n.
std::vector<InClassCandidate> in_class_candidates(
  const DirectedPoint & x, const DirectedPoint & y, const CsPath & closure, int n,
  int loop_cap = 8);

/// Least-length candidate of in_class_candidates().
/// Throws ErrorCode::ClassUnreachableAtCap when no candidate reaches n.
CsPath minimal_path_in_class(
  const DirectedPoint & x, const DirectedPoint & y, const CsPath & closure, int n,
  int loop_cap = 8);

/// Total turning of path followed by closure divided by 2pi, rounded.
/// Throws ErrorCode::CorruptedLift when the quotient is not integral within 1e-9.
int closed_winding(const CsPath & path, const CsPath & closure);

}  // namespace bcp

#endif  // BCP__DUBINS_HPP_
