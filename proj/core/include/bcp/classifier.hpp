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


#ifndef BCP__CLASSIFIER_HPP_
#define BCP__CLASSIFIER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/proximity.hpp"
#include "bcp/winding.hpp"

namespace bcp
{

enum class ClassKind { Free, NonFreeOmega, IsolatedPoint };

std::string_view to_string(ClassKind kind);

struct HomotopyClass
{
  ClassKind kind{ClassKind::Free};
  std::optional<CsPath> representative;
  /// Length of the representative; NaN when none could be built.
  double minimal_length{0.0};
  int winding{0};
  /// Set under an Omega region: every sample of the representative is in Omega.
  std::optional<bool> in_omega;
  /// Self-crossings of the open representative.
  int self_crossings{0};
  /// Why the representative is missing or inconsistent; empty when fine.
  std::string error;
};

struct ClassEntry
{
  int n{0};
  int count{1};
  std::vector<HomotopyClass> classes;
};

struct ClassificationReport
{
  DirectedPoint x;
  DirectedPoint y;
  ProximityReport proximity;
  ClosurePath closure;
  ClassIndex k_index;
  int k{0};
  std::vector<ClassEntry> entries;
  /// Non-fatal findings such as k outside {-1, 0, 1}.
  std::vector<std::string> diagnostics;

  const ClassEntry * entry(int n) const;
  /// Number of winding numbers with two classes.
  int double_class_count() const;
};

struct ClassifyOptions
{
  double resolution{0.01};
  int loop_cap{8};
};

/// Decision table: two classes at n = k under condition D, one free class
/// otherwise, each with its least-length representative.
/// Throws ErrorCode::InvalidParameter when n_min > n_max or k lies outside the range.
ClassificationReport classify_space(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure,
  int n_min, int n_max, const ClassifyOptions & opts = {});

/// Builds the pinned closure and uses the range [k - radius, k + radius].
ClassificationReport classify_space(
  const DirectedPoint & x, const DirectedPoint & y, int radius = 1,
  const ClassifyOptions & opts = {});

struct OmegaMembership
{
  bool in_omega{false};
  std::optional<std::size_t> first_exit;
};

/// Every sample inside the region, or the first one outside.
OmegaMembership membership_delta_omega(const SampledPath & path, const OmegaRegion & omega);

struct FreeWitness
{
  bool free{false};
  /// Path of the class longer than the requested bound.
  std::optional<CsPath> witness;
  /// Diameter of the Omega region bounding every path of a non-free class.
  std::optional<double> region_diameter;
  std::string rationale;
};

/// Free classes get a witness of length > bound built by repeated pushes of the
/// longest segment; without a segment longer than 4 a figure eight is inserted
/// and its loops are stretched into stadiums first.
FreeWitness is_free_class(
  const HomotopyClass & cls, const ClassificationReport & report, double bound = 100.0);

}  // namespace bcp

#endif  // BCP__CLASSIFIER_HPP_
