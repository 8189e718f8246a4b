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


// Parsing, JSON serialization and run configuration of the command-line tool.

#ifndef BCP_TOOLS__IO_HPP_
#define BCP_TOOLS__IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bcp/cs_path.hpp"
#include "bcp/error.hpp"
#include "bcp/geometry.hpp"
#include "bcp/lattice_oracle.hpp"
#include "json.hpp"

namespace bcp::cli
{

using json = nlohmann::ordered_json;

/// Angle in radians. Accepts a bare number (radians) or the suffixes "rad",
/// "deg", "d" and "pi" (multiples of pi). Throws ErrorCode::InvalidInput.
double parse_angle(std::string_view text);

/// "x,y,theta" with theta as in parse_angle.
DirectedPoint parse_pose(std::string_view text);

/// "a..b" or a single integer; a <= b is required.
std::pair<int, int> parse_range(std::string_view text);

json to_json(const DirectedPoint & x);
DirectedPoint pose_from_json(const json & j);

/// {"start": pose, "elements": [{"type": "arc", "orientation": "L", "sweep": s},
/// {"type": "line", "length": l}, ...]}; sweeps are unsigned.
json to_json(const CsPath & path);
CsPath path_from_json(const json & j);

/// {"step_bound": h, "samples": [[s, x, y, heading], ...]}.
json to_json(const SampledPath & path);
SampledPath sampled_from_json(const json & j);

json polyline_json(const std::vector<Vec2> & points);

/// A path document holds either form.
using PathInput = std::variant<CsPath, SampledPath>;
PathInput path_input_from_json(const json & j);

/// Reads a JSON file; parse failures become ErrorCode::InvalidInput with the
/// file name and the parser's line and column.
json read_json_file(const std::string & file);
void write_text_file(const std::string & file, const std::string & text);

struct RunConfig
{
  double kappa{1.0};
  double geom_tol{kGeomTol};
  double omega_resolution{0.01};
  double target_len{0.5};
  int p_steps{10};
  int loop_cap{8};
  LatticeConfig oracle;
  /// Empty falls back to BCP_OUTPUT_DIR, then the working directory.
  std::string output_dir;
  std::uint32_t seed{1};

  /// Throws ErrorCode::InvalidParameter naming the first offending field.
  void validate() const;
  std::string resolved_output_dir() const;
};

json to_json(const RunConfig & cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const json & j);

/// Seeded smooth path of the given length with |curvature| <= bound, built by
/// integrating a Catmull-Rom curvature profile through random knots.
SampledPath seeded_spline_path(
  std::uint32_t seed, const DirectedPoint & start, double length, double bound = 0.95,
  double step = 0.01);

json error_json(ErrorCode code, std::string_view message);

}  // namespace bcp::cli

#endif  // BCP_TOOLS__IO_HPP_
