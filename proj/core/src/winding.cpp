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

#include "bcp/winding.hpp"

#include <algorithm>
#include <cmath>

namespace bcp
{

double TurningMap::at(double s) const
{
  if (breakpoints.empty()) {
    return 0.0;
  }
  if (s <= breakpoints.front().s) {
    return breakpoints.front().tau;
  }
  const auto it = std::lower_bound(
    breakpoints.begin(), breakpoints.end(), s,
    [](const TurningBreakpoint & b, double v) {return b.s < v;});
  if (it == breakpoints.end()) {
    return breakpoints.back().tau;
  }
  const auto & hi = *it;
  const auto & lo = *(it - 1);
  if (hi.s <= lo.s) {
    return hi.tau;
  }
  return lo.tau + (hi.tau - lo.tau) * (s - lo.s) / (hi.s - lo.s);
}

double TurningMap::total() const
{
  return breakpoints.empty() ? 0.0 : breakpoints.back().tau - breakpoints.front().tau;
}

TurningMap turning_map(const CsPath & path)
{
  TurningMap m;
  double s = 0.0;
  double tau = path.start().heading;
  m.breakpoints.push_back({s, tau});
  for (const auto & el : path.elements()) {
    s += el.length();
    tau += el.turning();
    m.breakpoints.push_back({s, tau});
  }
  return m;
}

RelativeWinding relative_winding(const CsPath & path)
{
  const double tau_end = path.start().heading + path.total_turning();
  const double z = normalize_angle(tau_end);
  RelativeWinding r;
  r.rho = (tau_end - z) / kTwoPi;
  r.integral = std::abs(r.rho - std::round(r.rho)) < 1e-9;
  return r;
}

ClosurePath make_closure(const DirectedPoint & x, const DirectedPoint & y)
{
  const auto mins = minimal_paths(y, x);
  ClosurePath c;
  c.path = mins.front().path;
  c.word = mins.front().word;
  c.pinned = true;
  c.tie_broken = mins.size() > 1;
  return c;
}

namespace
{

constexpr double kJoinTol = 1e-6;

void check_joins(const DirectedPoint & start, const DirectedPoint & end, const ClosurePath & c)
{
  const DirectedPoint cs = c.path.start();
  const DirectedPoint ce = c.path.end();
  if (distance(end.point, cs.point) > kJoinTol ||
    std::abs(normalize_angle(end.heading - cs.heading)) > kJoinTol ||
    distance(start.point, ce.point) > kJoinTol ||
    std::abs(normalize_angle(start.heading - ce.heading)) > kJoinTol)
  {
    throw Error(ErrorCode::InvalidInput, "path endpoints do not match the closure");
  }
}

int integral_winding(double turning)
{
  const double w = turning / kTwoPi;
  const double r = std::round(w);
  if (std::abs(w - r) > 1e-9) {
    throw Error(ErrorCode::CorruptedLift, "closed turning is not a multiple of 2pi");
  }
  return static_cast<int>(r);
}

}  // namespace

int winding_number(const CsPath & path, const ClosurePath & closure)
{
  check_joins(path.start(), path.end(), closure);
  return integral_winding(path.total_turning() + closure.path.total_turning());
}

int winding_number(const SampledPath & path, const ClosurePath & closure)
{
  if (path.samples.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "sampled path needs at least 2 samples");
  }
  check_joins(path.start(), path.end(), closure);
  // Sampled headings carry the endpoint residual; remove it before the integrality test.
  const double turning = path.total_turning();
  const double mismatch =
    normalize_angle(closure.path.start().heading - path.end().heading) +
    normalize_angle(path.start().heading - closure.path.end().heading);
  return integral_winding(turning + closure.path.total_turning() + mismatch);
}

ClassIndex class_index_k(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure)
{
  ClassIndex out;
  for (const auto & m : minimal_paths(x, y)) {
    out.minimizers.emplace_back(winding_number(m.path, closure), m.length);
  }
  out.k = out.minimizers.front().first;
  out.in_expected_range = std::abs(out.k) <= 1;
  return out;
}

}  // namespace bcp
