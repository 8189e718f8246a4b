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


#include "bcp/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcp/dubins.hpp"
#include "bcp/homotopy.hpp"

namespace bcp
{

std::string_view to_string(ClassKind kind)
{
  switch (kind) {
    case ClassKind::Free: return "Free";
    case ClassKind::NonFreeOmega: return "NonFreeOmega";
    case ClassKind::IsolatedPoint: return "IsolatedPoint";
  }
  return "?";
}

const ClassEntry * ClassificationReport::entry(int n) const
{
  for (const auto & e : entries) {
    if (e.n == n) {
      return &e;
    }
  }
  return nullptr;
}

int ClassificationReport::double_class_count() const
{
  return static_cast<int>(
    std::count_if(entries.begin(), entries.end(), [](const ClassEntry & e) {return e.count == 2;}));
}

OmegaMembership membership_delta_omega(const SampledPath & path, const OmegaRegion & omega)
{
  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    if (!omega.contains(path.samples[i].position)) {
      return {false, i};
    }
  }
  return {true, std::nullopt};
}

namespace
{

constexpr double kMembershipStep = 0.01;

HomotopyClass make_class(
  ClassKind kind, const CsPath & rep, const ClosurePath & closure,
  const std::optional<OmegaRegion> & omega)
{
  HomotopyClass c;
  c.kind = kind;
  c.representative = rep;
  c.minimal_length = rep.length();
  c.winding = winding_number(rep, closure);
  c.self_crossings = self_crossings(rep);
  if (omega) {
    c.in_omega = rep.length() > 0.0 &&
      membership_delta_omega(sample_path(rep, kMembershipStep), *omega).in_omega;
  }
  return c;
}

HomotopyClass failed_class(ClassKind kind, const std::string & why)
{
  HomotopyClass c;
  c.kind = kind;
  c.minimal_length = std::numeric_limits<double>::quiet_NaN();
  c.error = why;
  return c;
}

// In-class candidates of winding n and a figure eight on the global minimizer,
// which always leaves a small region, ordered by length.
std::vector<CsPath> free_candidates(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure, int n,
  int loop_cap)
{
  std::vector<CsPath> out;
  for (auto & c : in_class_candidates(x, y, closure.path, n, loop_cap)) {
    out.push_back(std::move(c.path));
  }
  const auto m = minimal_path(x, y).path;
  if (m.length() > 2.0 * kGeomTol && winding_number(m, closure) == n) {
    out.push_back(type_i(m, 0.5 * m.length()).canonical());
  }
  std::stable_sort(out.begin(), out.end(), [](const CsPath & a, const CsPath & b) {
      return a.length() < b.length();
    });
  return out;
}

bool same_path(const CsPath & a, const CsPath & b)
{
  return a.canonical().word() == b.canonical().word() &&
         std::abs(a.length() - b.length()) < kGeomTol;
}

ClassEntry double_entry(
  const ClassificationReport & rep, int n, const ClassifyOptions & opts)
{
  ClassEntry e;
  e.n = n;
  e.count = 2;
  const auto & prox = rep.proximity;
  const auto cands = free_candidates(rep.x, rep.y, rep.closure, n, opts.loop_cap);
  if (prox.subcase == DSubcase::OmegaRegion) {
    const auto m = minimal_path(rep.x, rep.y).path;
    auto omega_class = make_class(ClassKind::NonFreeOmega, m, rep.closure, prox.omega);
    if (!omega_class.in_omega.value_or(false)) {
      omega_class.error = "global minimizer leaves the Omega region";
    }
    e.classes.push_back(std::move(omega_class));
    for (const auto & c : cands) {
      if (!membership_delta_omega(sample_path(c, kMembershipStep), *prox.omega).in_omega) {
        e.classes.push_back(make_class(ClassKind::Free, c, rep.closure, prox.omega));
        return e;
      }
    }
    e.classes.push_back(failed_class(ClassKind::Free, "no candidate leaves the Omega region"));
    return e;
  }
  const CsPath iso = *prox.isolated_path;
  auto iso_class = make_class(ClassKind::IsolatedPoint, iso, rep.closure, std::nullopt);
  if (iso_class.winding != n) {
    iso_class.error = "isolated path has another winding number";
  }
  e.classes.push_back(std::move(iso_class));
  for (const auto & c : cands) {
    if (!same_path(c, iso)) {
      e.classes.push_back(make_class(ClassKind::Free, c, rep.closure, std::nullopt));
      return e;
    }
  }
  e.classes.push_back(failed_class(ClassKind::Free, "no candidate other than the isolated path"));
  return e;
}

ClassEntry single_entry(const ClassificationReport & rep, int n, const ClassifyOptions & opts)
{
  ClassEntry e;
  e.n = n;
  e.count = 1;
  try {
    const auto p = minimal_path_in_class(rep.x, rep.y, rep.closure.path, n, opts.loop_cap);
    e.classes.push_back(make_class(ClassKind::Free, p, rep.closure, rep.proximity.omega));
  } catch (const Error & err) {
    if (err.code() != ErrorCode::ClassUnreachableAtCap) {
      throw;
    }
    e.classes.push_back(failed_class(ClassKind::Free, err.what()));
  }
  return e;
}

}  // namespace

ClassificationReport classify_space(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure,
  int n_min, int n_max, const ClassifyOptions & opts)
{
  if (n_min > n_max) {
    throw Error(ErrorCode::InvalidParameter, "empty winding range");
  }
  ClassificationReport rep;
  rep.x = x;
  rep.y = y;
  rep.closure = closure;
  rep.proximity = classify(x, y, opts.resolution);
  rep.k_index = class_index_k(x, y, closure);
  rep.k = rep.k_index.k;
  if (rep.k < n_min || rep.k > n_max) {
    throw Error(
            ErrorCode::InvalidParameter,
            "winding range must contain k = " + std::to_string(rep.k));
  }
  if (!rep.k_index.in_expected_range) {
    rep.diagnostics.push_back("k = " + std::to_string(rep.k) + " lies outside {-1, 0, 1}");
  }
  if (rep.k_index.minimizers.size() > 1) {
    for (const auto & [w, len] : rep.k_index.minimizers) {
      if (w != rep.k) {
        rep.diagnostics.push_back(
          "a minimizer of equal length has winding " + std::to_string(w));
      }
    }
  }
  const bool two = rep.proximity.condition == Condition::D;
  for (int n = n_min; n <= n_max; ++n) {
    rep.entries.push_back(
      two && n == rep.k ? double_entry(rep, n, opts) : single_entry(rep, n, opts));
  }
  if (two && rep.proximity.subcase == DSubcase::OmegaRegion) {
    const auto & c = rep.entry(rep.k)->classes.front();
    if (std::abs(c.winding) != 1) {
      rep.diagnostics.push_back("Omega representative winding is not +-1");
    }
  }
  return rep;
}

ClassificationReport classify_space(
  const DirectedPoint & x, const DirectedPoint & y, int radius, const ClassifyOptions & opts)
{
  const auto closure = make_closure(x, y);
  const int k = class_index_k(x, y, closure).k;
  return classify_space(x, y, closure, k - radius, k + radius, opts);
}

namespace
{

// Each full loop becomes C(pi) S(d) C(pi) S(d), which keeps its turning.
CsPath stretch_loops(const CsPath & path, double d)
{
  std::vector<CsStep> out;
  for (const auto & st : path.steps()) {
    if (st.kind == ArcSegment::Kind::Arc && std::abs(st.amount - kTwoPi) < 1e-9) {
      const CsStep half{ArcSegment::Kind::Arc, st.turn, kPi};
      const CsStep side{ArcSegment::Kind::Line, Turn::Left, d};
      out.insert(out.end(), {half, side, half, side});
    } else {
      out.push_back(st);
    }
  }
  return CsPath::from_steps(path.start(), out);
}

std::optional<std::size_t> longest_line(const CsPath & p)
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < p.complexity(); ++i) {
    const auto & e = p.elements()[i];
    if (!e.is_arc() && (!best || e.length() > p.elements()[*best].length())) {
      best = i;
    }
  }
  return best;
}

}  // namespace

FreeWitness is_free_class(
  const HomotopyClass & cls, const ClassificationReport & report, double bound)
{
  FreeWitness w;
  if (cls.kind == ClassKind::IsolatedPoint) {
    w.rationale = "the isolated path admits no deformation";
    return w;
  }
  if (cls.kind == ClassKind::NonFreeOmega) {
    w.rationale = "paths in the Omega region have bounded length";
    if (report.proximity.omega) {
      w.region_diameter = report.proximity.omega->diameter();
    }
    return w;
  }
  if (!cls.representative) {
    w.rationale = "no representative: " + cls.error;
    return w;
  }
  CsPath base = cls.representative->canonical();
  auto line = longest_line(base);
  constexpr double kStadiumSide = 5.0;
  if (!line || base.elements()[*line].length() <= 4.0) {
    if (base.length() <= 2.0 * kGeomTol) {
      w.rationale = "empty representative";
      return w;
    }
    base = stretch_loops(type_i(base, 0.5 * base.length()), kStadiumSide);
    line = longest_line(base);
  }
  for (double depth = 1.0; depth < 1e6; depth *= 2.0) {
    const auto pushed = type_ii(base, *line, depth);
    if (pushed.length() > bound) {
      w.free = true;
      w.witness = pushed;
      w.rationale = "pushes of a segment longer than 4 grow without bound";
      return w;
    }
  }
  w.rationale = "push iteration did not exceed the bound";
  return w;
}

}  // namespace bcp
