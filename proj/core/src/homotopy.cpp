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


#include "bcp/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bcp/dubins.hpp"

namespace bcp
{

Fragmentation fragment(const SampledPath & path, double target_len, double delta_max)
{
  if (!(target_len > 0.0 && target_len < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "fragment length must lie in (0, 1)");
  }
  if (!(delta_max > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "heading variation bound must be positive");
  }
  const auto & smp = path.samples;
  if (smp.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "fragmentation needs at least 2 samples");
  }
  Fragmentation f;
  f.max_fragment_length = target_len;
  f.delta_max = delta_max;
  f.times.push_back(smp.front().s);
  f.indices.push_back(0);
  std::size_t first = 0;
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t k = 1; k < smp.size(); ++k) {
    const double rel = smp[k].heading - smp[first].heading;
    const double len = smp[k].s - smp[first].s;
    const bool fits = len <= target_len &&
      std::max(hi, rel) - std::min(lo, rel) < delta_max;
    if (!fits) {
      if (k - 1 == first) {
        throw Error(
                ErrorCode::InvalidParameter,
                "sample spacing exceeds the fragment length or heading bound");
      }
      first = k - 1;
      f.times.push_back(smp[first].s);
      f.indices.push_back(first);
      const double r = smp[k].heading - smp[first].heading;
      if (smp[k].s - smp[first].s > target_len || std::abs(r) >= delta_max) {
        throw Error(
                ErrorCode::InvalidParameter,
                "sample spacing exceeds the fragment length or heading bound");
      }
      lo = std::min(0.0, r);
      hi = std::max(0.0, r);
      continue;
    }
    lo = std::min(lo, rel);
    hi = std::max(hi, rel);
  }
  if (f.indices.back() != smp.size() - 1) {
    f.times.push_back(smp.back().s);
    f.indices.push_back(smp.size() - 1);
  }
  return f;
}

SampledPath fragment_samples(const SampledPath & path, const Fragmentation & f, std::size_t i)
{
  return path.slice(f.indices.at(i), f.indices.at(i + 1));
}

bool RegionRz::contains(const Vec2 & p, double tol) const
{
  const auto adj = adjacent_circles(z);
  return distance(p, z.point) <= 1.0 + tol &&
         distance(p, adj.left.center) >= 1.0 - tol &&
         distance(p, adj.right.center) >= 1.0 - tol;
}

CsPath replacement_path(const DirectedPoint & a, const DirectedPoint & b)
{
  const DubinsCandidate * best = nullptr;
  const auto all = solve_all(a, b);
  for (const auto & c : all) {
    if (!c.feasible || is_ccc(c.word)) {
      continue;
    }
    const bool short_arcs = std::all_of(
      c.path.elements().begin(), c.path.elements().end(),
      [](const ArcSegment & e) {return std::abs(e.sweep) < kPi;});
    if (short_arcs && (best == nullptr || c.length < best->length)) {
      best = &c;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::FragmentInvalid, "no CSC with arcs shorter than pi joins the fragment");
  }
  return best->path;
}

LocalFrame make_local_frame(const DirectedPoint & z, const Vec2 & origin, double theta_range)
{
  const double r = distance(z.point, origin);
  if (r < 1.0) {
    throw Error(ErrorCode::InvalidParameter, "local frame origin must be at distance >= 1");
  }
  return LocalFrame{z, r - 1.0, theta_range};
}

namespace
{

struct BCoefficients
{
  double a;
  double b;
  double db;
};

// Second-order coefficients of (1 - p + p/|c|) c for c = (u + bend theta^2 / 2, theta).
BCoefficients b_coefficients(double p, double x_offset, double bend)
{
  const double u = x_offset + 1.0;
  const double a = 1.0 - p + p / u;
  const double b = bend * a / 2.0 - p * (1.0 + bend * u) / (2.0 * u * u);
  const double db = bend * (1.0 / u - 1.0) / 2.0 - (1.0 + bend * u) / (2.0 * u * u);
  return {a, b, db};
}

}  // namespace

RadialCurvature radial_curvature(double p, double theta, double x_offset, double bend)
{
  const auto c = b_coefficients(p, x_offset, bend);
  const double q = 4.0 * c.b * c.b * theta * theta;
  RadialCurvature r;
  r.a_p = c.a;
  r.b_p = c.b;
  r.kappa = 2.0 * c.b / std::pow(1.0 + q, 1.5);
  r.dkappa_dp = 2.0 * c.db * (1.0 - 2.0 * q) / std::pow(1.0 + q, 2.5);
  return r;
}

double reference_radial_slope(double x_offset)
{
  const double u = x_offset + 1.0;
  return 1.0 + x_offset / (2.0 * u) + x_offset / (2.0 * u * u);
}

double graph_curvature(double p, double x_offset, double bend)
{
  const auto c = b_coefficients(p, x_offset, bend);
  return 2.0 * c.b / (c.a * c.a);
}

namespace
{

void check_unit_parameter(double p)
{
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "homotopy parameter must lie in [0, 1]");
  }
}

// Recomputes arc length from chords.
void rechord(SampledPath & out)
{
  out.step_bound = 0.0;
  for (std::size_t k = 1; k < out.samples.size(); ++k) {
    const double d = distance(out.samples[k - 1].position, out.samples[k].position);
    out.samples[k].s = out.samples[k - 1].s + d;
    out.step_bound = std::max(out.step_bound, d);
  }
}

// Lifts the pushed-forward tangent angles so consecutive headings stay continuous.
void lift_headings(SampledPath & out, const SampledPath & in)
{
  for (std::size_t k = 0; k < out.samples.size(); ++k) {
    const double ref = k == 0 ? in.samples[0].heading : out.samples[k - 1].heading;
    out.samples[k].heading = ref + normalize_angle(out.samples[k].heading - ref);
  }
}

}  // namespace

SampledPath radial_step(const SampledPath & path, const Vec2 & center, double p)
{
  check_unit_parameter(p);
  SampledPath out;
  out.samples.reserve(path.samples.size());
  for (const auto & s : path.samples) {
    const Vec2 q = s.position - center;
    const double r = norm(q);
    if (r < kGeomTol) {
      throw Error(ErrorCode::SingularProjection, "sample coincides with the projection center");
    }
    const double h = 1.0 - p + p / r;
    const Vec2 qh = q / r;
    const Vec2 t = unit(s.heading);
    // Jacobian of q -> h(|q|) q applied to the unit tangent.
    const Vec2 dt = t * h - qh * (p / r * dot(qh, t));
    out.samples.push_back({0.0, center + q * h, angle_of(dt)});
  }
  lift_headings(out, path);
  rechord(out);
  return out;
}

SampledPath orthogonal_step(const SampledPath & path, const DirectedPoint & axis, double p)
{
  check_unit_parameter(p);
  const Vec2 eu = unit(axis.heading);
  const Vec2 ev = perp(eu);
  SampledPath out;
  out.samples.reserve(path.samples.size());
  for (const auto & s : path.samples) {
    const Vec2 q = s.position - axis.point;
    const Vec2 t = unit(s.heading);
    const Vec2 mapped = axis.point + eu * ((1.0 - p) * dot(q, eu)) + ev * dot(q, ev);
    const Vec2 dt = eu * ((1.0 - p) * dot(t, eu)) + ev * dot(t, ev);
    if (norm(dt) < kGeomTol) {
      throw Error(ErrorCode::SingularProjection, "orthogonal collapse of a tangent");
    }
    out.samples.push_back({0.0, mapped, angle_of(dt)});
  }
  lift_headings(out, path);
  rechord(out);
  return out;
}

bool DeformationTrace::winding_constant() const
{
  return std::all_of(info.begin(), info.end(), [&](const FrameInfo & f) {
             return f.winding == info.front().winding;
           });
}

bool DeformationTrace::all_valid() const
{
  return std::all_of(info.begin(), info.end(), [](const FrameInfo & f) {return f.valid;});
}

double DeformationTrace::max_curvature() const
{
  double m = 0.0;
  for (const auto & f : info) {
    m = std::max(m, f.max_curvature);
  }
  return m;
}

namespace
{

FrameInfo frame_info(
  const SampledPath & frame, double p, const DirectedPoint & x, const DirectedPoint & y,
  const ClosurePath & closure, double tol)
{
  FrameInfo fi;
  fi.p = p;
  fi.winding = winding_number(frame, closure);
  if (frame.samples.size() >= 3) {
    const auto rep = validate_bounded_curvature(frame, tol, x, y);
    fi.max_curvature = rep.max_curvature;
    fi.start_residual = rep.start_residual;
    fi.end_residual = rep.end_residual;
    fi.valid = rep.valid;
  } else {
    fi.start_residual = distance(frame.samples.front().position, x.point);
    fi.end_residual = distance(frame.samples.back().position, y.point);
    fi.valid = std::max(fi.start_residual, fi.end_residual) <= 1e-6;
  }
  return fi;
}

// Ordinate and tangent angle relative to the chord at one abscissa.
struct GraphPoint
{
  double v;
  double phi;
};

// Point of `path` whose abscissa along `eu` from `origin` equals u; the abscissa
// must be increasing along the path.
GraphPoint graph_point(const CsPath & path, const Vec2 & origin, const Vec2 & eu, double u)
{
  const Vec2 ev = perp(eu);
  double lo = 0.0;
  double hi = path.length();
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dot(path.position_at(mid) - origin, eu) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s = 0.5 * (lo + hi);
  const Vec2 q = path.position_at(s) - origin;
  return {dot(q, ev), normalize_angle(path.heading_at(s) - angle_of(eu))};
}

}  // namespace

DeformationTrace deform_fragment_to_replacement(
  const SampledPath & fragment, const CsPath & replacement, const DeformOptions & opts)
{
  if (opts.p_steps < 2) {
    throw Error(ErrorCode::InvalidParameter, "deformation needs at least 2 frames");
  }
  const auto & smp = fragment.samples;
  if (smp.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "fragment needs at least 2 samples");
  }
  const DirectedPoint x = fragment.start();
  const DirectedPoint y = fragment.end();
  const Vec2 origin = x.point;
  const double chord = distance(origin, y.point);
  if (chord < kGeomTol) {
    throw Error(ErrorCode::FragmentInvalid, "fragment is closed");
  }
  const Vec2 eu = (y.point - origin) / chord;
  const Vec2 ev = perp(eu);
  const double chord_angle = angle_of(eu);

  // Both curves must be graphs over the chord.
  for (const auto & st : sample_path(replacement, 0.01).samples) {
    if (std::cos(st.heading - chord_angle) <= 0.0) {
      throw Error(ErrorCode::FragmentInvalid, "replacement is not a graph over the chord");
    }
  }
  std::vector<double> u(smp.size());
  std::vector<GraphPoint> g0(smp.size());
  std::vector<GraphPoint> g1(smp.size());
  double gap = 0.0;
  for (std::size_t k = 0; k < smp.size(); ++k) {
    const Vec2 q = smp[k].position - origin;
    u[k] = dot(q, eu);
    g0[k] = {dot(q, ev), normalize_angle(smp[k].heading - chord_angle)};
    if (std::cos(g0[k].phi) <= 0.0 || (k > 0 && u[k] <= u[k - 1])) {
      throw Error(ErrorCode::FragmentInvalid, "fragment is not a graph over its chord");
    }
    g1[k] = graph_point(replacement, origin, eu, u[k]);
    gap = std::max({gap, std::abs(g0[k].v - g1[k].v), std::abs(g0[k].phi - g1[k].phi)});
  }

  const auto closure = make_closure(x, y);
  DeformationTrace trace;
  const int frames = gap < kGeomTol ? 1 : opts.p_steps;
  const double lift = smp.front().heading - g0.front().phi - chord_angle;
  for (int i = 0; i < frames; ++i) {
    const double p = frames == 1 ? 0.0 : static_cast<double>(i) / (frames - 1);
    SampledPath f;
    if (i == 0) {
      f = fragment;
    } else {
      f.samples.reserve(smp.size());
      for (std::size_t k = 0; k < smp.size(); ++k) {
        const double v = (1.0 - p) * g0[k].v + p * g1[k].v;
        const double slope = (1.0 - p) * std::tan(g0[k].phi) + p * std::tan(g1[k].phi);
        f.samples.push_back(
          {0.0, origin + eu * u[k] + ev * v, chord_angle + lift + std::atan(slope)});
      }
      rechord(f);
    }
    auto fi = frame_info(f, p, x, y, closure, opts.tol_frame);
    if (fi.max_curvature > 1.0 + opts.tol_frame) {
      throw CurvatureViolationError(
              "deformation frame exceeds the curvature bound at p = " + std::to_string(p), f, p);
    }
    trace.frames.push_back(std::move(f));
    trace.info.push_back(fi);
  }
  return trace;
}

namespace
{

struct FragmentWork
{
  CsPath replacement;
  DeformationTrace trace;
};

std::vector<FragmentWork> deform_all(
  const SampledPath & path, const Fragmentation & frag, const DeformOptions & opts)
{
  std::vector<FragmentWork> out;
  out.reserve(frag.count());
  for (std::size_t i = 0; i < frag.count(); ++i) {
    const auto piece = fragment_samples(path, frag, i);
    auto repl = replacement_path(piece.start(), piece.end());
    auto trace = deform_fragment_to_replacement(piece, repl, opts);
    out.push_back({std::move(repl), std::move(trace)});
  }
  return out;
}

}  // namespace

NormalizeResult normalize_to_cs(const SampledPath & path, const NormalizeOptions & opts)
{
  const auto check = validate_bounded_curvature(path, opts.deform.tol_frame);
  if (!check.valid) {
    throw Error(ErrorCode::InvalidInput, "input path violates the curvature bound");
  }
  NormalizeResult res;
  std::vector<FragmentWork> work;
  double target = opts.target_len;
  double delta = opts.delta_max;
  for (int attempt = 0;; ++attempt) {
    try {
      res.fragmentation = fragment(path, target, delta);
      work = deform_all(path, res.fragmentation, opts.deform);
      break;
    } catch (const CurvatureViolationError &) {
      if (attempt >= opts.retry_cap) {
        throw;
      }
      target *= 0.5;
      delta *= 0.5;
    }
  }

  res.path = CsPath(path.start());
  for (const auto & w : work) {
    res.path.append_path(w.replacement);
  }

  const DirectedPoint x = path.start();
  const DirectedPoint y = path.end();
  const auto closure = make_closure(x, y);
  const int frames = opts.deform.p_steps;
  for (int i = 0; i < frames; ++i) {
    const double p = static_cast<double>(i) / (frames - 1);
    SampledPath joined;
    for (const auto & w : work) {
      const auto & f = w.trace.frames.size() == 1 ? w.trace.frames.front() :
        w.trace.frames.at(static_cast<std::size_t>(i));
      const double s0 = joined.samples.empty() ? 0.0 : joined.samples.back().s;
      const std::size_t first = joined.samples.empty() ? 0 : 1;
      for (std::size_t k = first; k < f.samples.size(); ++k) {
        auto smp = f.samples[k];
        smp.s += s0;
        joined.samples.push_back(smp);
      }
      joined.step_bound = std::max(joined.step_bound, f.step_bound);
    }
    res.trace.info.push_back(frame_info(joined, p, x, y, closure, opts.deform.tol_frame));
    res.trace.frames.push_back(std::move(joined));
  }
  return res;
}

namespace
{

DirectedPoint element_start(const CsPath & path, std::size_t i)
{
  const auto & e = path.elements()[i];
  return DirectedPoint::make(e.start_point(), e.start_heading());
}

DirectedPoint element_end(const CsPath & path, std::size_t i)
{
  return i + 1 < path.complexity() ? element_start(path, i + 1) : path.end();
}

// Splits the step containing arc length s and inserts `extra` there.
std::vector<CsStep> insert_steps(
  const std::vector<CsStep> & steps, double s, const std::vector<CsStep> & extra)
{
  std::vector<CsStep> out;
  double acc = 0.0;
  bool done = false;
  for (const auto & st : steps) {
    if (!done && s <= acc + st.amount) {
      const double a = s - acc;
      out.push_back({st.kind, st.turn, a});
      out.insert(out.end(), extra.begin(), extra.end());
      out.push_back({st.kind, st.turn, st.amount - a});
      done = true;
    } else {
      out.push_back(st);
    }
    acc += st.amount;
  }
  if (!done) {
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

CsStep loop_step(Turn t)
{
  return {ArcSegment::Kind::Arc, t, kTwoPi};
}

bool is_full_loop(const CsStep & st, Turn t)
{
  return st.kind == ArcSegment::Kind::Arc && st.turn == t && std::abs(st.amount - kTwoPi) < 1e-9;
}

}  // namespace

CsPath reduce_complexity(const CsPath & path, int loop_cap)
{
  CsPath cur = path.canonical();
  bool changed = true;
  while (changed) {
    changed = false;
    const auto steps = cur.steps();
    const std::size_t n = steps.size();
    for (std::size_t w = n; w >= 4 && !changed; --w) {
      for (std::size_t i = 0; i + w <= n && !changed; ++i) {
        const auto a = element_start(cur, i);
        const auto b = element_end(cur, i + w - 1);
        const std::vector<CsStep> window(steps.begin() + i, steps.begin() + i + w);
        const auto sub = CsPath::from_steps(a, window);
        const auto closure = make_closure(a, b);
        CsPath cand;
        try {
          cand = minimal_path_in_class(
            a, b, closure.path, winding_number(sub, closure), loop_cap).canonical();
        } catch (const Error & e) {
          if (e.code() == ErrorCode::ClassUnreachableAtCap) {
            continue;
          }
          throw;
        }
        if (cand.complexity() >= w || cand.length() > sub.length() + kGeomTol) {
          continue;
        }
        std::vector<CsStep> next(steps.begin(), steps.begin() + i);
        const auto mid = cand.steps();
        next.insert(next.end(), mid.begin(), mid.end());
        next.insert(next.end(), steps.begin() + i + w, steps.end());
        cur = CsPath::from_steps(cur.start(), next).canonical();
        changed = true;
      }
    }
  }
  return cur;
}

CsPath type_i(const CsPath & path, double s)
{
  if (s < kGeomTol || s > path.length() - kGeomTol) {
    throw Error(ErrorCode::InvalidAxis, "type I axis point must be interior to the path");
  }
  const auto steps = insert_steps(
    path.steps(), s, {loop_step(Turn::Left), loop_step(Turn::Right)});
  return CsPath::from_steps(path.start(), steps);
}

CsPath collapse_type_i(const CsPath & path)
{
  auto steps = path.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const bool lr = is_full_loop(steps[i], Turn::Left) && is_full_loop(steps[i + 1], Turn::Right);
    const bool rl = is_full_loop(steps[i], Turn::Right) && is_full_loop(steps[i + 1], Turn::Left);
    if (lr || rl) {
      steps.erase(steps.begin() + i, steps.begin() + i + 2);
      return CsPath::from_steps(path.start(), steps).canonical();
    }
  }
  throw Error(ErrorCode::InvalidInput, "path has no adjacent pair of opposite full loops");
}

namespace
{

struct Bump
{
  double alpha;
  double m;
};

Bump bump_at(double l, double alpha)
{
  return {alpha, (l - 4.0 * std::sin(alpha)) / (2.0 * std::cos(alpha))};
}

double bump_depth(const Bump & b)
{
  return 2.0 - 2.0 * std::cos(b.alpha) + b.m * std::sin(b.alpha);
}

// Largest half-turn angle with a non-negative straight part.
double alpha_limit(double l)
{
  return l >= 4.0 ? kPi / 2.0 : std::asin(l / 4.0);
}

constexpr int kBumpGrid = 256;

}  // namespace

double max_push_depth(double l)
{
  if (l > 4.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double lim = alpha_limit(l);
  double best = 0.0;
  for (int i = 1; i <= kBumpGrid; ++i) {
    const double a = std::min(lim * i / kBumpGrid, kPi / 2.0 - 1e-12);
    best = std::max(best, bump_depth(bump_at(l, a)));
  }
  return best;
}

CsPath type_ii(const CsPath & path, std::size_t index, double depth)
{
  if (index >= path.complexity() || path.elements()[index].is_arc()) {
    throw Error(ErrorCode::InvalidParameter, "type II needs a line component");
  }
  if (depth == 0.0) {
    return path;
  }
  const double l = path.elements()[index].length();
  const double target = std::abs(depth);
  const double lim = alpha_limit(l);
  // First grid bracket reaching the depth, then bisection inside it.
  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= kBumpGrid; ++i) {
    const double a = l > 4.0 ?
      (kPi / 2.0) * (1.0 - std::pow(0.5, 40.0 * i / kBumpGrid)) :
      std::min(lim * i / kBumpGrid, kPi / 2.0 - 1e-12);
    if (bump_depth(bump_at(l, a)) >= target) {
      hi = a;
      break;
    }
    lo = a;
  }
  if (hi < 0.0) {
    throw Error(ErrorCode::PushInfeasible, "push depth exceeds what the segment allows");
  }
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bump_depth(bump_at(l, mid)) < target ? lo : hi) = mid;
  }
  const Bump b = bump_at(l, hi);
  const Turn side = depth > 0.0 ? Turn::Left : Turn::Right;
  const Turn other = opposite(side);
  const std::vector<CsStep> bump{
    {ArcSegment::Kind::Arc, side, b.alpha},
    {ArcSegment::Kind::Line, Turn::Left, std::max(0.0, b.m)},
    {ArcSegment::Kind::Arc, other, 2.0 * b.alpha},
    {ArcSegment::Kind::Line, Turn::Left, std::max(0.0, b.m)},
    {ArcSegment::Kind::Arc, side, b.alpha},
  };
  auto steps = path.steps();
  steps.erase(steps.begin() + index);
  steps.insert(steps.begin() + index, bump.begin(), bump.end());
  return CsPath::from_steps(path.start(), steps).canonical();
}

namespace
{

CsPath with_loops(const CsPath & base, double s_left, double s_right)
{
  // Insert the later loop first so the earlier arc length stays valid.
  auto steps = insert_steps(base.steps(), s_right, {loop_step(Turn::Right)});
  steps = insert_steps(steps, s_left, {loop_step(Turn::Left)});
  return CsPath::from_steps(base.start(), steps);
}

Vec2 loop_center(const CsPath & base, double s, Turn t)
{
  return turning_center(base.position_at(s), base.heading_at(s), t);
}

}  // namespace

DeformationTrace skew_homotopy(const CsPath & rsl, const SkewOptions & opts)
{
  const CsPath base = rsl.canonical();
  if (base.word() != "RSL") {
    throw Error(ErrorCode::InvalidInput, "skew homotopy needs an RSL path");
  }
  const auto steps = base.steps();
  const double l = steps[1].amount;
  const double s_mid = steps[0].amount + 0.5 * l;
  const double total = base.length();
  const DirectedPoint x = base.start();
  const DirectedPoint y = base.end();
  const Vec2 cr_x = adjacent_circles(x).right.center;
  const Vec2 cl_y = adjacent_circles(y).left.center;
  if (0.5 * l < 2.0 - kGeomTol) {
    throw Error(ErrorCode::SkewInfeasible, "segment too short for the figure eight");
  }

  const auto closure = make_closure(x, y);
  DeformationTrace trace;
  auto push = [&](const CsPath & p, double param) {
      auto f = sample_path(p, opts.step);
      trace.info.push_back(frame_info(f, param, x, y, closure, opts.tol_frame));
      trace.frames.push_back(std::move(f));
    };
  push(base, 0.0);

  const int n = std::max(
    1, static_cast<int>(std::ceil(std::max(s_mid, total - s_mid) / opts.step)));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double sl = s_mid * (1.0 - t);
    const double sr = s_mid + (total - s_mid) * t;
    if (distance(loop_center(base, sl, Turn::Left), cl_y) < 2.0 - kGeomTol ||
      distance(loop_center(base, sr, Turn::Right), cr_x) < 2.0 - kGeomTol)
    {
      throw Error(ErrorCode::SkewInfeasible, "a loop meets an end circle during translation");
    }
    push(with_loops(base, sl, sr), (i + 1.0) / (n + 2.0));
  }

  const auto lsr = solve_all(x, y)[static_cast<std::size_t>(DubinsWord::LSR)];
  if (!lsr.feasible) {
    throw Error(ErrorCode::SkewInfeasible, "no LSR path joins the endpoints");
  }
  if (winding_number(lsr.path, closure) != trace.info.front().winding) {
    throw Error(ErrorCode::SkewInfeasible, "the LSR path lies in another class");
  }
  push(lsr.path, 1.0);
  return trace;
}

}  // namespace bcp
