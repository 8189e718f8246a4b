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

#include "bcp/cs_path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bcp
{

ArcSegment ArcSegment::arc(const Circle & circle, double start_angle, double sweep)
{
  ArcSegment a;
  a.kind = Kind::Arc;
  a.circle = circle;
  a.circle.orientation = sweep >= 0.0 ? Turn::Left : Turn::Right;
  a.start_angle = start_angle;
  a.sweep = sweep;
  a.start = circle.center + unit(start_angle);
  a.end = circle.center + unit(start_angle + sweep);
  return a;
}

ArcSegment ArcSegment::line(const Vec2 & start, const Vec2 & end)
{
  ArcSegment l;
  l.kind = Kind::Line;
  l.start = start;
  l.end = end;
  l.extent = distance(start, end);
  return l;
}

double ArcSegment::length() const
{
  return is_arc() ? std::abs(sweep) * circle.radius : extent;
}

Vec2 ArcSegment::start_point() const {return start;}
Vec2 ArcSegment::end_point() const {return end;}

double ArcSegment::start_heading() const
{
  if (is_arc()) {
    return normalize_angle(start_angle + turn_sign(turn()) * kPi / 2.0);
  }
  return angle_of(end - start);
}

Vec2 ArcSegment::position_at(double s) const
{
  if (is_arc()) {
    return circle.center + unit(start_angle + turn_sign(turn()) * s / circle.radius) *
           circle.radius;
  }
  const double len = length();
  if (len <= 0.0) {
    return start;
  }
  return start + (end - start) * (s / len);
}

double ArcSegment::heading_at(double s) const
{
  return start_heading() + curvature() * s;
}

double ArcSegment::curvature() const
{
  return is_arc() ? turn_sign(turn()) / circle.radius : 0.0;
}

CsPath::CsPath(const DirectedPoint & start)
: start_(start), end_point_(start.point), end_heading_(start.heading) {}

CsPath CsPath::from_elements(const DirectedPoint & start, std::vector<ArcSegment> elements)
{
  CsPath path(start);
  for (const auto & el : elements) {
    if (distance(el.start_point(), path.end_point_) > kGeomTol * 10.0) {
      throw Error(ErrorCode::InvalidInput, "element does not start at previous endpoint");
    }
    const double dh = normalize_angle(el.start_heading() - path.end_heading_);
    if (std::abs(dh) > kGeomTol * 10.0) {
      throw Error(ErrorCode::InvalidInput, "heading discontinuity between elements");
    }
    if (el.is_arc()) {
      if (std::abs(el.circle.radius - 1.0) > kGeomTol) {
        throw Error(ErrorCode::InvalidInput, "arcs must have unit radius");
      }
      if (std::abs(el.sweep) <= 0.0 || std::abs(el.sweep) > kMaxSweep + kGeomTol) {
        throw Error(ErrorCode::InvalidInput, "arc sweep out of range");
      }
    } else if (el.length() <= 0.0) {
      throw Error(ErrorCode::InvalidInput, "line segment has zero length");
    }
    path.end_heading_ += dh + el.turning();
    path.end_point_ = el.end_point();
    path.elements_.push_back(el);
  }
  return path;
}

CsPath CsPath::from_steps(const DirectedPoint & start, std::span<const CsStep> steps)
{
  CsPath path(start);
  for (const auto & st : steps) {
    path.append(st);
  }
  return path;
}

CsPath & CsPath::append_arc(Turn turn, double sweep)
{
  if (!(sweep >= 0.0) || !std::isfinite(sweep)) {
    throw Error(ErrorCode::InvalidParameter, "arc sweep must be a non-negative magnitude");
  }
  // Long loops are stored as consecutive chunks so every element stays under the cap.
  while (sweep >= kDropLength) {
    const double chunk = std::min(sweep, sweep > kMaxSweep ? kTwoPi : kMaxSweep);
    const Vec2 center = turning_center(end_point_, end_heading_, turn);
    const double start_angle = angle_of(end_point_ - center);
    const double signed_sweep = turn_sign(turn) * chunk;
    ArcSegment el = ArcSegment::arc(Circle{center, 1.0, turn}, start_angle, signed_sweep);
    // Keep the joint exact; the arc start is reconstructed from its polar angle.
    el.start = end_point_;
    elements_.push_back(el);
    end_point_ = el.end;
    end_heading_ += signed_sweep;
    sweep -= chunk;
  }
  return *this;
}

CsPath & CsPath::append_line(double length)
{
  if (!(length >= 0.0) || !std::isfinite(length)) {
    throw Error(ErrorCode::InvalidParameter, "line length must be non-negative");
  }
  if (length < kDropLength) {
    return *this;
  }
  const Vec2 end = end_point_ + unit(end_heading_) * length;
  elements_.push_back(ArcSegment::line(end_point_, end));
  elements_.back().extent = length;
  end_point_ = end;
  return *this;
}

CsPath & CsPath::append(const CsStep & step)
{
  if (step.kind == ArcSegment::Kind::Arc) {
    return append_arc(step.turn, step.amount);
  }
  return append_line(step.amount);
}

CsPath & CsPath::append_path(const CsPath & other)
{
  if (distance(other.start().point, end_point_) > 1e-7 ||
    std::abs(normalize_angle(other.start().heading - end_heading_)) > 1e-7)
  {
    throw Error(ErrorCode::InvalidInput, "concatenation is not G1 continuous");
  }
  for (const auto & st : other.steps()) {
    append(st);
  }
  return *this;
}

DirectedPoint CsPath::end() const
{
  return DirectedPoint::make(end_point_, end_heading_);
}

std::vector<CsStep> CsPath::steps() const
{
  std::vector<CsStep> out;
  out.reserve(elements_.size());
  for (const auto & el : elements_) {
    if (el.is_arc()) {
      out.push_back({ArcSegment::Kind::Arc, el.turn(), std::abs(el.sweep)});
    } else {
      out.push_back({ArcSegment::Kind::Line, Turn::Left, el.length()});
    }
  }
  return out;
}

double CsPath::length() const
{
  double total = 0.0;
  for (const auto & el : elements_) {
    total += el.length();
  }
  return total;
}

double CsPath::total_turning() const
{
  return end_heading_ - start_.heading;
}

std::pair<std::size_t, double> CsPath::locate(double s) const
{
  if (elements_.empty()) {
    return {0, 0.0};
  }
  s = std::max(0.0, s);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const double len = elements_[i].length();
    if (s <= len || i + 1 == elements_.size()) {
      return {i, std::min(s, len)};
    }
    s -= len;
  }
  return {elements_.size() - 1, elements_.back().length()};
}

Vec2 CsPath::position_at(double s) const
{
  if (elements_.empty()) {
    return start_.point;
  }
  const auto [i, local] = locate(s);
  return elements_[i].position_at(local);
}

double CsPath::heading_at(double s) const
{
  if (elements_.empty()) {
    return start_.heading;
  }
  const auto [idx, local] = locate(s);
  double lift = start_.heading;
  for (std::size_t i = 0; i < idx; ++i) {
    lift += elements_[i].turning();
  }
  return lift + elements_[idx].curvature() * local;
}

CsPath CsPath::canonical() const
{
  std::vector<CsStep> merged;
  for (const auto & el : elements_) {
    const CsStep st = el.is_arc() ?
      CsStep{ArcSegment::Kind::Arc, el.turn(), std::abs(el.sweep)} :
      CsStep{ArcSegment::Kind::Line, Turn::Left, el.length()};
    if (!merged.empty() && merged.back().kind == st.kind &&
      (st.kind == ArcSegment::Kind::Line || merged.back().turn == st.turn))
    {
      merged.back().amount += st.amount;
    } else {
      merged.push_back(st);
    }
  }
  return from_steps(start_, merged);
}

std::string CsPath::word() const
{
  std::string w;
  for (const auto & el : elements_) {
    w.push_back(el.is_arc() ? turn_letter(el.turn()) : 'S');
  }
  return w;
}

CsPath concat(const CsPath & a, const CsPath & b)
{
  CsPath out = a;
  out.append_path(b);
  return out;
}

double length(const CsPath & path) {return path.length();}

double endpoint_residual(const CsPath & path, const DirectedPoint & target)
{
  const DirectedPoint e = path.end();
  return std::max(
    distance(e.point, target.point), std::abs(normalize_angle(e.heading - target.heading)));
}

DirectedPoint SampledPath::start() const
{
  return DirectedPoint::make(samples.front().position, samples.front().heading);
}

DirectedPoint SampledPath::end() const
{
  return DirectedPoint::make(samples.back().position, samples.back().heading);
}

double SampledPath::total_turning() const
{
  double total = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    total += normalize_angle(samples[i].heading - samples[i - 1].heading);
  }
  return total;
}

SampledPath SampledPath::slice(std::size_t first, std::size_t last) const
{
  SampledPath out;
  out.step_bound = step_bound;
  const double s0 = samples.at(first).s;
  for (std::size_t i = first; i <= last && i < samples.size(); ++i) {
    PathSample p = samples[i];
    p.s -= s0;
    out.samples.push_back(p);
  }
  return out;
}

SampledPath sample_path(const CsPath & path, double step)
{
  if (!(step > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "sampling step must be positive");
  }
  SampledPath out;
  out.step_bound = step;
  out.samples.push_back({0.0, path.start().point, path.start().heading});
  double s0 = 0.0;
  double lift = path.start().heading;
  for (const auto & el : path.elements()) {
    const double len = el.length();
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(len / step)));
    for (std::size_t k = 1; k <= n; ++k) {
      const double local = k == n ? len : len * static_cast<double>(k) / static_cast<double>(n);
      const Vec2 p = k == n ? el.end_point() : el.position_at(local);
      out.samples.push_back({s0 + local, p, lift + el.curvature() * local});
    }
    s0 += len;
    lift += el.turning();
  }
  return out;
}

ValidityReport validate_bounded_curvature(
  const SampledPath & path, double tol,
  const std::optional<DirectedPoint> & start,
  const std::optional<DirectedPoint> & end)
{
  const auto & smp = path.samples;
  if (smp.size() < 3) {
    throw Error(ErrorCode::InsufficientData, "curvature validation needs at least 3 samples");
  }
  ValidityReport rep;
  for (std::size_t i = 1; i < smp.size(); ++i) {
    const double ds = smp[i].s - smp[i - 1].s;
    if (ds > 0.0) {
      const double speed = distance(smp[i - 1].position, smp[i].position) / ds;
      rep.unit_speed_residual = std::max(rep.unit_speed_residual, std::abs(speed - 1.0));
    }
  }
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    const double k = std::abs(
      three_point_curvature(smp[i - 1].position, smp[i].position, smp[i + 1].position));
    rep.max_curvature = std::max(rep.max_curvature, k);
    if (k > 1.0 + tol) {
      rep.violations.push_back(i);
    }
  }
  constexpr double kEndpointTol = 1e-6;
  bool endpoints_ok = true;
  auto residual = [](const PathSample & s, const DirectedPoint & d) {
      return std::max(
        distance(s.position, d.point), std::abs(normalize_angle(s.heading - d.heading)));
    };
  if (start) {
    rep.start_residual = residual(smp.front(), *start);
    endpoints_ok = endpoints_ok && rep.start_residual <= kEndpointTol;
  }
  if (end) {
    rep.end_residual = residual(smp.back(), *end);
    endpoints_ok = endpoints_ok && rep.end_residual <= kEndpointTol;
  }
  rep.valid = rep.violations.empty() && endpoints_ok;
  return rep;
}

namespace
{

// Arcs are cut into pieces of at most a quarter turn so that two pieces of the
// same circle overlap in at most one interval.
struct Piece
{
  bool arc{false};
  Vec2 center;
  double low_angle{0.0};   // counterclockwise-most start of the angular range
  double span{0.0};        // angular extent (arcs) or length (lines)
  int sigma{1};
  Vec2 a;
  Vec2 dir;
  double s0{0.0};
};

struct Contact
{
  double a_lo, a_hi, b_lo, b_hi;
};

constexpr double kParamTol = 1e-7;
constexpr double kSideStep = 1e-5;

std::vector<Piece> make_pieces(const CsPath & path)
{
  std::vector<Piece> out;
  double s0 = 0.0;
  for (const auto & el : path.elements()) {
    if (el.is_arc()) {
      const double total = std::abs(el.sweep);
      const auto n = static_cast<int>(std::ceil(total / (kPi / 2.0) - 1e-12));
      const int sigma = turn_sign(el.turn());
      for (int k = 0; k < n; ++k) {
        const double piece = total / n;
        const double a0 = el.start_angle + sigma * piece * k;
        Piece p;
        p.arc = true;
        p.center = el.circle.center;
        p.sigma = sigma;
        p.span = piece;
        p.low_angle = sigma > 0 ? a0 : a0 - piece;
        p.s0 = s0 + piece * k;
        out.push_back(p);
      }
    } else {
      Piece p;
      p.arc = false;
      p.a = el.start_point();
      p.span = el.length();
      p.dir = (el.end_point() - el.start_point()) / p.span;
      p.s0 = s0;
      out.push_back(p);
    }
    s0 += el.length();
  }
  return out;
}

// Local arc parameter of angle `ang` on an arc piece, or -1 when outside.
double arc_param(const Piece & p, double ang)
{
  double off = wrap_two_pi(ang - p.low_angle);
  if (off > p.span + 1e-9) {
    if (off > kTwoPi - 1e-9) {
      off = 0.0;
    } else {
      return -1.0;
    }
  }
  off = std::min(off, p.span);
  return p.sigma > 0 ? off : p.span - off;
}

void intersect_line_line(const Piece & A, const Piece & B, std::vector<Contact> & out)
{
  const double den = cross(A.dir, B.dir);
  if (std::abs(den) < 1e-12) {
    if (std::abs(cross(A.dir, B.a - A.a)) > kGeomTol) {
      return;
    }
    const double t0 = dot(B.a - A.a, A.dir);
    const double t1 = dot(B.a + B.dir * B.span - A.a, A.dir);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(A.span, std::max(t0, t1));
    if (hi < lo - kGeomTol) {
      return;
    }
    const double u_lo = std::clamp(dot(A.a + A.dir * lo - B.a, B.dir), 0.0, B.span);
    const double u_hi = std::clamp(dot(A.a + A.dir * hi - B.a, B.dir), 0.0, B.span);
    out.push_back({A.s0 + lo, A.s0 + hi, B.s0 + std::min(u_lo, u_hi),
        B.s0 + std::max(u_lo, u_hi)});
    return;
  }
  const double t = cross(B.a - A.a, B.dir) / den;
  const double u = cross(B.a - A.a, A.dir) / den;
  if (t < -1e-9 || t > A.span + 1e-9 || u < -1e-9 || u > B.span + 1e-9) {
    return;
  }
  const double ta = A.s0 + std::clamp(t, 0.0, A.span);
  const double ub = B.s0 + std::clamp(u, 0.0, B.span);
  out.push_back({ta, ta, ub, ub});
}

void intersect_line_arc(const Piece & L, const Piece & C, bool line_first,
  std::vector<Contact> & out)
{
  const Vec2 f = L.a - C.center;
  const double fd = dot(f, L.dir);
  const double disc = fd * fd - (dot(f, f) - 1.0);
  if (disc < -kGeomTol) {
    return;
  }
  std::vector<double> ts;
  if (disc <= kGeomTol) {
    ts.push_back(-fd);
  } else {
    const double r = std::sqrt(disc);
    ts.push_back(-fd - r);
    ts.push_back(-fd + r);
  }
  for (double t : ts) {
    if (t < -1e-9 || t > L.span + 1e-9) {
      continue;
    }
    t = std::clamp(t, 0.0, L.span);
    const Vec2 q = L.a + L.dir * t;
    const double u = arc_param(C, angle_of(q - C.center));
    if (u < 0.0) {
      continue;
    }
    const double sl = L.s0 + t;
    const double sc = C.s0 + u;
    out.push_back(line_first ? Contact{sl, sl, sc, sc} : Contact{sc, sc, sl, sl});
  }
}

void intersect_arc_arc(const Piece & A, const Piece & B, std::vector<Contact> & out)
{
  const Vec2 v = B.center - A.center;
  const double d = norm(v);
  if (d < kGeomTol) {
    const double delta = normalize_angle(B.low_angle - A.low_angle);
    const double lo = std::max(0.0, delta);
    const double hi = std::min(A.span, delta + B.span);
    if (hi < lo - 1e-9) {
      return;
    }
    const double ang_lo = A.low_angle + lo;
    const double ang_hi = A.low_angle + std::max(lo, hi);
    const double a1 = arc_param(A, ang_lo);
    const double a2 = arc_param(A, ang_hi);
    const double b1 = arc_param(B, ang_lo);
    const double b2 = arc_param(B, ang_hi);
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0) {
      return;
    }
    out.push_back({A.s0 + std::min(a1, a2), A.s0 + std::max(a1, a2),
        B.s0 + std::min(b1, b2), B.s0 + std::max(b1, b2)});
    return;
  }
  if (d > 2.0 + kGeomTol) {
    return;
  }
  std::vector<Vec2> pts;
  const Vec2 mid = A.center + v * 0.5;
  if (d >= 2.0 - kGeomTol) {
    pts.push_back(mid);
  } else {
    const double h = std::sqrt(1.0 - d * d / 4.0);
    const Vec2 n = perp(v / d);
    pts.push_back(mid + n * h);
    pts.push_back(mid - n * h);
  }
  for (const auto & q : pts) {
    const double a = arc_param(A, angle_of(q - A.center));
    const double b = arc_param(B, angle_of(q - B.center));
    if (a >= 0.0 && b >= 0.0) {
      out.push_back({A.s0 + a, A.s0 + a, B.s0 + b, B.s0 + b});
    }
  }
}

struct Interval
{
  double lo, hi;
};

// Shifts j by a multiple of the period so that it sits next to i.
Interval align(const Interval & i, Interval j, double period)
{
  if (period > 0.0) {
    const double k = std::round(((i.lo + i.hi) - (j.lo + j.hi)) / (2.0 * period));
    j.lo += k * period;
    j.hi += k * period;
  }
  return j;
}

bool touches(const Interval & i, Interval j, double period)
{
  j = align(i, j, period);
  return std::max(i.lo - j.hi, j.lo - i.hi) <= kParamTol;
}

Interval hull(const Interval & i, Interval j, double period)
{
  j = align(i, j, period);
  return {std::min(i.lo, j.lo), std::max(i.hi, j.hi)};
}

int count_crossings(const CsPath & curve, bool closed)
{
  const auto pieces = make_pieces(curve);
  const double total = curve.length();
  const double period = closed ? total : 0.0;
  std::vector<Contact> contacts;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece & A = pieces[i];
      const Piece & B = pieces[j];
      if (!A.arc && !B.arc) {
        intersect_line_line(A, B, contacts);
      } else if (!A.arc) {
        intersect_line_arc(A, B, true, contacts);
      } else if (!B.arc) {
        intersect_line_arc(B, A, false, contacts);
      } else {
        intersect_arc_arc(A, B, contacts);
      }
    }
  }

  // Group contacts that describe the same pair of curve portions.
  std::vector<bool> placed(contacts.size(), false);
  int crossings = 0;
  auto wrap = [&](double s) {
      if (!closed) {
        return s;
      }
      double w = std::fmod(s, total);
      return w < 0.0 ? w + total : w;
    };
  for (std::size_t seed = 0; seed < contacts.size(); ++seed) {
    if (placed[seed]) {
      continue;
    }
    placed[seed] = true;
    Interval ga{contacts[seed].a_lo, contacts[seed].a_hi};
    Interval gb{contacts[seed].b_lo, contacts[seed].b_hi};
    for (bool grew = true; grew; ) {
      grew = false;
      for (std::size_t k = 0; k < contacts.size(); ++k) {
        if (placed[k]) {
          continue;
        }
        const Interval ca{contacts[k].a_lo, contacts[k].a_hi};
        const Interval cb{contacts[k].b_lo, contacts[k].b_hi};
        if (touches(ga, ca, period) && touches(gb, cb, period)) {
          ga = hull(ga, ca, period);
          gb = hull(gb, cb, period);
        } else if (touches(ga, cb, period) && touches(gb, ca, period)) {
          ga = hull(ga, cb, period);
          gb = hull(gb, ca, period);
        } else {
          continue;
        }
        placed[k] = true;
        grew = true;
      }
    }
    if (touches(ga, gb, period)) {
      continue;  // a single point of the curve (joint between consecutive elements)
    }
    if (!closed &&
      (ga.lo - kSideStep < 0.0 || gb.lo - kSideStep < 0.0 ||
      ga.hi + kSideStep > total || gb.hi + kSideStep > total))
    {
      continue;
    }
    auto pos = [&](double s) {return curve.position_at(wrap(s));};
    auto tan = [&](double s) {return unit(curve.heading_at(wrap(s)));};
    const bool parallel = dot(tan(ga.lo), tan(gb.lo)) >= 0.0;
    const double a_before = ga.lo - kSideStep;
    const double a_after = ga.hi + kSideStep;
    const double b_before = parallel ? gb.lo - kSideStep : gb.hi + kSideStep;
    const double b_after = parallel ? gb.hi + kSideStep : gb.lo - kSideStep;
    const double side_before = cross(tan(a_before), pos(b_before) - pos(a_before));
    const double side_after = cross(tan(a_after), pos(b_after) - pos(a_after));
    constexpr double kSideEps = 1e-14;
    if (std::abs(side_before) < kSideEps || std::abs(side_after) < kSideEps) {
      continue;
    }
    if ((side_before > 0.0) != (side_after > 0.0)) {
      ++crossings;
    }
  }
  return crossings;
}

}  // namespace

int transversal_crossings(const CsPath & path, const CsPath & closure)
{
  CsPath closed_curve = path;
  try {
    closed_curve.append_path(closure);
  } catch (const Error &) {
    throw Error(ErrorCode::InvalidInput, "closure does not start at the path end");
  }
  const DirectedPoint e = closed_curve.end();
  if (distance(e.point, path.start().point) > 1e-7 ||
    std::abs(normalize_angle(e.heading - path.start().heading)) > 1e-7)
  {
    throw Error(ErrorCode::InvalidInput, "path and closure do not form a closed curve");
  }
  if (closed_curve.empty()) {
    return 0;
  }
  return count_crossings(closed_curve, true);
}

int self_crossings(const CsPath & path)
{
  if (path.empty()) {
    return 0;
  }
  return count_crossings(path, false);
}

}  // namespace bcp
