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

#include "bcp/dubins.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>

namespace bcp
{

std::string_view to_string(DubinsWord word)
{
  switch (word) {
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::LRL: return "LRL";
    case DubinsWord::RLR: return "RLR";
  }
  return "?";
}

bool is_ccc(DubinsWord word)
{
  return word == DubinsWord::LRL || word == DubinsWord::RLR;
}

std::string DubinsCandidate::label() const
{
  const std::string w = path.word();
  const std::string family = is_ccc(word) ? "CCC" : "CSC";
  if (w.empty()) {
    return "point-degenerate " + family;
  }
  if (w.size() < 3) {
    return w + "-degenerate " + family;
  }
  return w;
}

namespace
{

constexpr double kSnap = 1e-9;

// Sweep needed to rotate heading `from` to `to` turning with sign sigma, in [0, 2pi).
double directed_sweep(double from, double to, int sigma)
{
  const double s = wrap_two_pi(sigma * (to - from));
  return s > kTwoPi - kSnap ? 0.0 : s;
}

Turn first_turn(DubinsWord w)
{
  return (w == DubinsWord::LSL || w == DubinsWord::LSR || w == DubinsWord::LRL) ?
         Turn::Left : Turn::Right;
}

Turn last_turn(DubinsWord w)
{
  return (w == DubinsWord::LSL || w == DubinsWord::RSL || w == DubinsWord::LRL) ?
         Turn::Left : Turn::Right;
}

void finish(DubinsCandidate & c, const DirectedPoint & x, const DirectedPoint & y,
  const std::array<CsStep, 3> & steps)
{
  c.path = CsPath::from_steps(x, steps);
  c.length = c.path.length();
  // Guard against round-off in nearly degenerate constructions.
  c.feasible = endpoint_residual(c.path, y) < 1e-7;
}

DubinsCandidate solve_csc(DubinsWord word, const DirectedPoint & x, const DirectedPoint & y)
{
  DubinsCandidate c;
  c.word = word;
  c.path = CsPath(x);
  const Turn t1 = first_turn(word);
  const Turn t2 = last_turn(word);
  const int s1 = turn_sign(t1);
  const int s2 = turn_sign(t2);
  const Vec2 c1 = turning_center(x.point, x.heading, t1);
  const Vec2 c2 = turning_center(y.point, y.heading, t2);
  const Vec2 v = c2 - c1;
  const double d = norm(v);
  Vec2 tangent;
  double seg = 0.0;
  if (s1 == s2) {
    if (d < kGeomTol) {
      tangent = y.direction();
    } else {
      tangent = v / d;
      seg = d;
    }
  } else {
    if (d < 2.0 - kGeomTol) {
      return c;
    }
    seg = std::sqrt(std::max(0.0, d * d - 4.0));
    // Complex division v / (seg - 2 s1 i).
    const double a = seg;
    const double b = 2.0 * s1;
    tangent = Vec2{v.x * a - v.y * b, v.x * b + v.y * a} / (d * d);
    tangent = tangent / norm(tangent);
  }
  const double h = angle_of(tangent);
  const double a1 = directed_sweep(x.heading, h, s1);
  const double a2 = directed_sweep(h, y.heading, s2);
  finish(c, x, y, {CsStep{ArcSegment::Kind::Arc, t1, a1},
      CsStep{ArcSegment::Kind::Line, Turn::Left, seg},
      CsStep{ArcSegment::Kind::Arc, t2, a2}});
  c.minimizer_form = c.feasible;
  return c;
}

DubinsCandidate solve_ccc(DubinsWord word, const DirectedPoint & x, const DirectedPoint & y)
{
  DubinsCandidate c;
  c.word = word;
  c.path = CsPath(x);
  const Turn t = first_turn(word);
  const int s = turn_sign(t);
  const Vec2 c1 = turning_center(x.point, x.heading, t);
  const Vec2 c3 = turning_center(y.point, y.heading, t);
  const Vec2 v = c3 - c1;
  const double d = norm(v);
  if (d > 4.0 + kGeomTol || d < kGeomTol) {
    return c;
  }
  const double h = std::sqrt(std::max(0.0, 4.0 - d * d / 4.0));
  const Vec2 mid = (c1 + c3) * 0.5;
  const Vec2 n = perp(v / d);
  bool have = false;
  for (const double side : {1.0, -1.0}) {
    const Vec2 c2 = mid + n * (side * h);
    const Vec2 q1 = (c1 + c2) * 0.5;
    const Vec2 q2 = (c2 + c3) * 0.5;
    const double h1 = angle_of(perp(q1 - c1) * s);
    const double h2 = angle_of(perp(q2 - c3) * s);
    const double a1 = directed_sweep(x.heading, h1, s);
    const double a2 = directed_sweep(h1, h2, -s);
    const double a3 = directed_sweep(h2, y.heading, s);
    DubinsCandidate trial;
    trial.word = word;
    finish(trial, x, y, {CsStep{ArcSegment::Kind::Arc, t, a1},
        CsStep{ArcSegment::Kind::Arc, opposite(t), a2},
        CsStep{ArcSegment::Kind::Arc, t, a3}});
    trial.middle_sweep = a2;
    if (trial.feasible && (!have || trial.length < c.length - kGeomTol)) {
      c = trial;
      have = true;
    }
  }
  c.minimizer_form = c.feasible && c.middle_sweep > kPi;
  return c;
}

}  // namespace

std::vector<DubinsCandidate> solve_all(const DirectedPoint & x, const DirectedPoint & y)
{
  std::vector<DubinsCandidate> out;
  out.reserve(kCanonicalWordOrder.size());
  for (const DubinsWord w : kCanonicalWordOrder) {
    out.push_back(is_ccc(w) ? solve_ccc(w, x, y) : solve_csc(w, x, y));
  }
  return out;
}

std::vector<DubinsCandidate> minimal_paths(const DirectedPoint & x, const DirectedPoint & y)
{
  const auto all = solve_all(x, y);
  double best = std::numeric_limits<double>::infinity();
  for (const auto & c : all) {
    if (c.feasible && c.minimizer_form) {
      best = std::min(best, c.length);
    }
  }
  std::vector<DubinsCandidate> out;
  for (const auto & c : all) {
    if (c.feasible && c.minimizer_form && c.length <= best + kGeomTol) {
      out.push_back(c);
    }
  }
  // Distinct words can produce the same stored path (degenerate forms); those are one minimizer.
  std::vector<DubinsCandidate> distinct;
  for (const auto & c : out) {
    const bool dup = std::any_of(distinct.begin(), distinct.end(), [&](const auto & o) {
          return o.path.word() == c.path.word() &&
          std::abs(o.path.total_turning() - c.path.total_turning()) < 1e-9;
        });
    if (!dup) {
      distinct.push_back(c);
    }
  }
  for (auto & c : distinct) {
    c.multiple_minimizers = distinct.size() > 1;
  }
  return distinct;
}

DubinsCandidate minimal_path(const DirectedPoint & x, const DirectedPoint & y)
{
  return minimal_paths(x, y).front();
}

std::string_view to_string(LoopPlacement placement)
{
  switch (placement) {
    case LoopPlacement::None: return "none";
    case LoopPlacement::FirstArc: return "first-arc";
    case LoopPlacement::MiddleArc: return "middle-arc";
    case LoopPlacement::LastArc: return "last-arc";
    case LoopPlacement::AtStart: return "at-start";
    case LoopPlacement::SegmentMiddle: return "segment-middle";
    case LoopPlacement::AtEnd: return "at-end";
  }
  return "?";
}

std::string_view to_string(ExtraArc extra)
{
  switch (extra) {
    case ExtraArc::None: return "none";
    case ExtraArc::Leading: return "leading";
    case ExtraArc::Trailing: return "trailing";
  }
  return "?";
}

int closed_winding(const CsPath & path, const CsPath & closure)
{
  const double w = (path.total_turning() + closure.total_turning()) / kTwoPi;
  const double r = std::round(w);
  if (std::abs(w - r) > 1e-9) {
    throw Error(ErrorCode::CorruptedLift, "closed turning is not a multiple of 2pi");
  }
  return static_cast<int>(r);
}

namespace
{

struct BasePath
{
  DubinsWord word{DubinsWord::LSL};
  ExtraArc extra{ExtraArc::None};
  std::vector<CsStep> steps;
};

constexpr std::array<DubinsWord, 4> kCscWords{
  DubinsWord::LSL, DubinsWord::RSR, DubinsWord::LSR, DubinsWord::RSL};

// Grid over the extra sweep; each winding's best cell is refined by golden section.
constexpr int kExtraSweepSamples = 360;
constexpr double kDegenerateGain = 1e-6;

struct FourComponent
{
  DubinsWord word;
  ExtraArc extra;
  Turn turn;
};

// Path of the family with extra sweep a, or nothing when the word does not exist.
std::optional<CsPath> four_component_path(
  const FourComponent & f, const DirectedPoint & x, const DirectedPoint & y, double a)
{
  const CsStep arc{ArcSegment::Kind::Arc, f.turn, a};
  if (f.extra == ExtraArc::Leading) {
    const auto z = CsPath(x).append_arc(f.turn, a).end();
    const auto c = solve_csc(f.word, z, y);
    if (!c.feasible) {
      return std::nullopt;
    }
    auto steps = c.path.steps();
    steps.insert(steps.begin(), arc);
    return CsPath::from_steps(x, steps);
  }
  // Run the trailing arc backwards from y: forward from the reversed pose on the
  // same circle.
  const auto back =
    CsPath(DirectedPoint::make(y.point, y.heading + kPi)).append_arc(opposite(f.turn), a).end();
  const auto z = DirectedPoint::make(back.point, back.heading + kPi);
  const auto c = solve_csc(f.word, x, z);
  if (!c.feasible) {
    return std::nullopt;
  }
  auto steps = c.path.steps();
  steps.push_back(arc);
  return CsPath::from_steps(x, steps);
}

// Shortest member of the family for each closed winding number reached.
void add_four_component(
  const FourComponent & f, const DirectedPoint & x, const DirectedPoint & y,
  double closure_turning, std::vector<BasePath> & out)
{
  const double inf = std::numeric_limits<double>::infinity();
  auto winding_of = [&](const CsPath & p) {
      return static_cast<int>(std::lround((p.total_turning() + closure_turning) / kTwoPi));
    };
  const double h = kTwoPi / kExtraSweepSamples;
  std::map<int, std::pair<double, double>> best;  // winding -> (length, sweep)
  for (int i = 0; i < kExtraSweepSamples; ++i) {
    const double a = h * (i + 0.5);
    const auto p = four_component_path(f, x, y, a);
    if (!p) {
      continue;
    }
    auto [it, fresh] = best.try_emplace(winding_of(*p), p->length(), a);
    if (!fresh && p->length() < it->second.first) {
      it->second = {p->length(), a};
    }
  }
  for (const auto & [w, seed] : best) {
    auto cost = [&, w = w](double a) {
        const auto p = four_component_path(f, x, y, a);
        return p && winding_of(*p) == w ? p->length() : inf;
      };
    double lo = std::max(seed.second - h, 0.5 * h * 1e-3);
    double hi = std::min(seed.second + h, kTwoPi - 0.5 * h * 1e-3);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double m1 = hi - g * (hi - lo);
    double m2 = lo + g * (hi - lo);
    double f1 = cost(m1);
    double f2 = cost(m2);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
      if (f1 <= f2) {
        hi = m2;
        m2 = m1;
        f2 = f1;
        m1 = hi - g * (hi - lo);
        f1 = cost(m1);
      } else {
        lo = m1;
        m1 = m2;
        f1 = f2;
        m2 = lo + g * (hi - lo);
        f2 = cost(m2);
      }
    }
    double a = seed.second;
    double fa = seed.first;
    for (const auto & [ca, cf] : {std::pair{m1, f1}, std::pair{m2, f2}}) {
      if (cf < fa) {
        a = ca;
        fa = cf;
      }
    }
    out.push_back({f.word, f.extra, four_component_path(f, x, y, a)->steps()});
  }
}

std::vector<BasePath> base_paths(
  const DirectedPoint & x, const DirectedPoint & y, double closure_turning)
{
  std::vector<BasePath> out;
  for (const auto & c : solve_all(x, y)) {
    if (c.feasible) {
      out.push_back({c.word, ExtraArc::None, c.path.steps()});
    }
  }
  std::vector<BasePath> extra;
  for (const auto word : kCscWords) {
    add_four_component({word, ExtraArc::Leading, opposite(first_turn(word))}, x, y,
      closure_turning, extra);
    add_four_component({word, ExtraArc::Trailing, opposite(last_turn(word))}, x, y,
      closure_turning, extra);
  }
  // Four-component forms degenerate into CCC words when the segment vanishes; keep
  // only those shorter than every Dubins path of the same winding.
  auto winding_of = [&](const BasePath & b) {
      return std::lround(
        (CsPath::from_steps(x, b.steps).total_turning() + closure_turning) / kTwoPi);
    };
  auto length_of = [&](const BasePath & b) {return CsPath::from_steps(x, b.steps).length();};
  const std::size_t dubins = out.size();
  for (auto & e : extra) {
    bool improves = true;
    for (std::size_t i = 0; i < dubins; ++i) {
      if (winding_of(out[i]) == winding_of(e) &&
        length_of(e) > length_of(out[i]) - kDegenerateGain)
      {
        improves = false;
      }
    }
    if (improves) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

std::vector<InClassCandidate> in_class_candidates(
  const DirectedPoint & x, const DirectedPoint & y, const CsPath & closure, int n, int loop_cap)
{
  if (loop_cap < 0) {
    throw Error(ErrorCode::InvalidParameter, "loop cap must be non-negative");
  }
  std::vector<InClassCandidate> out;
  const double closure_turning = closure.total_turning();
  for (const auto & base : base_paths(x, y, closure_turning)) {
    const auto & steps = base.steps;
    const CsPath base_path = CsPath::from_steps(x, steps);
    const double w0 = (base_path.total_turning() + closure_turning) / kTwoPi;
    const int base_winding = static_cast<int>(std::lround(w0));
    const int j = std::abs(n - base_winding);
    if (j > loop_cap) {
      continue;
    }
    const Turn t = n > base_winding ? Turn::Left : Turn::Right;
    const double extra = kTwoPi * j;
    auto emit = [&](LoopPlacement where, std::vector<CsStep> s) {
        InClassCandidate c;
        c.base_word = base.word;
        c.extra_arc = base.extra;
        c.placement = where;
        c.loops = j;
        c.path = CsPath::from_steps(x, s);
        c.length = c.path.length();
        c.winding = closed_winding(c.path, closure);
        if (c.winding == n && endpoint_residual(c.path, y) < 1e-7) {
          out.push_back(std::move(c));
        }
      };
    if (j == 0) {
      emit(LoopPlacement::None, steps);
      continue;
    }
    const CsStep loop{ArcSegment::Kind::Arc, t, extra};
    auto is_arc_of = [&](std::size_t i) {
        return i < steps.size() && steps[i].kind == ArcSegment::Kind::Arc && steps[i].turn == t;
      };
    if (is_arc_of(0)) {
      auto s = steps;
      s[0].amount += extra;
      emit(LoopPlacement::FirstArc, s);
    } else {
      auto s = steps;
      s.insert(s.begin(), loop);
      emit(LoopPlacement::AtStart, s);
    }
    for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
      if (is_arc_of(i)) {
        auto s = steps;
        s[i].amount += extra;
        emit(LoopPlacement::MiddleArc, s);
      }
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].kind == ArcSegment::Kind::Line) {
        auto s = steps;
        const double half = s[i].amount / 2.0;
        s[i].amount = half;
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i) + 1,
          {loop, CsStep{ArcSegment::Kind::Line, Turn::Left, half}});
        emit(LoopPlacement::SegmentMiddle, s);
        break;
      }
    }
    if (steps.size() > 1 && is_arc_of(steps.size() - 1)) {
      auto s = steps;
      s.back().amount += extra;
      emit(LoopPlacement::LastArc, s);
    } else if (!is_arc_of(steps.size() - 1)) {
      auto s = steps;
      s.push_back(loop);
      emit(LoopPlacement::AtEnd, s);
    }
  }
  return out;
}

CsPath minimal_path_in_class(
  const DirectedPoint & x, const DirectedPoint & y, const CsPath & closure, int n, int loop_cap)
{
  const auto cands = in_class_candidates(x, y, closure, n, loop_cap);
  if (cands.empty()) {
    throw Error(ErrorCode::ClassUnreachableAtCap,
            "no candidate reaches winding " + std::to_string(n) + " within the loop cap");
  }
  const InClassCandidate * best = &cands.front();
  for (const auto & c : cands) {
    if (c.length < best->length - kGeomTol) {
      best = &c;
    }
  }
  return best->path;
}

}  // namespace bcp
