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


#include "bcp/lattice_oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>

#include "bcp/error.hpp"

namespace bcp
{

int LatticeConfig::bins() const
{
  return heading_bins > 0 ? heading_bins :
         std::max(8, static_cast<int>(std::lround(kTwoPi / (1.5 * position_step))));
}

double LatticeConfig::primitive_length() const
{
  return kTwoPi / bins();
}

namespace
{

enum Primitive : std::int8_t { kLeft = 0, kStraight = 1, kRight = 2, kNone = -1 };

struct Node
{
  Vec2 p;
  std::int32_t parent;
  std::int32_t j;
  Primitive prim;
};

struct QueueItem
{
  double f;
  double g;
  std::uint64_t key;
  std::uint32_t node;
};

struct QueueOrder
{
  bool operator()(const QueueItem & a, const QueueItem & b) const
  {
    if (a.f != b.f) {
      return a.f > b.f;
    }
    if (a.key != b.key) {
      return a.key > b.key;
    }
    return a.node > b.node;
  }
};

struct Problem
{
  DirectedPoint x;
  DirectedPoint y;
  /// Lifted-turning target in the in-class search.
  std::optional<double> turning;
};

struct LatticePath
{
  std::vector<Primitive> prims;
  long j{0};
  std::size_t expansions{0};
};

// Pose lattice with continuous positions, exact headings x.heading + j dth and
// one representative pose per (cell, heading) key.
class Lattice
{
public:
  Lattice(const Problem & pb, const LatticeConfig & cfg)
  : pb_(pb), cfg_(cfg), nbins_(cfg.bins()), dth_(kTwoPi / nbins_),
    h_(0.5 * cfg.position_step)
  {
    if (!(cfg.position_step > 0.0) || !(cfg.goal_tolerance >= 0.0) || !(cfg.margin >= 0.0)) {
      throw Error(ErrorCode::InvalidParameter, "lattice steps and tolerances must be positive");
    }
    lo_ = {std::min(pb.x.point.x, pb.y.point.x) - cfg.margin,
      std::min(pb.x.point.y, pb.y.point.y) - cfg.margin};
    const Vec2 hi{std::max(pb.x.point.x, pb.y.point.x) + cfg.margin,
      std::max(pb.x.point.y, pb.y.point.y) + cfg.margin};
    w_ = static_cast<long>(std::ceil((hi.x - lo_.x) / h_));
    ht_ = static_cast<long>(std::ceil((hi.y - lo_.y) / h_));
    if (pb.turning) {
      const long t = std::lround(*pb.turning / dth_);
      jmin_ = std::min(0L, t) - nbins_;
      jmax_ = std::max(0L, t) + nbins_;
    } else {
      jmin_ = 0;
      jmax_ = nbins_ - 1;
    }
    // Chord displacements of the three primitives for every heading bin.
    const double sn = std::sin(dth_);
    const double cs = 1.0 - std::cos(dth_);
    moves_.resize(static_cast<std::size_t>(nbins_));
    for (int j = 0; j < nbins_; ++j) {
      const Vec2 d = unit(pb.x.heading + j * dth_);
      moves_[j] = {d * sn + perp(d) * cs, d * dth_, d * sn - perp(d) * cs};
    }
    nodes_.push_back({pb.x.point, -1, 0, kNone});
  }

  std::size_t states() const {return static_cast<std::size_t>(w_ * ht_ * (jmax_ - jmin_ + 1));}
  double dth() const {return dth_;}
  const Node & node(std::uint32_t n) const {return nodes_[n];}

  std::optional<std::uint64_t> key_of(const Vec2 & p, long j) const
  {
    const long ix = static_cast<long>(std::floor((p.x - lo_.x) / h_));
    const long iy = static_cast<long>(std::floor((p.y - lo_.y) / h_));
    if (ix < 0 || iy < 0 || ix >= w_ || iy >= ht_) {
      return std::nullopt;
    }
    long jj;
    if (pb_.turning) {
      if (j < jmin_ || j > jmax_) {
        return std::nullopt;
      }
      jj = j - jmin_;
    } else {
      jj = ((j % nbins_) + nbins_) % nbins_;
    }
    return static_cast<std::uint64_t>((jj * ht_ + iy) * w_ + ix);
  }

  double heading_gap(long j) const
  {
    if (pb_.turning) {
      return std::abs(j * dth_ - *pb_.turning);
    }
    return std::abs(normalize_angle(pb_.x.heading + j * dth_ - pb_.y.heading));
  }

  /// Admissible bound: remaining distance and remaining turning.
  double heuristic(const Vec2 & p, long j) const
  {
    const double d = distance(p, pb_.y.point) - cfg_.tolerance();
    const double t = heading_gap(j) - 0.5 * dth_;
    return std::max({0.0, d, t});
  }

  bool is_goal(std::uint32_t n) const
  {
    const Node & c = nodes_[n];
    return distance(c.p, pb_.y.point) <= cfg_.tolerance() &&
           heading_gap(c.j) <= 0.5 * dth_ + 1e-12;
  }

  struct Successor
  {
    Vec2 p;
    long j;
    Primitive prim;
  };

  std::array<Successor, 3> successors(std::uint32_t n) const
  {
    const Node & c = nodes_[n];
    const auto & mv = moves_[static_cast<std::size_t>(((c.j % nbins_) + nbins_) % nbins_)];
    return {Successor{c.p + mv[0], c.j + 1, kLeft}, Successor{c.p + mv[1], c.j, kStraight},
      Successor{c.p + mv[2], c.j - 1, kRight}};
  }

  std::uint32_t add(const Successor & s, std::uint32_t parent)
  {
    nodes_.push_back({s.p, static_cast<std::int32_t>(parent), static_cast<std::int32_t>(s.j),
        s.prim});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  LatticePath trace(std::uint32_t n, std::size_t expansions) const
  {
    LatticePath out;
    out.j = nodes_[n].j;
    out.expansions = expansions;
    for (auto i = static_cast<std::int32_t>(n); nodes_[i].parent >= 0; i = nodes_[i].parent) {
      out.prims.push_back(nodes_[i].prim);
    }
    std::reverse(out.prims.begin(), out.prims.end());
    return out;
  }

private:
  const Problem & pb_;
  const LatticeConfig & cfg_;
  int nbins_;
  double dth_;
  double h_;
  Vec2 lo_;
  long w_{0};
  long ht_{0};
  long jmin_{0};
  long jmax_{0};
  std::vector<std::array<Vec2, 3>> moves_;
  std::vector<Node> nodes_;
};

// Uniform edge costs make uniform-cost search a breadth-first sweep. Each level
// is expanded in key order so ties resolve lexicographically.
LatticePath breadth_first(Lattice & lat, const LatticeConfig & cfg)
{
  std::vector<std::uint8_t> seen(lat.states(), 0);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> level;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> next;
  const auto k0 = lat.key_of(lat.node(0).p, 0);
  if (!k0) {
    throw Error(ErrorCode::OracleUnreachable, "start outside the search box");
  }
  seen[*k0] = 1;
  level.emplace_back(*k0, 0);
  std::size_t expansions = 0;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (const auto & [key, n] : level) {
      if (++expansions > cfg.max_expansions) {
        throw Error(ErrorCode::OracleUnreachable, "expansion budget exhausted");
      }
      if (lat.is_goal(n)) {
        return lat.trace(n, expansions);
      }
      for (const auto & s : lat.successors(n)) {
        const auto nk = lat.key_of(s.p, s.j);
        if (nk && !seen[*nk]) {
          seen[*nk] = 1;
          next.emplace_back(*nk, lat.add(s, n));
        }
      }
    }
    level.swap(next);
    next.clear();
  }
  throw Error(ErrorCode::OracleUnreachable, "goal not reached at this lattice resolution");
}

LatticePath best_first(Lattice & lat, const LatticeConfig & cfg)
{
  std::vector<float> best(lat.states(), std::numeric_limits<float>::infinity());
  std::vector<std::uint8_t> closed(lat.states(), 0);
  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueOrder> open;
  const auto k0 = lat.key_of(lat.node(0).p, 0);
  if (!k0) {
    throw Error(ErrorCode::OracleUnreachable, "start outside the search box");
  }
  open.push({lat.heuristic(lat.node(0).p, 0), 0.0, *k0, 0});
  best[*k0] = 0.0f;
  std::size_t expansions = 0;
  while (!open.empty()) {
    const QueueItem it = open.top();
    open.pop();
    if (closed[it.key]) {
      continue;
    }
    closed[it.key] = 1;
    if (++expansions > cfg.max_expansions) {
      throw Error(ErrorCode::OracleUnreachable, "expansion budget exhausted");
    }
    if (lat.is_goal(it.node)) {
      return lat.trace(it.node, expansions);
    }
    for (const auto & s : lat.successors(it.node)) {
      const auto nk = lat.key_of(s.p, s.j);
      const double g = it.g + lat.dth();
      if (!nk || closed[*nk] || g >= best[*nk]) {
        continue;
      }
      best[*nk] = static_cast<float>(g);
      open.push({g + lat.heuristic(s.p, s.j), g, *nk, lat.add(s, it.node)});
    }
  }
  throw Error(ErrorCode::OracleUnreachable, "goal not reached at this lattice resolution");
}

LatticePath search(const Problem & pb, const LatticeConfig & cfg)
{
  Lattice lat(pb, cfg);
  return cfg.use_heuristic ? best_first(lat, cfg) : breadth_first(lat, cfg);
}

// Solves the 3x3 system m z = r by Cramer's rule.
std::array<double, 3> solve3(const std::array<std::array<double, 3>, 3> & m, const std::array<double, 3> & r)
{
  auto det = [](const std::array<std::array<double, 3>, 3> & a) {
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
  const double d = det(m);
  std::array<double, 3> z{};
  for (int c = 0; c < 3; ++c) {
    auto mc = m;
    for (int r0 = 0; r0 < 3; ++r0) {
      mc[r0][c] = r[r0];
    }
    z[c] = det(mc) / d;
  }
  return z;
}

struct Repair
{
  std::vector<double> amounts;
  bool converged{false};
};

// Damped Gauss-Newton on the primitive amounts so the path ends exactly at y
// with the lifted end heading `target_heading`.
Repair repair(
  const DirectedPoint & x, const Vec2 & target, double target_heading,
  const std::vector<Primitive> & prims, double amount)
{
  Repair rp;
  rp.amounts.assign(prims.size(), amount);
  const std::size_t n = prims.size();
  std::vector<std::array<double, 3>> jac(n);
  for (int iter = 0; iter < 50; ++iter) {
    Vec2 p = x.point;
    double th = x.heading;
    std::vector<Vec2> centers(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = rp.amounts[i];
      if (prims[i] == kStraight) {
        jac[i] = {std::cos(th), std::sin(th), 0.0};
        p += unit(th) * a;
      } else {
        const double sg = prims[i] == kLeft ? 1.0 : -1.0;
        centers[i] = p + perp(unit(th)) * sg;
        p = centers[i] + rotate(p - centers[i], sg * a);
        th += sg * a;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (prims[i] != kStraight) {
        const double sg = prims[i] == kLeft ? 1.0 : -1.0;
        const Vec2 v = perp(p - centers[i]) * sg;
        jac[i] = {v.x, v.y, sg};
      }
    }
    const std::array<double, 3> res{target.x - p.x, target.y - p.y, target_heading - th};
    if (std::max({std::abs(res[0]), std::abs(res[1]), std::abs(res[2])}) < 1e-12) {
      rp.converged = true;
      return rp;
    }
    std::array<std::array<double, 3>, 3> m{};
    for (std::size_t i = 0; i < n; ++i) {
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          m[a][b] += jac[i][a] * jac[i][b];
        }
      }
    }
    for (int a = 0; a < 3; ++a) {
      m[a][a] += 1e-12;
    }
    const auto lam = solve3(m, res);
    for (std::size_t i = 0; i < n; ++i) {
      const double da = jac[i][0] * lam[0] + jac[i][1] * lam[1] + jac[i][2] * lam[2];
      rp.amounts[i] = std::max(0.0, rp.amounts[i] + da);
    }
  }
  return rp;
}

OracleResult run(const Problem & pb, const LatticeConfig & cfg)
{
  const auto t0 = std::chrono::steady_clock::now();
  const auto lp = search(pb, cfg);
  const double dth = cfg.primitive_length();
  OracleResult out;
  out.expansions = lp.expansions;
  out.turning_bins = lp.j;
  out.lattice_length = static_cast<double>(lp.prims.size()) * dth;
  const double lattice_end = pb.x.heading + lp.j * dth;
  const double target_heading = pb.turning ? pb.x.heading + *pb.turning :
    lattice_end + normalize_angle(pb.y.heading - lattice_end);
  const auto rp = repair(pb.x, pb.y.point, target_heading, lp.prims, dth);
  std::vector<CsStep> steps;
  for (std::size_t i = 0; i < lp.prims.size(); ++i) {
    const auto pr = lp.prims[i];
    steps.push_back(
      pr == kStraight ? CsStep{ArcSegment::Kind::Line, Turn::Left, rp.amounts[i]} :
      CsStep{ArcSegment::Kind::Arc, pr == kLeft ? Turn::Left : Turn::Right, rp.amounts[i]});
  }
  out.path = CsPath::from_steps(pb.x, steps).canonical();
  out.length = out.path.length();
  out.residual = endpoint_residual(out.path, pb.y);
  out.repaired = rp.converged && out.residual < 1e-9;
  if (out.length > 0.0) {
    for (const auto & s : sample_path(out.path, cfg.position_step).samples) {
      out.polyline.push_back(s.position);
    }
  } else {
    out.polyline.push_back(pb.x.point);
  }
  out.runtime_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

OracleResult shortest_path(const DirectedPoint & x, const DirectedPoint & y, const LatticeConfig & cfg)
{
  return run({x, y, std::nullopt}, cfg);
}

OracleResult shortest_path_in_class(
  const DirectedPoint & x, const DirectedPoint & y, const ClosurePath & closure, int n,
  const LatticeConfig & cfg)
{
  // Turning of the path so that path + closure turns by 2 pi n.
  const double turning = kTwoPi * n - closure.path.total_turning();
  return run({x, y, turning}, cfg);
}

}  // namespace bcp
