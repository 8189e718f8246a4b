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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "bcp/dubins.hpp"
#include "bcp/winding.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

double mod2pi(double a) {return wrap_two_pi(a);}

// Independent oracle: the classical normalized (alpha, beta, d) formulas for the
// six Dubins words. The CCC branch is the one with middle arc above pi.
double reference_dubins_length(const DirectedPoint & x, const DirectedPoint & y)
{
  const double dx = y.point.x - x.point.x;
  const double dy = y.point.y - x.point.y;
  const double d = std::hypot(dx, dy);
  const double th = d > 0 ? mod2pi(std::atan2(dy, dx)) : 0.0;
  const double a = mod2pi(x.heading - th);
  const double b = mod2pi(y.heading - th);
  const double sa = std::sin(a);
  const double sb = std::sin(b);
  const double ca = std::cos(a);
  const double cb = std::cos(b);
  const double cab = std::cos(a - b);
  const double inf = std::numeric_limits<double>::infinity();
  double best = inf;
  {
    const double p2 = 2 + d * d - 2 * cab + 2 * d * (sa - sb);
    if (p2 >= 0) {
      const double t1 = std::atan2(cb - ca, d + sa - sb);
      best = std::min(best, mod2pi(t1 - a) + std::sqrt(p2) + mod2pi(b - t1));
    }
  }
  {
    const double p2 = 2 + d * d - 2 * cab + 2 * d * (sb - sa);
    if (p2 >= 0) {
      const double t1 = std::atan2(ca - cb, d - sa + sb);
      best = std::min(best, mod2pi(a - t1) + std::sqrt(p2) + mod2pi(t1 - b));
    }
  }
  {
    const double p2 = -2 + d * d + 2 * cab + 2 * d * (sa + sb);
    if (p2 >= 0) {
      const double p = std::sqrt(p2);
      const double t2 = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
      best = std::min(best, mod2pi(t2 - a) + p + mod2pi(t2 - b));
    }
  }
  {
    const double p2 = -2 + d * d + 2 * cab - 2 * d * (sa + sb);
    if (p2 >= 0) {
      const double p = std::sqrt(p2);
      const double t2 = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
      best = std::min(best, mod2pi(a - t2) + p + mod2pi(b - t2));
    }
  }
  {
    const double t0 = (6 - d * d + 2 * cab + 2 * d * (sa - sb)) / 8;
    if (std::abs(t0) <= 1) {
      const double phi = std::atan2(ca - cb, d - sa + sb);
      const double p = mod2pi(kTwoPi - std::acos(t0));
      const double t = mod2pi(a - phi + mod2pi(p / 2));
      const double q = mod2pi(a - b - t + mod2pi(p));
      best = std::min(best, t + p + q);
    }
  }
  {
    const double t0 = (6 - d * d + 2 * cab + 2 * d * (sb - sa)) / 8;
    if (std::abs(t0) <= 1) {
      const double phi = std::atan2(ca - cb, d + sa - sb);
      const double p = mod2pi(kTwoPi - std::acos(t0));
      const double t = mod2pi(-a - phi + p / 2);
      const double q = mod2pi(mod2pi(b) - a - t + mod2pi(p));
      best = std::min(best, t + p + q);
    }
  }
  return best;
}

TEST(Dubins, CollinearSameHeadingIsStraight)
{
  const auto m = minimal_path(DirectedPoint::make(0, 0, 0), DirectedPoint::make(4, 0, 0));
  EXPECT_NEAR(m.length, 4.0, 1e-12);
  EXPECT_EQ(m.label(), "S-degenerate CSC");
  EXPECT_EQ(m.word, DubinsWord::LSL);
}

TEST(Dubins, SharedLeftCircleGivesSingleArc)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(0, 2, kPi);
  const auto cx = adjacent_circles(x);
  const auto cy = adjacent_circles(y);
  EXPECT_NEAR(distance(cx.left.center, cy.left.center), 0.0, 1e-12);
  const auto all = solve_all(x, y);
  const auto & lsl = all[0];
  ASSERT_TRUE(lsl.feasible);
  EXPECT_EQ(lsl.path.word(), "L");
  EXPECT_NEAR(lsl.length, kPi, 1e-12);
  EXPECT_EQ(lsl.label(), "L-degenerate CSC");
}

TEST(Dubins, CoincidentEndpointsGiveEmptyPath)
{
  const auto x = DirectedPoint::make(1, 2, 0.3);
  const auto m = minimal_path(x, x);
  EXPECT_NEAR(m.length, 0.0, 1e-12);
}

TEST(Dubins, MatchesClassicalFormulasOnRandomPairs)
{
  std::mt19937 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto m = minimal_path(x, y);
    EXPECT_NEAR(m.length, reference_dubins_length(x, y), 1e-8) << i;
  }
}

TEST(Dubins, FeasibleCandidatesAreValidPaths)
{
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto all = solve_all(x, y);
    ASSERT_EQ(all.size(), 6u);
    const auto m = minimal_path(x, y);
    for (const auto & c : all) {
      if (!c.feasible) {
        continue;
      }
      EXPECT_LT(endpoint_residual(c.path, y), 1e-9);
      if (c.path.length() > 0) {
        const auto rep = validate_bounded_curvature(sample_path(c.path, 0.02), 0.08, x, y);
        EXPECT_TRUE(rep.valid);
      }
      if (c.minimizer_form) {
        EXPECT_LE(m.length, c.length + 1e-12);
      }
      if (is_ccc(c.word)) {
        EXPECT_EQ(c.minimizer_form, c.middle_sweep > kPi);
      }
    }
  }
}

TEST(Dubins, ReflectionSwapsWordsAndKeepsLength)
{
  std::mt19937 rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto a = minimal_path(x, y);
    const auto b = minimal_path(reflect_x(x), reflect_x(y));
    EXPECT_NEAR(a.length, b.length, 1e-9);
    if (!a.multiple_minimizers && !b.multiple_minimizers) {
      std::string w = a.path.word();
      for (auto & ch : w) {
        ch = ch == 'L' ? 'R' : (ch == 'R' ? 'L' : ch);
      }
      EXPECT_EQ(w, b.path.word());
    }
  }
}

TEST(Dubins, TimeReversalPreservesLength)
{
  std::mt19937 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto xr = DirectedPoint::make(x.point, x.heading + kPi);
    const auto yr = DirectedPoint::make(y.point, y.heading + kPi);
    EXPECT_NEAR(minimal_path(x, y).length, minimal_path(yr, xr).length, 1e-9);
  }
}

TEST(Dubins, InnerTangentNeedsSeparatedCircles)
{
  // c_l(x) = (0,1), c_r(y) = (0.5,1): distance below 2, so LSR does not exist.
  const auto all = solve_all(DirectedPoint::make(0, 0, 0), DirectedPoint::make(0.5, 2, 0));
  EXPECT_FALSE(all[2].feasible);
}

TEST(InClass, ZeroExtraLoopsIsTheMinimum)
{
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto cl = make_closure(x, y);
    const auto k = class_index_k(x, y, cl).k;
    const auto m = minimal_path(x, y);
    const auto p = minimal_path_in_class(x, y, cl.path, k);
    EXPECT_NEAR(p.length(), m.length, 1e-9);
    for (int n = k - 3; n <= k + 3; ++n) {
      const auto q = minimal_path_in_class(x, y, cl.path, n);
      EXPECT_EQ(winding_number(q, cl), n);
      EXPECT_GE(q.length(), m.length - 1e-9);
      EXPECT_LT(endpoint_residual(q, y), 1e-9);
    }
    EXPECT_LE(minimal_path_in_class(x, y, cl.path, k + 1).length(), m.length + kTwoPi + 1e-9);
  }
}

TEST(InClass, StraightExampleNextClass)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto cl = make_closure(x, y);
  const int k = class_index_k(x, y, cl).k;
  const auto p = minimal_path_in_class(x, y, cl.path, k + 1);
  EXPECT_NEAR(p.length(), 4 + kTwoPi, 1e-9);
  const auto rep = validate_bounded_curvature(sample_path(p, 0.02), 0.08, x, y);
  EXPECT_TRUE(rep.valid);
}

TEST(InClass, FourComponentFormBeatsLoopedDubinsWords)
{
  // Near pair whose winding-0 minimum has a leading arc before an RSR-type word;
  // the lattice oracle found a path of length 7.56 in this class.
  const auto x = DirectedPoint::make(-0.670158, -1.91719, 2.18127);
  const auto y = DirectedPoint::make(0.113609, -3.80193, -1.69927);
  const auto cl = make_closure(x, y);
  double dubins_best = std::numeric_limits<double>::infinity();
  for (const auto & c : in_class_candidates(x, y, cl.path, 0)) {
    if (c.extra_arc == ExtraArc::None) {
      dubins_best = std::min(dubins_best, c.length);
    }
  }
  const auto p = minimal_path_in_class(x, y, cl.path, 0);
  EXPECT_EQ(winding_number(p, cl), 0);
  EXPECT_LT(p.length(), 7.56);
  EXPECT_GT(dubins_best, 11.0);
  EXPECT_LT(endpoint_residual(p, y), 1e-9);
  EXPECT_TRUE(validate_bounded_curvature(sample_path(p, 0.02), 0.08, x, y).valid);
}

TEST(InClass, UnreachableAtCap)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto cl = make_closure(x, y);
  try {
    minimal_path_in_class(x, y, cl.path, 7, 2);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassUnreachableAtCap);
  }
}

}  // namespace
}  // namespace bcp
