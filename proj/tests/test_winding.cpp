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

#include <random>

#include "bcp/winding.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

TEST(TurningMap, BasicShapes)
{
  const auto o = DirectedPoint::make(0, 0, 0);
  EXPECT_NEAR(turning_map(CsPath(o).append_arc(Turn::Left, kTwoPi)).total(), kTwoPi, 1e-15);
  const auto seg = turning_map(CsPath(o).append_line(3));
  EXPECT_EQ(seg.at(0), seg.at(1.5));
  EXPECT_EQ(seg.at(1.5), seg.at(3));
  CsPath lsl(o);
  lsl.append_arc(Turn::Left, kPi / 2).append_line(1).append_arc(Turn::Left, kPi / 2);
  EXPECT_NEAR(turning_map(lsl).total(), kPi, 1e-15);
}

TEST(TurningMap, ReconstructsHeadingsAndRespectsSlopeBound)
{
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_cscsc(rng, testing::random_point(rng));
    const auto tau = turning_map(p);
    EXPECT_NEAR(tau.breakpoints.front().tau, p.start().heading, 0.0);
    for (std::size_t k = 1; k < tau.breakpoints.size(); ++k) {
      const auto & a = tau.breakpoints[k - 1];
      const auto & b = tau.breakpoints[k];
      EXPECT_LE(std::abs(b.tau - a.tau), (b.s - a.s) + 1e-12);
    }
    for (const auto & s : sample_path(p, 0.05).samples) {
      EXPECT_NEAR(normalize_angle(tau.at(s.s) - s.heading), 0.0, 1e-9);
    }
  }
}

TEST(RelativeWinding, CirclesAndSegments)
{
  const auto o = DirectedPoint::make(0, 0, 0);
  const auto ccw = relative_winding(CsPath(o).append_arc(Turn::Left, kTwoPi));
  EXPECT_NEAR(ccw.rho, 1.0, 1e-12);
  EXPECT_TRUE(ccw.integral);
  EXPECT_NEAR(relative_winding(CsPath(o).append_line(2)).rho, 0.0, 0.0);
  EXPECT_NEAR(relative_winding(CsPath(o).append_arc(Turn::Right, kTwoPi)).rho, -1.0, 1e-12);
}

TEST(Closure, PinnedCanonicalMinimum)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto c = make_closure(x, y);
  EXPECT_TRUE(c.pinned);
  EXPECT_TRUE(c.tie_broken);
  EXPECT_EQ(c.word, DubinsWord::LSL);
  EXPECT_NEAR(c.path.length(), 4 + kTwoPi, 1e-12);
  EXPECT_LT(endpoint_residual(c.path, x), 1e-12);
  // Rebuilding gives the same closure.
  const auto again = make_closure(x, y);
  EXPECT_EQ(again.path.word(), c.path.word());
}

TEST(Winding, EmbeddedConvexLoopHasUnitWinding)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto c = make_closure(x, y);
  const auto m = minimal_path(x, y);
  EXPECT_EQ(std::abs(winding_number(m.path, c)), 1);
  EXPECT_EQ(transversal_crossings(m.path, c.path), 0);
  EXPECT_EQ(class_index_k(x, y, c).k, 1);
}

TEST(Winding, ConditionAPairInAdjacentClasses)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto c = make_closure(x, y);
  CsPath straight(x);
  straight.append_line(4);
  CsPath looped(x);
  looped.append_line(2).append_arc(Turn::Right, kTwoPi).append_line(2);
  EXPECT_EQ(winding_number(straight, c), 1);
  EXPECT_EQ(winding_number(looped, c), 0);
}

TEST(Winding, LoopAtEndIncrementsByOne)
{
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto c = make_closure(x, y);
    const auto m = minimal_path(x, y).path;
    CsPath plus = m;
    plus.append_arc(Turn::Left, kTwoPi);
    CsPath minus = m;
    minus.append_arc(Turn::Right, kTwoPi);
    const int n = winding_number(m, c);
    EXPECT_EQ(winding_number(plus, c), n + 1);
    EXPECT_EQ(winding_number(minus, c), n - 1);
  }
}

TEST(Winding, SampledAgreesWithAnalytic)
{
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    const auto x = testing::random_point(rng);
    const auto p = testing::random_cscsc(rng, x);
    const auto c = make_closure(x, p.end());
    EXPECT_EQ(winding_number(sample_path(p, 0.05), c), winding_number(p, c));
  }
}

TEST(Winding, RejectsPathWithWrongEndpoints)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto c = make_closure(x, DirectedPoint::make(4, 0, 0));
  CsPath p(x);
  p.append_line(3);
  EXPECT_THROW(winding_number(p, c), Error);
}

TEST(ClassIndex, WithinExpectedRangeAndNegatedByReflection)
{
  std::mt19937 rng(47);
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_point(rng);
    const auto y = testing::random_point(rng);
    const auto ci = class_index_k(x, y, make_closure(x, y));
    EXPECT_TRUE(ci.in_expected_range) << ci.k;
    const auto xr = reflect_x(x);
    const auto yr = reflect_x(y);
    const auto cr = class_index_k(xr, yr, make_closure(xr, yr));
    if (std::abs(ci.k) == 1 && ci.minimizers.size() == 1 && cr.minimizers.size() == 1 &&
      !make_closure(x, y).tie_broken)
    {
      EXPECT_EQ(cr.k, -ci.k);
    }
  }
}

}  // namespace
}  // namespace bcp
