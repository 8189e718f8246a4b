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

#include <cmath>
#include <random>

#include "bcp/proximity.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

TEST(Proximity, ConditionAOnStraightPair)
{
  const auto r = classify(DirectedPoint::make(0, 0, 0), DirectedPoint::make(4, 0, 0));
  EXPECT_NEAR(r.d_ll, 4.0, 1e-15);
  EXPECT_NEAR(r.d_rr, 4.0, 1e-15);
  EXPECT_EQ(r.raw, RawCondition::I);
  EXPECT_EQ(r.condition, Condition::A);
  EXPECT_TRUE(r.boundary);
  EXPECT_FALSE(r.subcase);
}

TEST(Proximity, ConditionBOnSharedLeftCircle)
{
  const auto r = classify(DirectedPoint::make(0, 0, 0), DirectedPoint::make(0, 2, kPi));
  EXPECT_NEAR(r.d_ll, 0.0, 1e-12);
  EXPECT_NEAR(r.d_rr, 4.0, 1e-12);
  EXPECT_EQ(r.raw, RawCondition::II);
  EXPECT_EQ(r.condition, Condition::B);
}

TEST(Proximity, OmegaOnCloseParallelPair)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(1, 0, 0);
  const auto r = classify(x, y, 0.01);
  EXPECT_NEAR(r.d_ll, 1.0, 1e-12);
  EXPECT_EQ(r.raw, RawCondition::IV);
  EXPECT_EQ(r.condition, Condition::D);
  ASSERT_TRUE(r.subcase);
  EXPECT_EQ(*r.subcase, DSubcase::OmegaRegion);
  ASSERT_TRUE(r.omega);
  EXPECT_TRUE(r.omega->contains({0.5, 0.0}));
  EXPECT_FALSE(r.omega->contains({5, 5}));
  EXPECT_FALSE(r.omega->contains({0.5, 0.9}));
  EXPECT_GT(r.omega->area(), 0.05);
  EXPECT_LT(r.omega->area(), 2.0);
}

TEST(Proximity, OmegaCellsLieOutsideAllDisks)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(1, 0, 0);
  const auto om = detect_omega(x, y, 0.02);
  ASSERT_TRUE(om);
  const auto r = classify(x, y);
  for (int j = 0; j < om->ny(); ++j) {
    for (int i = 0; i < om->nx(); ++i) {
      if (!om->cell(i, j)) {
        continue;
      }
      EXPECT_NE(i, 0);
      EXPECT_NE(j, 0);
      // Cells on the cusp axes may reach one cell diagonal into a disk.
      for (const auto & c : r.centers) {
        EXPECT_GE(distance(om->cell_center(i, j), c), 1.0 - std::sqrt(2.0) * om->resolution());
      }
    }
  }
  // Exact membership never enters a disk.
  for (int j = 0; j < om->ny(); ++j) {
    for (int i = 0; i < om->nx(); ++i) {
      const Vec2 p = om->cell_center(i, j);
      if (om->contains(p)) {
        for (const auto & c : r.centers) {
          EXPECT_GE(distance(p, c), 1.0 - 1e-9);
        }
      }
    }
  }
}

TEST(Proximity, OmegaRejectsBadResolution)
{
  EXPECT_THROW(
    detect_omega(DirectedPoint::make(0, 0, 0), DirectedPoint::make(1, 0, 0), 0.0), Error);
}

TEST(Proximity, SingleArcDetection)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto a = detect_single_arc(x, DirectedPoint::make(1, 1, kPi / 2));
  ASSERT_TRUE(a);
  EXPECT_NEAR(a->circle.center.x, 0.0, 1e-12);
  EXPECT_NEAR(a->circle.center.y, 1.0, 1e-12);
  EXPECT_NEAR(a->sweep, kPi / 2, 1e-12);
  bool boundary = false;
  EXPECT_FALSE(detect_single_arc(x, DirectedPoint::make(0, 2, kPi), &boundary));
  EXPECT_TRUE(boundary);
  EXPECT_FALSE(detect_single_arc(x, DirectedPoint::make(1, 0, 0)));
  const auto r = classify(x, DirectedPoint::make(1, 1, kPi / 2));
  EXPECT_EQ(r.condition, Condition::D);
  EXPECT_EQ(*r.subcase, DSubcase::SingleArc);
  EXPECT_FALSE(r.omega);
}

TEST(Proximity, TwoArcDetectionFromForwardConstruction)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  CsPath p(x);
  p.append_arc(Turn::Right, kPi / 3).append_arc(Turn::Left, kPi / 3);
  const auto two = detect_two_arc(x, p.end());
  ASSERT_TRUE(two);
  EXPECT_NEAR(two->first.sweep, kPi / 3, 1e-9);
  EXPECT_NEAR(two->second.sweep, kPi / 3, 1e-9);
  EXPECT_EQ(two->first.circle.orientation, Turn::Right);
  EXPECT_FALSE(detect_single_arc(x, p.end()));
  EXPECT_FALSE(detect_two_arc(x, DirectedPoint::make(4, 0, 0)));
  const auto r = classify(x, p.end());
  EXPECT_EQ(*r.subcase, DSubcase::TwoArc);
}

TEST(Proximity, ArcSubcasesAreMutuallyExclusive)
{
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> sweep(0.05, kPi - 0.05);
  for (int i = 0; i < 500; ++i) {
    const auto x = testing::random_point(rng);
    const Turn t = (i % 2) ? Turn::Left : Turn::Right;
    CsPath p(x);
    p.append_arc(t, sweep(rng));
    if (i % 3 == 0) {
      p.append_arc(opposite(t), sweep(rng));
    }
    const bool one = detect_single_arc(x, p.end()).has_value();
    const bool two = detect_two_arc(x, p.end()).has_value();
    EXPECT_FALSE(one && two);
    EXPECT_TRUE(one || two);
  }
}

TEST(Proximity, ConditionCWithWitness)
{
  const auto r = classify(DirectedPoint::make(0, 0, 0), DirectedPoint::make(0, 0, kPi));
  EXPECT_EQ(r.raw, RawCondition::IV);
  EXPECT_EQ(r.condition, Condition::C);
  ASSERT_TRUE(r.c_witness);
  EXPECT_FALSE(r.c_witness_failed);
  EXPECT_LT(endpoint_residual(*r.c_witness, DirectedPoint::make(0, 0, kPi)), 1e-9);
}

TEST(Proximity, ReflectionSwapsIiAndIii)
{
  std::mt19937 rng(61);
  int hits = 0;
  for (int i = 0; i < 300; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto a = classify(x, y, 0.02);
    const auto b = classify(reflect_x(x), reflect_x(y), 0.02);
    if (a.raw == RawCondition::II) {
      EXPECT_EQ(b.raw, RawCondition::III);
      ++hits;
    } else if (a.raw == RawCondition::III) {
      EXPECT_EQ(b.raw, RawCondition::II);
      ++hits;
    } else {
      EXPECT_EQ(a.raw, b.raw);
    }
    EXPECT_EQ(a.condition, b.condition) << x.point.x << "," << x.point.y << "," << x.heading << " -> " << y.point.x << "," << y.point.y << "," << y.heading;
    if (a.raw == RawCondition::IV) {
      EXPECT_LT(distance(x.point, y.point), 4.0);
    }
  }
  EXPECT_GT(hits, 10);
}

TEST(Proximity, ResolutionStability)
{
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  for (int i = 0; i < 6; ++i) {
    const auto x = DirectedPoint::make(jitter(rng), jitter(rng), jitter(rng));
    const auto y = DirectedPoint::make(1 + jitter(rng), jitter(rng), jitter(rng));
    const bool coarse = detect_omega(x, y, 0.02).has_value();
    EXPECT_EQ(coarse, detect_omega(x, y, 0.01).has_value());
    EXPECT_EQ(coarse, detect_omega(x, y, 0.005).has_value());
  }
}

}  // namespace
}  // namespace bcp
