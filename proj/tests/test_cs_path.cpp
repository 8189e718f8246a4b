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

#include "bcp/cs_path.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

SampledPath circle_samples(double radius, int n)
{
  SampledPath p;
  p.step_bound = kTwoPi * radius / n;
  for (int i = 0; i <= n; ++i) {
    const double t = kTwoPi * i / n;
    p.samples.push_back({t * radius, Vec2{radius * std::sin(t), radius * (1 - std::cos(t))}, t});
  }
  return p;
}

TEST(CsPath, LengthOfBasicShapes)
{
  const auto o = DirectedPoint::make(0, 0, 0);
  EXPECT_NEAR(CsPath(o).append_arc(Turn::Left, kPi / 2).length(), kPi / 2, 1e-15);
  EXPECT_NEAR(CsPath(o).append_line(4).length(), 4.0, 1e-15);
  CsPath lsl(o);
  lsl.append_arc(Turn::Left, kPi / 2).append_line(3).append_arc(Turn::Left, kPi / 2);
  EXPECT_NEAR(length(lsl), 3 + kPi, 1e-12);
  EXPECT_EQ(lsl.complexity(), 3u);
  EXPECT_EQ(lsl.word(), "LSL");
}

TEST(CsPath, ArcEndpointsFollowConvention)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_arc(Turn::Left, kPi / 2);
  EXPECT_NEAR(p.end().point.x, 1.0, 1e-12);
  EXPECT_NEAR(p.end().point.y, 1.0, 1e-12);
  EXPECT_NEAR(p.end().heading, kPi / 2, 1e-12);
  CsPath q(DirectedPoint::make(0, 0, 0));
  q.append_arc(Turn::Right, kPi);
  EXPECT_NEAR(q.end().point.y, -2.0, 1e-12);
  EXPECT_NEAR(q.total_turning(), -kPi, 1e-15);
}

TEST(CsPath, ZeroComponentsAreDropped)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_arc(Turn::Left, 0.0).append_line(2.0).append_arc(Turn::Right, 0.0);
  EXPECT_EQ(p.complexity(), 1u);
}

TEST(CsPath, LongLoopsAreChunkedAndMergedBack)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_arc(Turn::Left, 5 * kTwoPi + 0.3);
  for (const auto & el : p.elements()) {
    EXPECT_LE(std::abs(el.sweep), CsPath::kMaxSweep + 1e-12);
  }
  EXPECT_NEAR(p.total_turning(), 5 * kTwoPi + 0.3, 1e-12);
  EXPECT_NEAR(p.end().point.x, std::sin(0.3), 1e-9);
}

TEST(CsPath, FromElementsRejectsDiscontinuity)
{
  const auto o = DirectedPoint::make(0, 0, 0);
  std::vector<ArcSegment> els{ArcSegment::line({0, 0}, {1, 0}), ArcSegment::line({1, 0}, {1, 1})};
  EXPECT_THROW(CsPath::from_elements(o, els), Error);
  std::vector<ArcSegment> gap{ArcSegment::line({0, 0}, {1, 0}), ArcSegment::line({1.1, 0}, {2, 0})};
  EXPECT_THROW(CsPath::from_elements(o, gap), Error);
  std::vector<ArcSegment> ok{ArcSegment::line({0, 0}, {1, 0}),
    ArcSegment::arc(Circle{{1, 1}, 1, Turn::Left}, -kPi / 2, kPi / 2)};
  const auto p = CsPath::from_elements(o, ok);
  EXPECT_NEAR(p.end().heading, kPi / 2, 1e-12);
}

TEST(CsPath, ConcatLengthIsAdditive)
{
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = testing::random_cscsc(rng, testing::random_point(rng));
    const auto b = testing::random_cscsc(rng, a.end());
    EXPECT_NEAR(concat(a, b).length(), a.length() + b.length(), 1e-9);
  }
}

TEST(CsPath, CanonicalMergesSameCircleArcs)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_arc(Turn::Left, 0.5).append_arc(Turn::Left, 0.7).append_line(1).append_line(2);
  const auto c = p.canonical();
  EXPECT_EQ(c.word(), "LS");
  EXPECT_NEAR(c.length(), p.length(), 1e-12);
}

TEST(Validate, UnitCircleIsValid)
{
  const auto rep = validate_bounded_curvature(circle_samples(1.0, 400), 0.01);
  EXPECT_TRUE(rep.valid);
  EXPECT_NEAR(rep.max_curvature, 1.0, 0.01);
}

TEST(Validate, StraightSegmentIsValid)
{
  SampledPath p;
  for (int i = 0; i <= 10; ++i) {
    p.samples.push_back({0.1 * i, Vec2{0.1 * i, 0}, 0});
  }
  const auto rep = validate_bounded_curvature(p, 0.01);
  EXPECT_TRUE(rep.valid);
  EXPECT_NEAR(rep.max_curvature, 0.0, 1e-12);
}

TEST(Validate, HalfRadiusCircleIsInvalid)
{
  const auto rep = validate_bounded_curvature(circle_samples(0.5, 400), 0.01);
  EXPECT_FALSE(rep.valid);
  EXPECT_FALSE(rep.violations.empty());
  EXPECT_NEAR(rep.max_curvature, 2.0, 0.01);
}

TEST(Validate, TooFewSamples)
{
  SampledPath p;
  p.samples.push_back({0, {0, 0}, 0});
  p.samples.push_back({1, {1, 0}, 0});
  try {
    validate_bounded_curvature(p, 0.01);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
  }
}

TEST(Validate, EndpointMismatchIsInvalid)
{
  const auto s = circle_samples(1.0, 100);
  const auto rep = validate_bounded_curvature(
    s, 0.01, DirectedPoint::make(0, 0, 0), DirectedPoint::make(0, 0.1, 0));
  EXPECT_FALSE(rep.valid);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Sampling, RandomCsPathsSampleValidAndKeepJunctions)
{
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_cscsc(rng, testing::random_point(rng));
    const double step = 0.05;
    const auto s = sample_path(p, step);
    const auto rep = validate_bounded_curvature(s, 4 * step, p.start(), p.end());
    EXPECT_TRUE(rep.valid);
    EXPECT_LE(rep.max_curvature, 1 + 4 * step);
    double chord = 0;
    for (std::size_t k = 1; k < s.samples.size(); ++k) {
      EXPECT_LE(s.samples[k].s - s.samples[k - 1].s, step + 1e-12);
      chord += distance(s.samples[k - 1].position, s.samples[k].position);
    }
    EXPECT_NEAR(chord, p.length(), step * step * static_cast<double>(p.complexity()));
    double junction = 0;
    for (const auto & el : p.elements()) {
      junction += el.length();
      const bool found = std::any_of(s.samples.begin(), s.samples.end(), [&](const auto & q) {
            return q.s == junction && q.position == el.end_point();
          });
      EXPECT_TRUE(found);
    }
  }
}

TEST(Sampling, RejectsNonPositiveStep)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_line(1);
  EXPECT_THROW(sample_path(p, 0.0), Error);
}

TEST(Crossings, EmbeddedCircleHasNone)
{
  CsPath c(DirectedPoint::make(0, 0, 0));
  c.append_arc(Turn::Left, kTwoPi);
  EXPECT_EQ(transversal_crossings(c, CsPath(c.end())), 0);
}

TEST(Crossings, TangentCircleFigureEightHasOne)
{
  CsPath c(DirectedPoint::make(0, 0, 0));
  c.append_arc(Turn::Left, kTwoPi).append_arc(Turn::Right, kTwoPi);
  EXPECT_EQ(transversal_crossings(c, CsPath(c.end())), 1);
}

// Two three-quarter loops of opposite orientation joined by a segment through the start.
CsPath figure_eight_word(const DirectedPoint & start)
{
  CsPath p(start);
  p.append_line(1.5)
  .append_arc(Turn::Right, 1.5 * kPi)
  .append_line(2.0)
  .append_arc(Turn::Left, 1.5 * kPi)
  .append_line(0.5);
  return p;
}

TEST(Crossings, FigureEightWordAgreesWithPolylineOracle)
{
  const Vec2 q = unit(kPi / 4) * -0.5;
  const auto p = figure_eight_word(DirectedPoint::make(q, kPi / 4));
  ASSERT_LT(distance(p.end().point, p.start().point), 1e-12);
  EXPECT_EQ(transversal_crossings(p, CsPath(p.end())), 1);
  EXPECT_EQ(testing::polyline_crossings(p, 0.0171), 1);
}

TEST(Crossings, InvariantUnderRigidMotions)
{
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> pos(-5, 5);
  for (int i = 0; i < 20; ++i) {
    const RigidMotion g{ang(rng), {pos(rng), pos(rng)}};
    const Vec2 q = unit(kPi / 4) * -0.5;
    const auto p = figure_eight_word(g.apply(DirectedPoint::make(q, kPi / 4)));
    EXPECT_EQ(transversal_crossings(p, CsPath(p.end())), 1);
    CsPath c(g.apply(DirectedPoint::make(0, 0, 0)));
    c.append_arc(Turn::Left, kTwoPi).append_arc(Turn::Right, kTwoPi);
    EXPECT_EQ(transversal_crossings(c, CsPath(c.end())), 1);
  }
}

TEST(Crossings, RequiresClosedCurve)
{
  CsPath p(DirectedPoint::make(0, 0, 0));
  p.append_line(1);
  try {
    transversal_crossings(p, CsPath(p.end()));
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Crossings, OpenPathSelfCrossings)
{
  CsPath p(DirectedPoint::make(-1, 0, 0));
  p.append_line(2).append_arc(Turn::Left, 1.5 * kPi).append_line(3);
  EXPECT_EQ(self_crossings(p), 1);
  CsPath s(DirectedPoint::make(0, 0, 0));
  s.append_arc(Turn::Left, 1.0).append_line(2).append_arc(Turn::Right, 2.0);
  EXPECT_EQ(self_crossings(s), 0);
}

}  // namespace
}  // namespace bcp
