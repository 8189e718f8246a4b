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

#include "bcp/dubins.hpp"
#include "bcp/lattice_oracle.hpp"
#include "bcp/winding.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

LatticeConfig at_step(double step)
{
  LatticeConfig c;
  c.position_step = step;
  return c;
}

TEST(LatticeConfig, DerivedBinsAndTolerance)
{
  const auto c = at_step(0.1);
  EXPECT_EQ(c.bins(), 42);
  EXPECT_NEAR(c.primitive_length(), kTwoPi / 42, 1e-15);
  EXPECT_EQ(c.tolerance(), 0.1);
  EXPECT_NEAR(c.slack(), 0.4, 1e-15);
}

TEST(Oracle, StraightApproachesFour)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto r = shortest_path(x, y, at_step(0.1));
  EXPECT_NEAR(r.length, 4.0, 0.15);
  EXPECT_TRUE(r.repaired);
  EXPECT_LT(endpoint_residual(r.path, y), 1e-9);
  EXPECT_GE(r.polyline.size(), 2u);
}

TEST(Oracle, BracketsAnalyticLength)
{
  std::mt19937 rng(61);
  for (int i = 0; i < 10; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto cfg = at_step(0.2);
    const auto r = shortest_path(x, y, cfg);
    const double m = minimal_path(x, y).length;
    ASSERT_TRUE(r.repaired) << i;
    EXPECT_GE(r.length, m - 1e-9) << i;
    EXPECT_LE(r.length - m, cfg.slack()) << i;
    EXPECT_GE(r.lattice_length, m - cfg.slack()) << i;
  }
}

TEST(Oracle, PathsValidateWithStepTiedTolerance)
{
  std::mt19937 rng(67);
  for (int i = 0; i < 5; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto cfg = at_step(0.2);
    const auto r = shortest_path(x, y, cfg);
    const auto rep = validate_bounded_curvature(
      sample_path(r.path, 0.25 * cfg.position_step), cfg.position_step, x, y);
    EXPECT_TRUE(rep.valid) << i;
  }
}

TEST(Oracle, DeterministicAcrossRuns)
{
  const auto x = DirectedPoint::make(-1, 2, 0.4);
  const auto y = DirectedPoint::make(2, -1, 2.0);
  const auto a = shortest_path(x, y, at_step(0.2));
  const auto b = shortest_path(x, y, at_step(0.2));
  EXPECT_EQ(a.expansions, b.expansions);
  EXPECT_EQ(a.lattice_length, b.lattice_length);
  EXPECT_EQ(a.length, b.length);
  EXPECT_EQ(a.path.word(), b.path.word());
}

TEST(Oracle, HeuristicModeStaysAboveAnalytic)
{
  const auto x = DirectedPoint::make(0, 0, 0.3);
  const auto y = DirectedPoint::make(3, 2, -1.0);
  auto cfg = at_step(0.2);
  cfg.use_heuristic = true;
  const auto h = shortest_path(x, y, cfg);
  cfg.use_heuristic = false;
  const auto u = shortest_path(x, y, cfg);
  EXPECT_GE(h.length, minimal_path(x, y).length - 1e-9);
  EXPECT_LT(h.expansions, u.expansions);
}

TEST(Oracle, Errors)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  auto bad = at_step(0.0);
  try {
    shortest_path(x, y, bad);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
  auto tiny = at_step(0.2);
  tiny.max_expansions = 10;
  try {
    shortest_path(x, y, tiny);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleUnreachable);
  }
}

TEST(OracleInClass, GlobalClassAgreesWithUnconstrained)
{
  std::mt19937 rng(71);
  for (int i = 0; i < 4; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto cl = make_closure(x, y);
    const int k = class_index_k(x, y, cl).k;
    const auto cfg = at_step(0.2);
    const auto free = shortest_path(x, y, cfg);
    const auto in = shortest_path_in_class(x, y, cl, k, cfg);
    EXPECT_NEAR(in.length, free.length, cfg.slack()) << i;
    EXPECT_EQ(winding_number(in.path, cl), k) << i;
  }
}

TEST(OracleInClass, NextClassOfStraightExample)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto cl = make_closure(x, y);
  const int k = class_index_k(x, y, cl).k;
  const auto cfg = at_step(0.1);
  for (int n : {k - 1, k + 1}) {
    const auto r = shortest_path_in_class(x, y, cl, n, cfg);
    const double analytic = minimal_path_in_class(x, y, cl.path, n).length();
    EXPECT_GE(r.length, analytic - 1e-9);
    EXPECT_LE(r.length - analytic, cfg.slack());
    EXPECT_EQ(winding_number(r.path, cl), n);
  }
}

TEST(OracleInClass, TurningBookkeepingMatchesPath)
{
  const auto x = DirectedPoint::make(0, 0, 0.5);
  const auto y = DirectedPoint::make(2, 1, -0.5);
  const auto cl = make_closure(x, y);
  const int k = class_index_k(x, y, cl).k;
  const auto cfg = at_step(0.2);
  for (int n = k - 1; n <= k + 1; ++n) {
    const auto r = shortest_path_in_class(x, y, cl, n, cfg);
    const double target = kTwoPi * n - cl.path.total_turning();
    EXPECT_NEAR(r.path.total_turning(), target, 1e-9);
    EXPECT_LE(std::abs(r.turning_bins * cfg.primitive_length() - target),
      0.5 * cfg.primitive_length() + 1e-12);
  }
}

}  // namespace
}  // namespace bcp
