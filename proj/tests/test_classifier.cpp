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

#include "bcp/classifier.hpp"
#include "support.hpp"

namespace bcp
{
namespace
{

void expect_witness(const HomotopyClass & c, const ClassificationReport & r)
{
  const auto w = is_free_class(c, r);
  ASSERT_TRUE(w.free);
  ASSERT_TRUE(w.witness);
  EXPECT_GT(w.witness->length(), 100.0);
  EXPECT_EQ(winding_number(*w.witness, r.closure), c.winding);
  const auto rep = validate_bounded_curvature(sample_path(*w.witness, 0.02), 0.05, r.x, r.y);
  EXPECT_TRUE(rep.valid);
}

TEST(Classifier, ConditionAHasOneFreeClassPerWinding)
{
  const auto r = classify_space(DirectedPoint::make(0, 0, 0), DirectedPoint::make(4, 0, 0), 3);
  EXPECT_EQ(r.proximity.condition, Condition::A);
  ASSERT_EQ(r.entries.size(), 7u);
  for (const auto & e : r.entries) {
    EXPECT_EQ(e.count, 1);
    ASSERT_EQ(e.classes.size(), 1u);
    EXPECT_EQ(e.classes[0].kind, ClassKind::Free);
    EXPECT_EQ(e.classes[0].winding, e.n);
    expect_witness(e.classes[0], r);
  }
}

TEST(Classifier, OmegaInstanceHasTwoClassesAtK)
{
  const auto r = classify_space(DirectedPoint::make(0, 0, 0), DirectedPoint::make(1, 0, 0), 3);
  EXPECT_EQ(r.proximity.condition, Condition::D);
  EXPECT_EQ(r.double_class_count(), 1);
  for (const auto & e : r.entries) {
    EXPECT_EQ(e.count, e.n == r.k ? 2 : 1);
  }
  const auto & e = *r.entry(r.k);
  ASSERT_EQ(e.classes.size(), 2u);
  const auto & omega = e.classes[0];
  const auto & free = e.classes[1];
  EXPECT_EQ(omega.kind, ClassKind::NonFreeOmega);
  EXPECT_EQ(free.kind, ClassKind::Free);
  EXPECT_TRUE(omega.in_omega.value_or(false));
  EXPECT_EQ(omega.self_crossings, 0);
  EXPECT_EQ(std::abs(omega.winding), 1);
  EXPECT_FALSE(free.in_omega.value_or(true));
  EXPECT_EQ(free.winding, r.k);
  EXPECT_GT(free.minimal_length, omega.minimal_length);
  const auto nf = is_free_class(omega, r);
  EXPECT_FALSE(nf.free);
  ASSERT_TRUE(nf.region_diameter);
  EXPECT_LT(*nf.region_diameter, 4.0);
  expect_witness(free, r);
}

TEST(Classifier, SingleArcInstanceHasIsolatedPoint)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(1, 1, kPi / 2);
  const auto r = classify_space(x, y, 2);
  EXPECT_EQ(r.proximity.subcase, DSubcase::SingleArc);
  const auto & e = *r.entry(r.k);
  ASSERT_EQ(e.classes.size(), 2u);
  EXPECT_EQ(e.classes[0].kind, ClassKind::IsolatedPoint);
  EXPECT_EQ(e.classes[0].representative->word(), r.proximity.isolated_path->word());
  EXPECT_NEAR(e.classes[0].minimal_length, kPi / 2, 1e-12);
  EXPECT_FALSE(is_free_class(e.classes[0], r).free);
  EXPECT_EQ(e.classes[1].kind, ClassKind::Free);
  expect_witness(e.classes[1], r);
}

TEST(Classifier, StructureOnRandomPairs)
{
  std::mt19937 rng(107);
  for (int i = 0; i < 40; ++i) {
    const auto x = testing::random_point(rng, 3.0);
    const auto y = testing::random_point(rng, 3.0);
    const auto r = classify_space(x, y, 1);
    EXPECT_EQ(r.double_class_count(), r.proximity.condition == Condition::D ? 1 : 0);
    for (const auto & e : r.entries) {
      for (const auto & c : e.classes) {
        EXPECT_TRUE(c.error.empty()) << c.error;
        EXPECT_EQ(c.winding, e.n);
        EXPECT_LT(endpoint_residual(*c.representative, y), 1e-9);
      }
    }
  }
}

TEST(Classifier, RangeMustContainK)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(4, 0, 0);
  const auto cl = make_closure(x, y);
  try {
    classify_space(x, y, cl, 2, 4);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
  EXPECT_THROW(classify_space(x, y, cl, 1, 0), Error);
}

TEST(Membership, SegmentInsideAndFarPointOutside)
{
  const auto x = DirectedPoint::make(0, 0, 0);
  const auto y = DirectedPoint::make(1, 0, 0);
  const auto om = detect_omega(x, y, 0.01);
  ASSERT_TRUE(om);
  CsPath seg(x);
  seg.append_line(1);
  EXPECT_TRUE(membership_delta_omega(sample_path(seg, 0.01), *om).in_omega);
  SampledPath far;
  far.samples = {{0, {0, 0}, 0}, {1, {0.5, 0}, 0}, {2, {5, 5}, 0}};
  const auto m = membership_delta_omega(far, *om);
  EXPECT_FALSE(m.in_omega);
  EXPECT_EQ(m.first_exit, 2u);
}

}  // namespace
}  // namespace bcp
