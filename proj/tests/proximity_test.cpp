// Copyright 2026 The Ultraprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ultraprox/proximity.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "ultraprox/errors.hpp"

namespace ultraprox {
namespace {

using testing::at;
using testing::R;

std::vector<std::string> labels(const Space& space, const SubsetSpec& s) {
  std::vector<std::string> out;
  for (const auto& p : listed_points(space, s, kDefaultBound)) out.push_back(space.label(p));
  std::sort(out.begin(), out.end());
  return out;
}

class Ex1Test : public ::testing::Test {
 protected:
  std::shared_ptr<Space> space = testing::fixture_space("ex1_space.json");
  SubsetSpec a = testing::fixture_subset(*space, "ex1_A.json");
  SubsetSpec b = testing::fixture_subset(*space, "ex1_B.json");
};

TEST_F(Ex1Test, Proximity) {
  const ProximityReport r = compute_a0_b0(*space, a, b);
  EXPECT_EQ(r.dist.value, R(1, 2));
  EXPECT_TRUE(r.dist.attained);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(r.delta_a.value, R(1, 1));
  EXPECT_EQ(r.delta_b.value, R(1, 1));
  EXPECT_EQ(labels(*space, r.a0), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(labels(*space, r.b0), (std::vector<std::string>{"b", "d"}));
  EXPECT_EQ(r.witness_pairs.size(), 2u);
  EXPECT_FALSE(r.hypothesis_holds);
}

TEST_F(Ex1Test, Lemma1Inapplicable) {
  const TheoremVerdict v = check_lemma1(*space, a, b);
  EXPECT_EQ(v.status, VerdictStatus::kInapplicable);
  EXPECT_FALSE(v.hypotheses_hold());
  EXPECT_EQ(v.witnesses.at("failing_hypotheses"), Json::array({"delta_B_le_dist"}));
}

TEST_F(Ex1Test, DroppedHypothesisStillChecksConclusion) {
  const TheoremVerdict v = check_lemma1(*space, a, b, kDefaultBound, {"delta_B_le_dist"});
  // A0 = {a, c} is non-empty but B0 = B holds too, so the conclusion survives.
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
}

TEST_F(Ex1Test, Balls) {
  const Ball ab{at(*space, "a"), R(1, 2)};
  EXPECT_EQ(ball_members(*space, ab).points.size(), 2u);
  EXPECT_TRUE(is_central(*space, ab).central);
  EXPECT_EQ(actual_radius(*space, ab), R(1, 2));
  EXPECT_EQ(actual_radius(*space, Ball{at(*space, "a"), R(3, 4)}), R(1, 2));
  EXPECT_TRUE(same_ball(*space, Ball{at(*space, "b"), R(3, 4)}, ab));
  EXPECT_FALSE(same_ball(*space, Ball{at(*space, "c"), R(1, 2)}, ab));
}

TEST_F(Ex1Test, Proximinal) {
  const ProximinalReport r = is_proximinal(*space, a, space->points());
  EXPECT_TRUE(r.proximinal);
  ASSERT_EQ(r.approximations.size(), 4u);
  EXPECT_EQ(r.approximations[1].distance, R(1, 2));
}

TEST(ProximityTest, DiameterOfEmptySetThrows) {
  const auto space = testing::fixture_space("ex1_space.json");
  EXPECT_THROW(diameter(*space, {}), DomainError);
  EXPECT_THROW(dist_sets(*space, PointList{}, PointList{{at(*space, "a")}}), DomainError);
}

TEST(ProximityTest, OverlappingSetsHaveZeroDistance) {
  const auto space = testing::fixture_space("cluster_space.json");
  const SubsetSpec a = PointList{{at(*space, "a1"), at(*space, "b1")}};
  const SubsetSpec b = PointList{{at(*space, "b1"), at(*space, "b2")}};
  const ProximityReport r = compute_a0_b0(*space, a, b);
  EXPECT_TRUE(r.dist.value.is_zero());
  EXPECT_EQ(labels(*space, r.a0), (std::vector<std::string>{"b1"}));
}

TEST(ProximityTest, PadicBalls) {
  const auto space = testing::fixture_space("padic_space.json");
  const SubsetSpec a = testing::fixture_subset(*space, "padic_A.json");
  const SubsetSpec b = testing::fixture_subset(*space, "padic_B.json");
  const ProximityReport r = compute_a0_b0(*space, a, b);
  EXPECT_EQ(r.dist.value, R(1, 1));
  EXPECT_EQ(r.delta_a.value, R(1, 9));
  EXPECT_EQ(r.delta_b.value, R(1, 9));
  EXPECT_EQ(listed_points(*space, r.a0, 0).size(), 27u);
  EXPECT_EQ(listed_points(*space, r.b0, 0).size(), 27u);
  EXPECT_EQ(r.witness_pairs.size(), 27u * 27u);
  EXPECT_TRUE(check_lemma1(*space, a, b).status == VerdictStatus::kVerified);
}

TEST(ProximityTest, NatNonAttainment) {
  const auto space = testing::fixture_space("nat_space.json");
  const SubsetSpec a = testing::fixture_subset(*space, "nat_A.json");
  const SubsetSpec b = testing::fixture_subset(*space, "nat_B.json");
  const ProximityReport r = compute_a0_b0(*space, a, b, 100);
  EXPECT_EQ(r.dist.value, R(1, 99));
  EXPECT_FALSE(r.dist.attained);
  EXPECT_TRUE(r.truncated);
  ASSERT_EQ(r.dist.trend.size(), 3u);
  EXPECT_EQ(r.dist.trend[0].bound, 25u);
  EXPECT_EQ(r.dist.trend[0].minimum, R(1, 24));
  EXPECT_EQ(r.dist.trend[1].minimum, R(1, 49));
  EXPECT_TRUE(listed_points(*space, r.a0, 100).empty());
  EXPECT_TRUE(listed_points(*space, r.b0, 100).empty());
  EXPECT_FALSE(r.truncated_minimum_pairs.empty());
  EXPECT_EQ(r.delta_a.value, R(1, 2));
  EXPECT_EQ(r.delta_b.value, R(1, 1));
}

TEST(ProximityTest, NatProximinality) {
  const auto nat = testing::fixture_space("nat_space.json");
  const auto& ns = dynamic_cast<const NatReciprocalSpace&>(*nat);
  // From 1 every other point is at distance 1; from 3 the nearest even
  // numbers sit at 1/3 already, so both infima are attained.
  const ProximinalReport r = is_proximinal(*nat, PredicateSubset{Predicate::kEven, 0}, {ns.point_of(1), ns.point_of(3)}, 100);
  EXPECT_TRUE(r.proximinal);
  EXPECT_EQ(r.approximations[1].distance, R(1, 3));
}

TEST(ProximityTest, BaireBalls) {
  const auto space = testing::fixture_space("baire_space.json");
  const SubsetSpec x2 = testing::fixture_subset(*space, "baire_X2.json");
  const SubsetSpec x3 = testing::fixture_subset(*space, "baire_X3.json");
  const DiameterReport d = subset_diameter(*space, x2);
  EXPECT_EQ(d.value, R(1, 2));
  ASSERT_TRUE(d.attained_by);
  EXPECT_EQ(space->distance(d.attained_by->first, d.attained_by->second), R(1, 2));
  EXPECT_TRUE(space->contains(x2, d.attained_by->first));
  EXPECT_TRUE(space->contains(x2, d.attained_by->second));
  const SetDistance sd = dist_sets(*space, x2, x3);
  EXPECT_EQ(sd.value, R(1, 1));
  EXPECT_FALSE(sd.truncated);
  const auto shape = seq_shape(*space, x2);
  ASSERT_TRUE(shape);
  EXPECT_FALSE(shape->is_point);
  EXPECT_EQ(shape->prefix, std::vector<Integer>{2});
}

TEST(ProximityTest, BaireNestedBalls) {
  const auto space = testing::fixture_space("baire_space.json");
  const SubsetSpec a = testing::fixture_subset(*space, "seq2_A.json");
  const SubsetSpec b = testing::fixture_subset(*space, "seq2_B.json");
  const ProximityReport r = compute_a0_b0(*space, a, b);
  EXPECT_EQ(r.dist.value, R(1, 2));
  EXPECT_EQ(r.delta_b.value, R(1, 3));
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(check_lemma1(*space, a, b).status, VerdictStatus::kVerified);
}

TEST(ProximityTest, ReportJson) {
  const auto space = testing::fixture_space("ex1_space.json");
  const Json j = to_json(*space, compute_a0_b0(*space, testing::fixture_subset(*space, "ex1_A.json"),
                                               testing::fixture_subset(*space, "ex1_B.json")));
  EXPECT_EQ(j.at("dist").at("value"), "1/2");
  EXPECT_EQ(j.at("A0").at("points"), Json::array({"a", "c"}));
  EXPECT_EQ(j.at("delta_B_le_dist"), false);
}

}  // namespace
}  // namespace ultraprox
