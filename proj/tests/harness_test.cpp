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

#include "ultraprox/harness.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "ultraprox/errors.hpp"

namespace ultraprox {
namespace {

using testing::at;
using testing::R;

std::shared_ptr<Space> three_points() {
  // a alone, b1 and b2 close together.
  return space_from_json(Json::parse(R"({"type":"finite","points":["a","b1","b2"],
    "distances":[["a","b1","1/2"],["a","b2","1/2"],["b1","b2","1/4"]]})"));
}

class ClusterHarnessTest : public ::testing::Test {
 protected:
  std::shared_ptr<Space> space = testing::fixture_space("cluster_space.json");
  SubsetSpec a = testing::fixture_subset(*space, "cluster_A.json");
  SubsetSpec b = testing::fixture_subset(*space, "cluster_B.json");
  MapSpec collapse = testing::fixture_map(*space, "cluster_map.json");
  MapSpec swap = testing::fixture_map(*space, "cluster_swap.json");
};

TEST_F(ClusterHarnessTest, Prop1) {
  const TheoremVerdict v = check_prop1(*space, a, b);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_GT(v.witnesses.at("chains_radii_ge_dist").at("run").get<int>(), 0);
  EXPECT_GT(v.witnesses.at("chains_radius_le_dist").at("run").get<int>(), 0);
}

TEST_F(ClusterHarnessTest, Theorem1BothFixed) {
  const TheoremVerdict v = check_theorem1(*space, a, b, collapse);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  ASSERT_TRUE(v.case_label);
  EXPECT_EQ(*v.case_label, "(i)");
  EXPECT_EQ(v.witnesses.at("d_a_star_b_star"), "1/2");
}

TEST_F(ClusterHarnessTest, Theorem1InapplicableForCyclicMap) {
  const TheoremVerdict v = check_theorem1(*space, a, b, swap);
  EXPECT_EQ(v.status, VerdictStatus::kInapplicable);
  EXPECT_FALSE(v.case_label);
}

TEST_F(ClusterHarnessTest, DroppingNoncyclicExposesFailure) {
  CheckOptions opts;
  opts.dropped = {"noncyclic"};
  const TheoremVerdict v = check_theorem1(*space, a, b, swap, opts);
  EXPECT_EQ(v.status, VerdictStatus::kFailed);
  EXPECT_TRUE(v.is_failure());
}

TEST_F(ClusterHarnessTest, ExpectedCaseMismatchIsADiscrepancy) {
  CheckOptions opts;
  opts.expected_case = "(ii)";
  const TheoremVerdict v = check_theorem1(*space, a, b, collapse, opts);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  ASSERT_TRUE(v.discrepancy);
  EXPECT_EQ(v.discrepancy->at("found_case"), "(i)");
  EXPECT_TRUE(v.is_failure());
}

TEST_F(ClusterHarnessTest, FixedPairModes) {
  EXPECT_EQ(check_fixed_pair(*space, a, b, collapse, FixedPairMode::kWeakRegular).status, VerdictStatus::kVerified);
  EXPECT_EQ(check_fixed_pair(*space, a, b, collapse, FixedPairMode::kStrictOrbit).status, VerdictStatus::kVerified);
  EXPECT_EQ(check_fixed_pair(*space, a, b, collapse, FixedPairMode::kStrict).status, VerdictStatus::kInapplicable);
  EXPECT_EQ(check_fixed_pair(*space, a, b, swap, FixedPairMode::kWeakRegular).status, VerdictStatus::kInapplicable);
}

TEST_F(ClusterHarnessTest, CyclicRemark) {
  const TheoremVerdict v = check_cyclic_remark(*space, a, b, swap);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(v.witnesses.at("checked"), 2);
  EXPECT_EQ(check_cyclic_remark(*space, a, b, collapse).status, VerdictStatus::kInapplicable);
}

TEST(HarnessTest, Theorem1FixedAndBall) {
  const auto space = three_points();
  const SubsetSpec a = PointList{{at(*space, "a")}};
  const SubsetSpec b = PointList{{at(*space, "b1"), at(*space, "b2")}};
  const MapSpec t = map_from_json(*space, Json::parse(R"({"type":"table","map":{"a":"a","b1":"b2","b2":"b1"}})"));
  const TheoremVerdict v = check_theorem1(*space, a, b, t);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(*v.case_label, "(ii)");
}

TEST(HarnessTest, Theorem1BallAndFixedIsLabelledDegenerate) {
  const auto space = three_points();
  const SubsetSpec a = PointList{{at(*space, "b1"), at(*space, "b2")}};
  const SubsetSpec b = PointList{{at(*space, "a")}};
  const MapSpec t = map_from_json(*space, Json::parse(R"({"type":"table","map":{"a":"a","b1":"b2","b2":"b1"}})"));
  const TheoremVerdict v = check_theorem1(*space, a, b, t);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(*v.case_label, "(iii)");
  EXPECT_EQ(v.witnesses.at("degenerate_b_ball"), true);
}

TEST(HarnessTest, StrictContractionUniqueFixedPair) {
  const auto space = three_points();
  const SubsetSpec a = PointList{{at(*space, "a"), at(*space, "b1")}};
  const SubsetSpec b = PointList{{at(*space, "b1")}};
  const MapSpec t = map_from_json(*space, Json::parse(R"({"type":"table","map":{"a":"b1","b1":"b1","b2":"b1"}})"));
  const TheoremVerdict v = check_fixed_pair(*space, a, b, t, FixedPairMode::kStrict);
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(v.witnesses.at("unique"), true);
  EXPECT_EQ(v.witnesses.at("d_a_b"), "0/1");
}

TEST(HarnessTest, Prop1InapplicableOnFourPointSpace) {
  const auto space = testing::fixture_space("ex1_space.json");
  const TheoremVerdict v = check_prop1(*space, testing::fixture_subset(*space, "ex1_A.json"),
                                       testing::fixture_subset(*space, "ex1_B.json"));
  EXPECT_EQ(v.status, VerdictStatus::kInapplicable);
}

TEST(HarnessTest, Theorem1OnPadicBalls) {
  const auto space = testing::fixture_space("padic_space.json");
  const TheoremVerdict v =
      check_theorem1(*space, testing::fixture_subset(*space, "padic_A.json"),
                     testing::fixture_subset(*space, "padic_B.json"), testing::fixture_map(*space, "padic_map.json"));
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(*v.case_label, "(iii)");
  EXPECT_EQ(v.witnesses.at("d_a_star_b_star"), "1/1");
}

TEST(HarnessTest, Theorem1OnBaireBalls) {
  const auto space = testing::fixture_space("baire_space.json");
  const TheoremVerdict v =
      check_theorem1(*space, testing::fixture_subset(*space, "baire_X2.json"),
                     testing::fixture_subset(*space, "baire_X3.json"), testing::fixture_map(*space, "baire_map.json"));
  EXPECT_EQ(v.status, VerdictStatus::kVerified);
  EXPECT_EQ(*v.case_label, "(i)");
}

TEST(GeneratorTest, ProducesValidSpaces) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    DendrogramGenConfig cfg;
    cfg.n = 1 + seed % 12;
    cfg.levels = {R(1, 1), R(1, 3), R(1, 9)};
    cfg.seed = seed;
    const auto space = generate_space(cfg);
    ASSERT_EQ(space->size(), cfg.n);
    EXPECT_TRUE(validate_ultrametric(*space).valid);
    for (const auto& level : distance_levels(*space)) {
      EXPECT_TRUE(level.is_zero() || std::find(cfg.levels.begin(), cfg.levels.end(), level) != cfg.levels.end());
    }
  }
}

TEST(GeneratorTest, FixedBranchingIsBalanced) {
  DendrogramGenConfig cfg;
  cfg.n = 8;
  cfg.levels = {R(1, 1), R(1, 2), R(1, 4)};
  cfg.branching = 2;
  const auto space = generate_space(cfg);
  for (const auto& p : space->points()) {
    EXPECT_EQ(space->enumerate(Ball{p, R(1, 2)}, 0).points.size(), 4u);
    EXPECT_EQ(space->enumerate(Ball{p, R(1, 4)}, 0).points.size(), 2u);
  }
}

TEST(GeneratorTest, RejectsBadConfigs) {
  DendrogramGenConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(generate_space(cfg), SpecError);
  cfg.n = 3;
  cfg.levels = {R(1, 2), R(1, 1)};
  EXPECT_THROW(generate_space(cfg), SpecError);
  cfg.levels = {};
  EXPECT_THROW(generate_space(cfg), SpecError);
}

TEST(FuzzTest, DeterministicAndClean) {
  FuzzConfig cfg;
  cfg.trials = 60;
  cfg.seed = 11;
  const FuzzSummary s1 = fuzz(cfg);
  const FuzzSummary s2 = fuzz(cfg);
  EXPECT_EQ(to_json(s1).dump(), to_json(s2).dump());
  EXPECT_TRUE(s1.clean());
  EXPECT_EQ(s1.tallies.at("thm1").applicable, 60u);
}

TEST(FuzzTest, TrialReplayMatches) {
  FuzzConfig cfg;
  cfg.trials = 20;
  cfg.seed = 5;
  const FuzzSummary all = fuzz(cfg);
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) applicable += fuzz_trial(cfg, i).tallies.at("thm2").applicable;
  EXPECT_EQ(applicable, all.tallies.at("thm2").applicable);
}

TEST(FuzzTest, DroppedHypothesesProduceCounterexamples) {
  for (const char* h : {"delta", "nonexpansive", "noncyclic"}) {
    SCOPED_TRACE(h);
    FuzzConfig cfg;
    cfg.trials = 200;
    cfg.seed = 3;
    cfg.drop_hypothesis = h;
    const FuzzSummary s = fuzz(cfg);
    EXPECT_GT(s.dropped_violated, 0u);
    EXPECT_FALSE(s.counterexamples.empty());
    EXPECT_FALSE(s.clean());
    const Json ce = to_json(s).at("counterexamples").at(0);
    EXPECT_TRUE(ce.at("instance").contains("space"));
  }
}

TEST(FuzzTest, UnknownNamesAreRejected) {
  FuzzConfig cfg;
  cfg.theorems = {"thm9"};
  EXPECT_THROW(fuzz(cfg), SpecError);
  cfg.theorems = {};
  cfg.drop_hypothesis = "spherical";
  EXPECT_THROW(fuzz(cfg), SpecError);
}

}  // namespace
}  // namespace ultraprox
