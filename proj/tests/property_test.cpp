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

#include <gtest/gtest.h>

#include <random>

#include "invariants.hpp"
#include "support.hpp"
#include "ultraprox/harness.hpp"

namespace ultraprox {
namespace {

using testing::R;

using invariants::random_space;

class GeneratedSpaces : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratedSpaces, BallInvariants) {
  const auto space = random_space(GetParam());
  ASSERT_TRUE(validate_ultrametric(*space).valid);
  EXPECT_EQ(invariants::check_centrality(*space), "");
  EXPECT_EQ(invariants::check_radius_is_diameter(*space), "");
  EXPECT_EQ(invariants::check_isosceles(*space), "");
  EXPECT_EQ(invariants::check_disjoint_cross_distance(*space), "");
}

TEST_P(GeneratedSpaces, MapInvariants) {
  const auto space = random_space(GetParam());
  std::mt19937_64 rng(GetParam() * 31 + 7);
  const MapSpec ne = invariants::random_map(*space, rng, false);
  const MapSpec strict = invariants::random_map(*space, rng, true);
  EXPECT_EQ(invariants::check_nonexpansive_ball_invariance(*space, ne), "");
  EXPECT_EQ(invariants::check_strict_orbit_termination(*space, strict), "");
}

// Nonexpansive self-maps of a finite ultrametric space always have a fixed
// point or a minimal invariant ball in B(x, d(x, Tx)).
TEST_P(GeneratedSpaces, FixedPointOrMinimalBall) {
  const auto space = random_space(GetParam());
  std::mt19937_64 rng(GetParam() * 17 + 3);
  const MapSpec t = invariants::random_map(*space, rng, false);
  for (const auto& x : space->points()) {
    const SolveOutcome s = solve_in_ball(*space, t, x);
    ASSERT_NE(s.kind, SolveKind::kInconclusive) << space->label(x);
    if (s.fixed_point) {
      EXPECT_EQ(apply(*space, t, *s.fixed_point).index(), s.fixed_point->index());
      EXPECT_TRUE(space->contains(s.search_ball, *s.fixed_point));
    } else {
      const InvariantBall& ib = *s.invariant_ball;
      EXPECT_EQ(actual_radius(*space, ib.ball), ib.ball.radius);
      for (const auto& m : ib.members) {
        EXPECT_TRUE(space->contains(s.search_ball, m));
        EXPECT_TRUE(space->contains(ib.ball, apply(*space, t, m)));
        EXPECT_EQ(space->distance(m, apply(*space, t, m)), ib.ball.radius);
      }
    }
  }
}

TEST_P(GeneratedSpaces, ClassificationImplications) {
  const auto space = random_space(GetParam());
  std::mt19937_64 rng(GetParam() * 13 + 1);
  for (bool strict : {false, true}) {
    const MapSpec t = invariants::random_map(*space, rng, strict);
    const MapClassification c = classify_map(*space, t, std::nullopt, std::nullopt);
    if (c.strictly_contractive.holds) {
      EXPECT_TRUE(c.nonexpansive.holds);
      EXPECT_TRUE(c.strictly_contractive_on_orbit.holds);
    }
    if (c.isometry.holds) {
      EXPECT_TRUE(c.nonexpansive.holds);
    }
    if (c.nonexpansive.holds && c.strictly_contractive_on_orbit.holds) {
      EXPECT_EQ(c.weak_regular.status, WeakRegular::kVerified);
    }
    if (strict) {
      EXPECT_TRUE(c.strictly_contractive.holds);
    }
    EXPECT_TRUE(c.nonexpansive.holds);
  }
}

TEST_P(GeneratedSpaces, SpecRoundTrip) {
  const auto space = random_space(GetParam());
  std::mt19937_64 rng(GetParam());
  const MapSpec t = invariants::random_map(*space, rng, false);
  const Json sj = space_to_json(*space);
  const auto again = space_from_json(sj);
  EXPECT_EQ(space_to_json(*again), sj);
  const MapSpec t2 = map_from_json(*again, map_to_json(*space, t));
  EXPECT_EQ(t2, t);
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedSpaces, ::testing::Range<std::uint64_t>(1, 101));

TEST(FixtureProperties, BallInvariants) {
  for (const char* name : {"ex1_space.json", "cluster_space.json", "padic_space.json"}) {
    SCOPED_TRACE(name);
    const auto space = testing::fixture_space(name);
    EXPECT_EQ(invariants::check_centrality(*space), "");
    EXPECT_EQ(invariants::check_radius_is_diameter(*space), "");
    EXPECT_EQ(invariants::check_isosceles(*space), "");
    EXPECT_EQ(invariants::check_disjoint_cross_distance(*space), "");
  }
}

TEST(FixtureProperties, PadicTranslationKeepsBalls) {
  const auto space = testing::fixture_space("padic_space.json");
  EXPECT_EQ(invariants::check_nonexpansive_ball_invariance(*space, testing::fixture_map(*space, "padic_map.json")),
            "");
}

TEST(FixtureProperties, LemmaOneOnGeneratedPairs) {
  // delta(B) <= dist(A, B) forces B0 = B.
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto space = random_space(seed);
    if (space->size() < 2) continue;
    std::mt19937_64 rng(seed);
    const auto pts = space->points();
    const Point c = pts[rng() % pts.size()];
    const auto levels = distance_levels(*space);
    const SubsetSpec b = Ball{c, levels[rng() % levels.size()]};
    std::vector<Point> rest;
    for (const auto& p : pts) {
      if (!space->contains(b, p)) rest.push_back(p);
    }
    if (rest.empty()) continue;
    const TheoremVerdict v = check_lemma1(*space, PointList{rest}, b);
    EXPECT_EQ(v.status, VerdictStatus::kVerified) << seed;
  }
}

}  // namespace
}  // namespace ultraprox
