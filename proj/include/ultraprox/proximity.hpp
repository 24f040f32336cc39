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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultraprox/ratio.hpp"
#include "ultraprox/space.hpp"
#include "ultraprox/verdict.hpp"

namespace ultraprox {

/// Default listing bound for infinite subsets.
inline constexpr std::size_t kDefaultBound = 1000;

using PointPair = std::pair<Point, Point>;

// ---------------------------------------------------------------------------
// Balls

/// Members of a ball. Exact on finite spaces; truncated listing otherwise.
Enumeration ball_members(const Space& space, const Ball& ball, std::size_t bound = kDefaultBound);

struct CentralityReport {
  bool central = true;
  /// A member y whose ball B(y, r) differs from the original, if any.
  std::optional<Point> witness;
};

/// Whether every member of the ball is also a center of it. Finite spaces only.
CentralityReport is_central(const Space& space, const Ball& ball);

/// Exact diameter of a non-empty finite point list. Throws DomainError on empty input.
Ratio diameter(const Space& space, const std::vector<Point>& points);

struct DiameterReport {
  Ratio value;
  bool truncated = false;
  std::optional<PointPair> attained_by;
};

/// Diameter of a subset. Sequence-space balls are handled in closed form
/// (with an attaining pair); other infinite subsets use the truncated listing.
DiameterReport subset_diameter(const Space& space, const SubsetSpec& subset,
                               std::size_t bound = kDefaultBound);

/// Largest distance from the center to a member. Finite spaces only.
Ratio actual_radius(const Space& space, const Ball& ball);

/// Two balls as sets (finite spaces only).
bool same_ball(const Space& space, const Ball& a, const Ball& b);

// ---------------------------------------------------------------------------
// Set distance and proximity

struct TrendPoint {
  std::size_t bound;
  Ratio minimum;
};

struct SetDistance {
  Ratio value;
  /// False when the truncated minimum keeps strictly decreasing as the bound
  /// grows, i.e. there is evidence that the infimum is not attained.
  bool attained = true;
  bool truncated = false;
  /// Minimum at increasing bounds; only filled for truncated listings.
  std::vector<TrendPoint> trend;
  std::optional<PointPair> witness;
};

/// dist(A, B) = inf d(a, b). Throws DomainError when a subset is empty.
SetDistance dist_sets(const Space& space, const SubsetSpec& a, const SubsetSpec& b,
                      std::size_t bound = kDefaultBound);

struct ProximityReport {
  SetDistance dist;
  DiameterReport delta_a;
  DiameterReport delta_b;
  /// Points of A (resp. B) realizing dist(A, B). For sequence-space balls
  /// these are symbolic (a ball or the whole subset) rather than listed.
  SubsetSpec a0;
  SubsetSpec b0;
  /// Pairs (a, b) with d(a, b) = dist(A, B). Complete for listed subsets,
  /// representative for symbolic ones.
  std::vector<PointPair> witness_pairs;
  /// Pairs realizing the truncated minimum when non-attainment was flagged;
  /// a0/b0 are then empty.
  std::vector<PointPair> truncated_minimum_pairs;
  /// delta(B) <= dist(A, B)
  bool hypothesis_holds = false;
  bool truncated = false;
};

ProximityReport compute_a0_b0(const Space& space, const SubsetSpec& a, const SubsetSpec& b,
                              std::size_t bound = kDefaultBound);

struct Approximation {
  Point probe;
  std::optional<Point> nearest;
  Ratio distance;
  bool attained = true;
};

struct ProximinalReport {
  bool proximinal = true;
  std::vector<Approximation> approximations;
};

nlohmann::json to_json(const Space& space, const SetDistance& d);
nlohmann::json to_json(const Space& space, const DiameterReport& d);
nlohmann::json to_json(const Space& space, const ProximityReport& r);

/// Best approximations in A for each probe.
ProximinalReport is_proximinal(const Space& space, const SubsetSpec& a, const std::vector<Point>& probes,
                               std::size_t bound = kDefaultBound);

/// If delta(B) <= dist(A, B) then A0 is non-empty and B0 = B. Hypotheses
/// named in `dropped` are reported but do not block the conclusion check.
TheoremVerdict check_lemma1(const Space& space, const SubsetSpec& a, const SubsetSpec& b,
                            std::size_t bound = kDefaultBound, const std::vector<std::string>& dropped = {});

/// Closed-form view of a sequence-space subset: a single point, or all
/// sequences starting with `prefix` (balls and coord0 predicates). `point`
/// is the point itself or a member of the cylinder.
struct SeqShape {
  bool is_point = false;
  Point point;
  std::vector<Integer> prefix;
};

/// Absent for other spaces and for multi-point lists.
std::optional<SeqShape> seq_shape(const Space& space, const SubsetSpec& subset);

/// Points of a listed subset (PointList), or the listing otherwise.
std::vector<Point> listed_points(const Space& space, const SubsetSpec& subset, std::size_t bound);

/// Whether two listed point sets are equal as sets.
bool same_set(const Space& space, const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace ultraprox
