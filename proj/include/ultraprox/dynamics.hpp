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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ultraprox/map.hpp"
#include "ultraprox/proximity.hpp"
#include "ultraprox/space.hpp"

namespace ultraprox {

// ---------------------------------------------------------------------------
// Classification

enum class ClassifyMode { kExhaustive, kSampled };

struct ClassifyOptions {
  ClassifyMode mode = ClassifyMode::kExhaustive;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  /// Orbit length used for the weak-regular check on infinite spaces.
  std::size_t orbit_budget = 32;
};

struct PropertyFlag {
  bool holds = true;
  /// Established exactly (exhaustive scan, structural argument, or a
  /// concrete refutation) rather than merely not refuted on a sample.
  bool certified = false;
  /// Violating pair when `holds` is false. For orbit properties the pair is
  /// (x, Tx); for invariance it is (x, Tx) with Tx outside the target set.
  std::optional<PointPair> witness;
};

enum class WeakRegular { kVerified, kRefuted, kUndetermined };

const char* to_string(WeakRegular w);

struct WeakRegularResult {
  WeakRegular status = WeakRegular::kUndetermined;
  /// Starting point of the refuting (or undecided) orbit.
  std::optional<Point> witness;
  std::string detail;
};

struct MapClassification {
  /// False in sampled mode: positive flags then only mean "not refuted".
  bool exhaustive = true;
  PropertyFlag nonexpansive;
  PropertyFlag strictly_contractive;
  PropertyFlag strictly_contractive_on_orbit;
  PropertyFlag isometry;
  WeakRegularResult weak_regular;
  /// Only computed when both A and B are given.
  std::optional<PropertyFlag> noncyclic;
  std::optional<PropertyFlag> cyclic;
  std::size_t pairs_checked = 0;
  /// Sampled pairs whose image distance could not be decided within the
  /// comparison depth.
  std::size_t undetermined_pairs = 0;
};

/// Classifies `map` on A u B when both are given, otherwise on the whole
/// space. Exhaustive mode requires a finite space.
MapClassification classify_map(const Space& space, const MapSpec& map, const std::optional<SubsetSpec>& a,
                               const std::optional<SubsetSpec>& b, const ClassifyOptions& options = {});

/// Whether T(from) is contained in `to`, decided exactly: by exhaustive scan
/// on finite spaces, or structurally for prefix-respecting maps between
/// sequence-space points and balls. Absent when neither applies. The
/// witness is (x, Tx) with Tx outside `to`.
std::optional<PropertyFlag> maps_into(const Space& space, const MapSpec& map, const SubsetSpec& from,
                                      const SubsetSpec& to);

// ---------------------------------------------------------------------------
// Orbits

enum class OrbitEnd { kFixedPoint, kCycle, kBudgetExhausted };

const char* to_string(OrbitEnd e);

struct OrbitTrace {
  /// x, Tx, T^2 x, ... The last point repeats an earlier one on a fixed
  /// point or cycle end.
  std::vector<Point> points;
  /// gaps[n] = d(points[n], points[n + 1]).
  std::vector<Ratio> gaps;
  OrbitEnd end = OrbitEnd::kBudgetExhausted;
  /// Index of the fixed point, or of the first point of the cycle.
  std::size_t entry = 0;
  /// Cycle length (1 for a fixed point).
  std::size_t length = 0;
  /// The budget ended because two consecutive points could not be told
  /// apart within the comparison depth.
  bool depth_exhausted = false;
};

/// Iterates at most `max_steps` times. Throws DomainError if max_steps == 0.
OrbitTrace orbit(const Space& space, const MapSpec& map, const Point& x, std::size_t max_steps);

WeakRegularResult weak_regular_verdict(const OrbitTrace& trace);

// ---------------------------------------------------------------------------
// Fixed points and minimal invariant balls

struct InvariantBall {
  /// Named by its smallest-index member and its diameter.
  Ball ball;
  Ratio common_gap;
  std::vector<Point> members;
};

/// Balls of `universe` (default: the whole space) lying inside `region` that
/// are T-invariant with d(y, Ty) equal to the ball's diameter > 0 for every
/// member. Deduplicated as sets. Finite spaces only.
std::vector<InvariantBall> minimal_invariant_balls(const Space& space, const MapSpec& map,
                                                   const SubsetSpec& region,
                                                   const std::optional<SubsetSpec>& universe = std::nullopt);

enum class SolveKind { kFixedPoint, kMinimalInvariantBall, kInconclusive };

const char* to_string(SolveKind k);

struct SolveOutcome {
  explicit SolveOutcome(Ball search) : search_ball(std::move(search)) {}

  SolveKind kind = SolveKind::kInconclusive;
  /// B(start, d(start, T start)), relative to the domain when one is given.
  Ball search_ball;
  std::optional<Point> fixed_point;
  std::optional<InvariantBall> invariant_ball;
  /// How the fixed point was certified.
  std::string certificate;
  /// Reason for an inconclusive result.
  std::string reason;
  /// Set when an exhaustive search found neither a fixed point nor a
  /// minimal invariant ball.
  bool theorem_violation = false;
};

/// Searches B(start, d(start, T start)) for a fixed point, then for a
/// minimal T-invariant ball. With `domain`, points and balls are taken
/// relative to that subset. Throws PreconditionError when the map is shown
/// to expand distances on the search ball.
SolveOutcome solve_in_ball(const Space& space, const MapSpec& map, const Point& start,
                           const std::optional<SubsetSpec>& domain = std::nullopt);

// ---------------------------------------------------------------------------
// Reports

nlohmann::json to_json(const Space& space, const MapClassification& c);
nlohmann::json to_json(const Space& space, const OrbitTrace& t);
nlohmann::json to_json(const Space& space, const SolveOutcome& s);

}  // namespace ultraprox
