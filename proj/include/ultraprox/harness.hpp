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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ultraprox/dynamics.hpp"
#include "ultraprox/map.hpp"
#include "ultraprox/proximity.hpp"
#include "ultraprox/space.hpp"
#include "ultraprox/verdict.hpp"

namespace ultraprox {

struct CheckOptions {
  /// Hypotheses that are still evaluated and reported but do not block the
  /// conclusion check (counterexample probes).
  std::vector<std::string> dropped;
  /// Case label the caller expects from check_theorem1; a different label
  /// is reported as a discrepancy.
  std::optional<std::string> expected_case;
  std::size_t bound = kDefaultBound;
  std::uint64_t seed = 1;
};

/// A0 non-empty and B0 = B when delta(B) <= dist(A, B), plus the nested
/// ball arguments for both radius regimes. Finite spaces only.
TheoremVerdict check_prop1(const Space& space, const SubsetSpec& a, const SubsetSpec& b,
                           const CheckOptions& options = {});

/// Best proximity pair trichotomy for noncyclic nonexpansive maps. Finite
/// spaces, and sequence spaces with point or ball subsets and
/// prefix-respecting maps.
TheoremVerdict check_theorem1(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                              const CheckOptions& options = {});

enum class FixedPairMode {
  kWeakRegular,  // nonexpansive with the weak-regular property ("thm2")
  kStrictOrbit,  // nonexpansive and strictly contractive on orbits ("c2")
  kStrict,       // strictly contractive, with uniqueness ("thm3")
};

/// Fixed points a in A, b in B with d(a, b) = dist(A, B). Finite spaces only.
TheoremVerdict check_fixed_pair(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                                FixedPairMode mode, const CheckOptions& options = {});

/// For cyclic T with delta(B) <= dist(A, B): d(a, Ta) = dist(A, B) on A0.
TheoremVerdict check_cyclic_remark(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                                   const CheckOptions& options = {});

// ---------------------------------------------------------------------------
// Random instances

enum class MapGenMode {
  kRejection,  // greedy random tables with restarts, collapse fallback
  kCollapse,   // send each ball of a chosen level to one of its members
};

struct DendrogramGenConfig {
  std::size_t n = 4;
  /// Strictly descending positive distances, root level first.
  std::vector<Ratio> levels{Ratio::whole(1), Ratio(1, 2)};
  std::uint64_t seed = 1;
  /// Fixed number of children per split (balanced); random when absent.
  std::optional<std::size_t> branching;
  MapGenMode map_mode = MapGenMode::kRejection;
};

/// A finite ultrametric space whose distances are the levels of lowest
/// common ancestors in a random tree. Throws SpecError on a bad config.
std::shared_ptr<FiniteSpace> generate_space(const DendrogramGenConfig& config);

struct FuzzConfig {
  std::size_t trials = 100;
  std::size_t max_points = 12;
  std::uint64_t seed = 1;
  /// Any of lemma1, prop1, thm1, thm2, c2, thm3, cyclic. Empty means all.
  std::vector<std::string> theorems;
  /// One of delta, nonexpansive, noncyclic, or empty.
  std::string drop_hypothesis;
  MapGenMode map_mode = MapGenMode::kRejection;
};

struct TheoremTally {
  std::size_t trials = 0;
  std::size_t applicable = 0;
  std::size_t verified = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::string theorem;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  nlohmann::json instance;
  nlohmann::json verdict;
};

struct FuzzSummary {
  std::map<std::string, TheoremTally> tallies;
  /// Conclusion failures among applicable trials. With a dropped
  /// hypothesis these are the instances where the conclusion broke.
  std::vector<Counterexample> counterexamples;
  /// Case labels returned by applicable thm1 checks.
  std::map<std::string, std::size_t> thm1_cases;
  std::string drop_hypothesis;
  /// With a dropped hypothesis: trials where it was actually violated.
  std::size_t dropped_violated = 0;

  bool clean() const { return drop_hypothesis.empty() && counterexamples.empty(); }
};

FuzzSummary fuzz(const FuzzConfig& config);

/// Runs one trial; exposed so a reported counterexample can be replayed.
FuzzSummary fuzz_trial(const FuzzConfig& config, std::size_t trial);

nlohmann::json to_json(const FuzzSummary& s);

// ---------------------------------------------------------------------------
// Worked examples

struct ReplicationConfig {
  std::uint64_t padic_prime = 3;
  std::uint64_t padic_exponent = 2;
  std::uint64_t padic_precision = 5;
  std::size_t depth = 64;
  std::size_t baire_max_n = 10;
  std::vector<std::size_t> nat_bounds{10, 100, 1000};
};

struct ExampleCheck {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool ok = false;
  /// Value under the 1-based indexing used in the example's original
  /// statement, where it differs from the 0-based value checked here.
  std::optional<nlohmann::json> one_based_value;
};

struct ExampleReport {
  std::string name;
  std::vector<ExampleCheck> checks;
  std::vector<TheoremVerdict> verdicts;
  std::optional<nlohmann::json> discrepancy;

  bool passed() const;
};

/// Known example names, in run order.
const std::vector<std::string>& example_names();

/// Runs the named examples (all when empty). Throws SpecError on an unknown name.
std::vector<ExampleReport> replicate_examples(const std::vector<std::string>& names,
                                              const ReplicationConfig& config = {});

nlohmann::json to_json(const ExampleReport& r);

}  // namespace ultraprox
