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

#include <algorithm>
#include <random>

#include "ultraprox/errors.hpp"
#include "ultraprox/harness.hpp"
#include "ultraprox/json_io.hpp"

namespace ultraprox {

namespace {

bool is_dropped(const CheckOptions& o, const std::string& name) {
  return std::find(o.dropped.begin(), o.dropped.end(), name) != o.dropped.end();
}

// Marks the verdict inapplicable when a non-dropped hypothesis fails.
bool blocked(TheoremVerdict& v, const CheckOptions& o) {
  auto failing = nlohmann::json::array();
  for (const auto& h : v.hypotheses) {
    if (!h.holds && !is_dropped(o, h.name)) failing.push_back(h.name);
  }
  if (failing.empty()) return false;
  v.status = VerdictStatus::kInapplicable;
  v.witnesses["failing_hypotheses"] = failing;
  return true;
}

std::string pair_label(const Space& space, const PointPair& p) {
  return "(" + space.label(p.first) + ", " + space.label(p.second) + ")";
}

void add_flag(TheoremVerdict& v, const Space& space, const std::string& name, const PropertyFlag& f) {
  std::string w;
  if (f.witness) {
    w = pair_label(space, *f.witness);
  } else if (!f.certified) {
    w = "not certified";
  }
  v.add_hypothesis(name, f.holds && f.certified, std::move(w));
}

void add_distance_hypotheses(TheoremVerdict& v, const ProximityReport& r) {
  v.add_hypothesis("B_bounded", true, "delta(B) = " + r.delta_b.value.to_string());
  v.add_hypothesis("delta_B_le_dist", r.hypothesis_holds,
                   r.delta_b.value.to_string() + (r.hypothesis_holds ? " <= " : " > ") + r.dist.value.to_string());
}

void add_distance_witnesses(TheoremVerdict& v, const Space& space, const ProximityReport& r) {
  v.witnesses["dist_AB"] = ratio_to_json(r.dist.value);
  v.witnesses["delta_B"] = ratio_to_json(r.delta_b.value);
  v.witnesses["A0"] = subset_to_json(space, r.a0);
  v.witnesses["B0"] = subset_to_json(space, r.b0);
  if (r.truncated) v.witnesses["truncated"] = true;
}

nlohmann::json points_json(const Space& space, const std::vector<Point>& pts) {
  auto out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(point_to_json(space, p));
  return out;
}

const std::vector<Point>& listed(const SubsetSpec& s) { return std::get<PointList>(s).points; }

}  // namespace

// ---------------------------------------------------------------------------
// Nested balls

namespace {

struct Chain {
  std::vector<std::size_t> centers;
  std::vector<std::uint32_t> radii;
};

struct ChainResult {
  bool ok = true;
  std::string failure;
};

nlohmann::json chain_json(const Space& space, const DistanceTable& table, const Chain& c) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < c.centers.size(); ++i) {
    out.push_back(subset_to_json(space, Ball{space.point(c.centers[i]), table.levels()[c.radii[i]]}));
  }
  return out;
}

}  // namespace

TheoremVerdict check_prop1(const Space& space, const SubsetSpec& a, const SubsetSpec& b,
                           const CheckOptions& options) {
  if (!space.is_finite()) throw UnsupportedError("prop1: finite spaces only");
  TheoremVerdict v;
  v.theorem = "prop1";
  const ProximityReport r = compute_a0_b0(space, a, b, options.bound);
  v.add_hypothesis("spherically_complete", true, "finite subsets");
  add_distance_hypotheses(v, r);
  add_distance_witnesses(v, space, r);
  if (blocked(v, options)) return v;

  const auto pa = listed_points(space, a, options.bound);
  const auto pb = listed_points(space, b, options.bound);
  const auto& a0 = listed(r.a0);
  const auto& b0 = listed(r.b0);
  const bool nonempty = !a0.empty();
  const bool b0_full = same_set(space, b0, pb);
  v.witnesses["A0_nonempty"] = nonempty;
  v.witnesses["B0_equals_B"] = b0_full;
  if (!nonempty || !b0_full) {
    v.status = VerdictStatus::kFailed;
    return v;
  }

  const DistanceTable table(space);
  const auto& levels = table.levels();
  const auto d = static_cast<std::uint32_t>(std::lower_bound(levels.begin(), levels.end(), r.dist.value) -
                                            levels.begin());
  std::vector<std::size_t> ia;
  std::vector<std::size_t> ib;
  std::vector<std::size_t> ia0;
  for (const auto& p : pa) ia.push_back(p.index());
  for (const auto& p : pb) ib.push_back(p.index());
  for (const auto& p : a0) ia0.push_back(p.index());
  auto in = [](const std::vector<std::size_t>& s, std::size_t i) { return std::find(s.begin(), s.end(), i) != s.end(); };

  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::uint32_t top = static_cast<std::uint32_t>(levels.size() - 1);

  std::size_t runs[2] = {0, 0};
  std::size_t passed[2] = {0, 0};
  std::optional<nlohmann::json> failure;
  constexpr std::size_t kChains = 16;
  for (std::size_t c = 0; c < kChains; ++c) {
    const bool small = c % 2 == 1;
    Chain chain;
    const std::size_t len = 1 + pick(4);
    // Radii >= d for the first regime; the second ends at a radius <= d
    // (strictly below d when a smaller level exists).
    for (std::size_t i = 0; i < len; ++i) chain.radii.push_back(d + static_cast<std::uint32_t>(pick(top - d + 1)));
    std::sort(chain.radii.rbegin(), chain.radii.rend());
    if (small) chain.radii.back() = d == 0 ? 0 : static_cast<std::uint32_t>(pick(d));
    chain.centers.push_back(ia0[pick(ia0.size())]);
    for (std::size_t i = 1; i < len; ++i) {
      std::vector<std::size_t> options_next;
      for (auto x : ia0) {
        if (table.rank(chain.centers.back(), x) <= chain.radii[i - 1]) options_next.push_back(x);
      }
      chain.centers.push_back(options_next[pick(options_next.size())]);
    }
    auto in_all = [&](std::size_t y) {
      for (std::size_t i = 0; i < len; ++i) {
        if (table.rank(chain.centers[i], y) > chain.radii[i]) return false;
      }
      return true;
    };

    ChainResult res;
    // Nestedness as sets.
    for (std::size_t i = 1; i < len && res.ok; ++i) {
      for (std::size_t y = 0; y < table.size(); ++y) {
        if (table.rank(chain.centers[i], y) <= chain.radii[i] &&
            table.rank(chain.centers[i - 1], y) > chain.radii[i - 1]) {
          res = {false, "chain is not descending"};
          break;
        }
      }
    }
    if (res.ok && !small) {
      // Every ball meets B; B meets the intersection at some b in B0, and a
      // partner of b in A0 lies in the intersection.
      for (std::size_t i = 0; i < len && res.ok; ++i) {
        bool meets = false;
        for (auto y : ib) meets = meets || table.rank(chain.centers[i], y) <= chain.radii[i];
        if (!meets) res = {false, "a ball of the chain misses B"};
      }
      std::optional<std::size_t> bstar;
      for (auto y : ib) {
        if (in_all(y)) {
          bstar = y;
          break;
        }
      }
      if (res.ok && !bstar) res = {false, "B misses the intersection"};
      if (res.ok) {
        for (std::size_t i = 0; i < len && res.ok; ++i) {
          if (table.rank(chain.centers[i], *bstar) > d) res = {false, "b in the intersection is not in B0"};
        }
        bool found = false;
        for (auto x : ia0) found = found || (table.rank(x, *bstar) == d && in_all(x));
        if (res.ok && !found) res = {false, "no partner of b in A0 lies in the intersection"};
      }
    } else if (res.ok) {
      // Every point of A in the intersection belongs to A0.
      for (auto x : ia) {
        if (in_all(x) && !in(ia0, x)) {
          res = {false, "a point of A in the intersection is not in A0"};
          break;
        }
      }
    }
    ++runs[small];
    if (res.ok) {
      ++passed[small];
    } else if (!failure) {
      failure = nlohmann::json{{"chain", chain_json(space, table, chain)}, {"reason", res.failure}};
    }
  }
  v.witnesses["chains_radii_ge_dist"] = {{"run", runs[0]}, {"passed", passed[0]}};
  v.witnesses["chains_radius_le_dist"] = {{"run", runs[1]}, {"passed", passed[1]}};
  if (failure) v.witnesses["chain_failure"] = *failure;
  v.status = failure ? VerdictStatus::kFailed : VerdictStatus::kVerified;
  return v;
}

// ---------------------------------------------------------------------------
// Trichotomy

namespace {

// B(x, gap) intersected with S, where S contains x.
SubsetSpec local_set(const Space& space, const Point& x, const Ratio& gap, const SubsetSpec& s, std::size_t bound) {
  if (space.is_finite()) {
    std::vector<Point> out;
    for (const auto& p : listed_points(space, s, bound)) {
      if (space.distance(x, p) <= gap) out.push_back(p);
    }
    return PointList{std::move(out)};
  }
  auto shape = seq_shape(space, s);
  if (gap.is_zero() || !shape || shape->is_point) return PointList{{x}};
  const std::size_t k = *BaireSpace::cylinder_length(gap);
  if (k >= shape->prefix.size()) return Ball{x, gap};
  return s;
}

struct CrossCheck {
  bool ok = true;
  std::optional<PointPair> witness;
};

// d(u, v) = d for every u in sa and v in sb.
CrossCheck cross_distance(const Space& space, const SubsetSpec& sa, const SubsetSpec& sb, const Ratio& d,
                          std::size_t bound) {
  if (space.is_finite()) {
    for (const auto& u : listed_points(space, sa, bound)) {
      for (const auto& w : listed_points(space, sb, bound)) {
        if (space.distance(u, w) != d) return {false, PointPair{u, w}};
      }
    }
    return {};
  }
  auto ka = seq_shape(space, sa);
  auto kb = seq_shape(space, sb);
  if (!ka || !kb) throw UnsupportedError("thm1: cross distances need point or ball subsets");
  const SetDistance sd = dist_sets(space, sa, sb, bound);
  // Disjoint balls (or two points) have a constant cross distance.
  const bool constant = (ka->is_point && kb->is_point) || !sd.value.is_zero();
  if (constant && sd.value == d) return {};
  return {false, sd.witness};
}

std::optional<std::string> case_label(bool a_fixed, bool b_fixed) {
  if (a_fixed && b_fixed) return "(i)";
  if (a_fixed) return "(ii)";
  return "(iii)";
}

SubsetSpec structure_of(const SolveOutcome& s) {
  if (s.kind == SolveKind::kFixedPoint) return PointList{{*s.fixed_point}};
  return PointList{s.invariant_ball->members};
}

}  // namespace

TheoremVerdict check_theorem1(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                              const CheckOptions& options) {
  check_compatible(space, map);
  const bool seq = space.kind() == SpaceKind::kBaire;
  if (!space.is_finite() && !seq) throw UnsupportedError("thm1: finite or sequence spaces only");
  TheoremVerdict v;
  v.theorem = "thm1";
  const ProximityReport r = compute_a0_b0(space, a, b, options.bound);
  add_distance_hypotheses(v, r);
  ClassifyOptions co;
  co.mode = seq ? ClassifyMode::kSampled : ClassifyMode::kExhaustive;
  co.seed = options.seed;
  const MapClassification c = classify_map(space, map, a, b, co);
  add_flag(v, space, "noncyclic", *c.noncyclic);
  add_flag(v, space, "nonexpansive", c.nonexpansive);
  add_distance_witnesses(v, space, r);
  if (blocked(v, options)) return v;

  auto fail = [&](const std::string& why) {
    v.status = VerdictStatus::kFailed;
    v.witnesses["failure"] = why;
    return v;
  };
  if (r.witness_pairs.empty()) return fail("no best proximity pair in A0 x B0");
  const auto& [x, y] = r.witness_pairs.front();
  const Ratio& dist = r.dist.value;

  try {
    for (const auto& [name, s] : {std::pair{"T(A0) in A0", &r.a0}, std::pair{"T(B0) in B0", &r.b0}}) {
      auto inv = maps_into(space, map, *s, *s);
      if (!inv || !inv->holds) {
        v.witnesses["invariance_failure"] = inv && inv->witness ? pair_label(space, *inv->witness) : "undecided";
        return fail(std::string(name) + " does not hold");
      }
    }
    const Ratio gx = space.distance(x, apply(space, map, x));
    const Ratio gy = space.distance(y, apply(space, map, y));
    const SubsetSpec xs = local_set(space, x, gx, r.a0, options.bound);
    const SubsetSpec ys = local_set(space, y, gy, r.b0, options.bound);
    v.witnesses["X"] = subset_to_json(space, xs);
    v.witnesses["Y"] = subset_to_json(space, ys);
    for (const auto& [name, s] : {std::pair{"T(X) in X", &xs}, std::pair{"T(Y) in Y", &ys}}) {
      auto inv = maps_into(space, map, *s, *s);
      if (!inv || !inv->holds) return fail(std::string(name) + " does not hold");
    }

    const SolveOutcome sa = solve_in_ball(space, map, x, r.a0);
    const SolveOutcome sb = solve_in_ball(space, map, y, r.b0);
    v.witnesses["solve_A"] = to_json(space, sa);
    v.witnesses["solve_B"] = to_json(space, sb);
    if (sa.kind == SolveKind::kInconclusive || sb.kind == SolveKind::kInconclusive) {
      return fail("solver found neither a fixed point nor a minimal invariant ball");
    }
    const bool fa = sa.kind == SolveKind::kFixedPoint;
    const bool fb = sb.kind == SolveKind::kFixedPoint;
    v.case_label = case_label(fa, fb);
    if (!fa && fb) {
      // A fixed b* is the radius-0 ball {b*}, which meets the minimal ball
      // definition with r = 0.
      v.witnesses["degenerate_b_ball"] = true;
    }
    const Point a_star = fa ? *sa.fixed_point : sa.invariant_ball->ball.center;
    const Point b_star = fb ? *sb.fixed_point : sb.invariant_ball->ball.center;
    v.witnesses["a_star"] = point_to_json(space, a_star);
    v.witnesses["b_star"] = point_to_json(space, b_star);
    v.witnesses["d_a_star_b_star"] = ratio_to_json(space.distance(a_star, b_star));

    CrossCheck cross = cross_distance(space, structure_of(sa), structure_of(sb), dist, options.bound);
    v.witnesses["cross_distance_constant"] = cross.ok;
    if (!cross.ok) {
      if (cross.witness) v.witnesses["cross_distance_witness"] = pair_label(space, *cross.witness);
      return fail("cross distance differs from dist(A,B)");
    }
  } catch (const PreconditionError& e) {
    v.witnesses["precondition"] = e.witness();
    return fail(e.what());
  }
  v.status = VerdictStatus::kVerified;
  if (options.expected_case && v.case_label != options.expected_case) {
    v.discrepancy = nlohmann::json{{"expected_case", *options.expected_case}, {"found_case", *v.case_label}};
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fixed pairs

TheoremVerdict check_fixed_pair(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                                FixedPairMode mode, const CheckOptions& options) {
  if (!space.is_finite()) throw UnsupportedError("fixed pair checks: finite spaces only");
  TheoremVerdict v;
  v.theorem = mode == FixedPairMode::kWeakRegular ? "thm2" : mode == FixedPairMode::kStrictOrbit ? "c2" : "thm3";
  const ProximityReport r = compute_a0_b0(space, a, b, options.bound);
  add_distance_hypotheses(v, r);
  const MapClassification c = classify_map(space, map, a, b);
  add_flag(v, space, "noncyclic", *c.noncyclic);
  switch (mode) {
    case FixedPairMode::kWeakRegular: {
      add_flag(v, space, "nonexpansive", c.nonexpansive);
      std::string w = c.weak_regular.detail;
      if (c.weak_regular.status != WeakRegular::kVerified && c.weak_regular.witness) {
        w = "from " + space.label(*c.weak_regular.witness) + ": " + w;
      }
      v.add_hypothesis("weak_regular", c.weak_regular.status == WeakRegular::kVerified, std::move(w));
      break;
    }
    case FixedPairMode::kStrictOrbit:
      add_flag(v, space, "nonexpansive", c.nonexpansive);
      add_flag(v, space, "strictly_contractive_on_orbit", c.strictly_contractive_on_orbit);
      break;
    case FixedPairMode::kStrict:
      add_flag(v, space, "strictly_contractive", c.strictly_contractive);
      break;
  }
  add_distance_witnesses(v, space, r);
  if (blocked(v, options)) return v;

  std::vector<Point> fixed_a;
  std::vector<Point> fixed_b;
  for (const auto& p : listed_points(space, a, options.bound)) {
    if (apply(space, map, p).index() == p.index()) fixed_a.push_back(p);
  }
  for (const auto& p : listed_points(space, b, options.bound)) {
    if (apply(space, map, p).index() == p.index()) fixed_b.push_back(p);
  }
  v.witnesses["fixed_in_A"] = points_json(space, fixed_a);
  v.witnesses["fixed_in_B"] = points_json(space, fixed_b);

  std::optional<PointPair> pair;
  for (const auto& p : fixed_a) {
    for (const auto& q : fixed_b) {
      if (!pair && space.distance(p, q) == r.dist.value) pair = PointPair{p, q};
    }
  }
  bool ok = pair.has_value();
  if (pair) {
    v.witnesses["a"] = point_to_json(space, pair->first);
    v.witnesses["b"] = point_to_json(space, pair->second);
    v.witnesses["d_a_b"] = ratio_to_json(space.distance(pair->first, pair->second));
  }
  if (mode == FixedPairMode::kStrict) {
    const bool unique = fixed_a.size() == 1 && fixed_b.size() == 1;
    v.witnesses["unique"] = unique;
    ok = ok && unique;
  }
  v.status = ok ? VerdictStatus::kVerified : VerdictStatus::kFailed;
  return v;
}

// ---------------------------------------------------------------------------
// Cyclic maps

TheoremVerdict check_cyclic_remark(const Space& space, const SubsetSpec& a, const SubsetSpec& b, const MapSpec& map,
                                   const CheckOptions& options) {
  check_compatible(space, map);
  TheoremVerdict v;
  v.theorem = "cyclic";
  const ProximityReport r = compute_a0_b0(space, a, b, options.bound);
  auto ab = maps_into(space, map, a, b);
  auto ba = maps_into(space, map, b, a);
  PropertyFlag cyc;
  if (!ab || !ba) {
    cyc.certified = false;
  } else {
    cyc = ab->holds ? *ba : *ab;
  }
  add_flag(v, space, "cyclic", cyc);
  add_distance_hypotheses(v, r);
  add_distance_witnesses(v, space, r);
  if (blocked(v, options)) return v;

  const auto a0 = listed_points(space, r.a0, options.bound);
  if (!std::holds_alternative<PointList>(r.a0)) v.witnesses["A0_listing_truncated"] = true;
  if (a0.empty()) {
    v.witnesses["vacuous"] = true;
    v.status = VerdictStatus::kVerified;
    return v;
  }
  for (const auto& p : a0) {
    const Point tp = apply(space, map, p);
    if (space.distance(p, tp) != r.dist.value) {
      v.witnesses["violation"] = pair_label(space, {p, tp});
      v.status = VerdictStatus::kFailed;
      return v;
    }
  }
  v.witnesses["checked"] = a0.size();
  v.status = VerdictStatus::kVerified;
  return v;
}

}  // namespace ultraprox
