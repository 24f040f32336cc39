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
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "ultraprox/errors.hpp"
#include "ultraprox/harness.hpp"
#include "ultraprox/json_io.hpp"

namespace ultraprox {

// ---------------------------------------------------------------------------
// Generator

std::shared_ptr<FiniteSpace> generate_space(const DendrogramGenConfig& config) {
  const std::size_t n = config.n;
  const auto& levels = config.levels;
  if (n < 1) throw SpecError("generator: n must be at least 1");
  if (levels.empty()) throw SpecError("generator: level set is empty");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].is_zero()) throw SpecError("generator: levels must be positive");
    if (i > 0 && !(levels[i] < levels[i - 1])) throw SpecError("generator: levels must strictly decrease");
  }
  if (config.branching && *config.branching < 2) throw SpecError("generator: branching must be at least 2");

  std::mt19937_64 rng(config.seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<std::vector<Ratio>> matrix(n, std::vector<Ratio>(n));

  // Splits positions [lo, hi) below a node at `depth`; points in different
  // children are at distance levels[depth].
  std::function<void(std::size_t, std::size_t, std::size_t)> split = [&](std::size_t lo, std::size_t hi,
                                                                           std::size_t depth) {
    const std::size_t m = hi - lo;
    if (m <= 1) return;
    std::vector<std::size_t> cuts{lo};
    if (depth + 1 == levels.size()) {
      for (std::size_t i = lo + 1; i < hi; ++i) cuts.push_back(i);
    } else if (config.branching) {
      const std::size_t k = std::min(*config.branching, m);
      for (std::size_t c = 1; c < k; ++c) cuts.push_back(lo + c * m / k);
    } else {
      std::vector<std::size_t> inner(m - 1);
      std::iota(inner.begin(), inner.end(), lo + 1);
      std::shuffle(inner.begin(), inner.end(), rng);
      inner.resize(uniform(0, m - 1));
      std::sort(inner.begin(), inner.end());
      cuts.insert(cuts.end(), inner.begin(), inner.end());
    }
    cuts.push_back(hi);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      for (std::size_t i = cuts[c]; i < cuts[c + 1]; ++i) {
        for (std::size_t j = cuts[c + 1]; j < hi; ++j) {
          matrix[i][j] = levels[depth];
          matrix[j][i] = levels[depth];
        }
      }
    }
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      if (depth + 1 < levels.size()) split(cuts[c], cuts[c + 1], depth + 1);
    }
  };
  split(0, n, 0);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (!config.branching) std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Ratio>> shuffled(n, std::vector<Ratio>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) shuffled[i][j] = matrix[perm[i]][perm[j]];
  }
  auto space = std::make_shared<FiniteSpace>(std::move(labels), std::move(shuffled));
  if (!validate_ultrametric(*space).valid) throw std::logic_error("generator produced a non-ultrametric matrix");
  return space;
}

// ---------------------------------------------------------------------------
// Random pairs and maps

namespace {

using Index = std::size_t;
using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool contains(const std::vector<Index>& s, Index i) { return std::find(s.begin(), s.end(), i) != s.end(); }

std::vector<Index> set_union(std::vector<Index> a, const std::vector<Index>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Index> set_intersection(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  for (auto i : a) {
    if (contains(b, i)) out.push_back(i);
  }
  return out;
}

// Random non-empty subset of `from`.
std::vector<Index> random_subset(Rng& rng, std::vector<Index> from) {
  std::shuffle(from.begin(), from.end(), rng);
  from.resize(1 + uniform(rng, from.size()));
  std::sort(from.begin(), from.end());
  return from;
}

struct Pair {
  std::vector<Index> a;
  std::vector<Index> b;
  /// B = {b} inside A.
  bool overlap = false;
};

// A pair with delta(B) <= dist(A, B): B a ball and A inside its complement,
// or B a single point of A.
Pair admissible_pair(Rng& rng, const DistanceTable& t) {
  const std::size_t n = t.size();
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), 0);
  Pair p;
  if (n == 1 || uniform(rng, 4) == 0) {
    p.overlap = true;
    p.a = random_subset(rng, all);
    p.b = {p.a[uniform(rng, p.a.size())]};
    return p;
  }
  const Index c = uniform(rng, n);
  std::vector<std::uint32_t> radii;
  for (Index j = 0; j < n; ++j) radii.push_back(t.rank(c, j));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  // Drop the largest radius so the complement is non-empty.
  radii.pop_back();
  const std::uint32_t r = radii[uniform(rng, radii.size())];
  std::vector<Index> rest;
  for (Index j = 0; j < n; ++j) (t.rank(c, j) <= r ? p.b : rest).push_back(j);
  p.a = random_subset(rng, rest);
  return p;
}

// Two random disjoint non-empty subsets.
Pair random_pair(Rng& rng, std::size_t n) {
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t cut = 1 + uniform(rng, n - 1);
  Pair p;
  p.a.assign(all.begin(), all.begin() + cut);
  p.b.assign(all.begin() + cut, all.end());
  p.b.resize(1 + uniform(rng, p.b.size()));
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  return p;
}

// Admissible images: A n B stays in A n B, A in A, B in B.
std::vector<Index> noncyclic_targets(const Pair& p, Index x) {
  const bool in_a = contains(p.a, x);
  const bool in_b = contains(p.b, x);
  if (in_a && in_b) return set_intersection(p.a, p.b);
  return in_a ? p.a : p.b;
}

using Targets = std::function<std::vector<Index>(Index)>;

// Random table on `domain` with images from `targets`, built greedily under
// d(Tx, Ty) <= d(x, y) (or < for strict) with restarts. Points outside the
// domain stay fixed.
std::optional<std::vector<std::uint64_t>> greedy_table(Rng& rng, const DistanceTable& t,
                                                       const std::vector<Index>& domain, const Targets& targets,
                                                       bool strict, std::size_t attempts) {
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::uint64_t> image(t.size());
    std::iota(image.begin(), image.end(), 0);
    std::vector<Index> order = domain;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Index> done;
    bool ok = true;
    for (auto x : order) {
      std::vector<Index> cands;
      for (auto c : targets(x)) {
        bool fits = true;
        for (auto y : done) {
          const auto lhs = t.rank(c, image[y]);
          const auto rhs = t.rank(x, y);
          if (strict ? lhs >= rhs : lhs > rhs) {
            fits = false;
            break;
          }
        }
        if (fits) cands.push_back(c);
      }
      if (cands.empty()) {
        ok = false;
        break;
      }
      image[x] = cands[uniform(rng, cands.size())];
      done.push_back(x);
    }
    if (ok) return image;
  }
  return std::nullopt;
}

// Each ball of level rank `rho` below dist(A, B) goes to one of its
// members, chosen separately inside A and inside B.
std::vector<std::uint64_t> collapse_table(Rng& rng, const DistanceTable& t, const Pair& p) {
  std::vector<std::uint64_t> image(t.size());
  std::iota(image.begin(), image.end(), 0);
  std::uint32_t dist = std::numeric_limits<std::uint32_t>::max();
  for (auto x : p.a) {
    for (auto y : p.b) dist = std::min(dist, t.rank(x, y));
  }
  if (dist == 0) return image;
  const std::uint32_t rho = static_cast<std::uint32_t>(uniform(rng, dist));
  for (const auto* side : {&p.a, &p.b}) {
    std::vector<char> done(t.size(), 0);
    for (auto x : *side) {
      if (done[x]) continue;
      std::vector<Index> cls;
      for (auto y : *side) {
        if (t.rank(x, y) <= rho) cls.push_back(y);
      }
      const Index rep = cls[uniform(rng, cls.size())];
      for (auto y : cls) {
        image[y] = rep;
        done[y] = 1;
      }
    }
  }
  return image;
}

std::vector<std::uint64_t> nonexpansive_noncyclic(Rng& rng, const DistanceTable& t, const Pair& p, MapGenMode mode) {
  if (mode == MapGenMode::kRejection) {
    auto image = greedy_table(rng, t, set_union(p.a, p.b), [&](Index x) { return noncyclic_targets(p, x); }, false, 40);
    if (image) return *image;
  }
  return collapse_table(rng, t, p);
}

// Requires B = {b} inside A; strict contraction forces dist(A, B) = 0.
std::vector<std::uint64_t> strictly_contractive(Rng& rng, const DistanceTable& t, const Pair& p) {
  const Index b = p.b.front();
  auto image = greedy_table(
      rng, t, p.a, [&](Index x) { return x == b ? std::vector<Index>{b} : p.a; }, true, 40);
  if (image) return *image;
  std::vector<std::uint64_t> constant(t.size());
  std::iota(constant.begin(), constant.end(), 0);
  for (auto x : p.a) constant[x] = b;
  return constant;
}

std::vector<std::uint64_t> cyclic_table(Rng& rng, const DistanceTable& t, const Pair& p) {
  std::vector<std::uint64_t> image(t.size());
  std::iota(image.begin(), image.end(), 0);
  const auto both = set_intersection(p.a, p.b);
  for (auto x : set_union(p.a, p.b)) {
    const bool in_a = contains(p.a, x);
    const bool in_b = contains(p.b, x);
    const auto& to = in_a && in_b ? both : (in_a ? p.b : p.a);
    image[x] = to[uniform(rng, to.size())];
  }
  return image;
}

// Random noncyclic table without any distance constraint.
std::vector<std::uint64_t> noncyclic_table(Rng& rng, const DistanceTable& t, const Pair& p) {
  std::vector<std::uint64_t> image(t.size());
  std::iota(image.begin(), image.end(), 0);
  for (auto x : set_union(p.a, p.b)) {
    auto to = noncyclic_targets(p, x);
    image[x] = to[uniform(rng, to.size())];
  }
  return image;
}

bool is_nonexpansive_on(const DistanceTable& t, const std::vector<std::uint64_t>& image, const std::vector<Index>& d) {
  for (auto x : d) {
    for (auto y : d) {
      if (t.rank(image[x], image[y]) > t.rank(x, y)) return false;
    }
  }
  return true;
}

bool is_noncyclic(const std::vector<std::uint64_t>& image, const Pair& p) {
  for (auto x : p.a) {
    if (!contains(p.a, image[x])) return false;
  }
  for (auto x : p.b) {
    if (!contains(p.b, image[x])) return false;
  }
  return true;
}

Ratio diameter_of(const DistanceTable& t, const std::vector<Index>& s) {
  std::uint32_t r = 0;
  for (auto x : s) {
    for (auto y : s) r = std::max(r, t.rank(x, y));
  }
  return t.levels()[r];
}

Ratio dist_of(const DistanceTable& t, const Pair& p) {
  std::uint32_t r = std::numeric_limits<std::uint32_t>::max();
  for (auto x : p.a) {
    for (auto y : p.b) r = std::min(r, t.rank(x, y));
  }
  return t.levels()[r];
}

const std::vector<std::string>& all_theorems() {
  static const std::vector<std::string> ids{"lemma1", "prop1", "thm1", "thm2", "c2", "thm3", "cyclic"};
  return ids;
}

const std::vector<Ratio>& level_pool() {
  static const std::vector<Ratio> pool{Ratio::whole(1), Ratio(1, 2), Ratio(1, 3), Ratio(1, 4),
                                       Ratio(1, 6),     Ratio(1, 8), Ratio(1, 9)};
  return pool;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

SubsetSpec to_subset(const Space& space, const std::vector<Index>& idx) {
  PointList out;
  for (auto i : idx) out.points.push_back(space.point(i));
  return out;
}

// Hypothesis names that a dropped-hypothesis mode stops enforcing.
std::string dropped_name(const std::string& mode) {
  if (mode == "delta") return "delta_B_le_dist";
  if (mode == "nonexpansive") return "nonexpansive";
  if (mode == "noncyclic") return "noncyclic";
  throw SpecError("fuzz: unknown hypothesis to drop: " + mode + " (use delta, nonexpansive or noncyclic)");
}

bool mentions(const TheoremVerdict& v, const std::string& name) {
  return std::any_of(v.hypotheses.begin(), v.hypotheses.end(), [&](const Hypothesis& h) { return h.name == name; });
}

void run_trial(const FuzzConfig& config, std::size_t trial, FuzzSummary& summary) {
  const std::uint64_t seed = trial_seed(config.seed, trial);
  Rng rng(seed);
  const std::size_t n = 1 + uniform(rng, std::max<std::size_t>(config.max_points, 1));
  std::vector<Ratio> levels = level_pool();
  std::shuffle(levels.begin(), levels.end(), rng);
  levels.resize(1 + uniform(rng, 4));
  std::sort(levels.rbegin(), levels.rend());
  DendrogramGenConfig gen;
  gen.n = n;
  gen.levels = levels;
  gen.seed = rng();
  gen.map_mode = config.map_mode;
  const auto space = generate_space(gen);
  const DistanceTable t(*space);

  const std::string& drop = config.drop_hypothesis;
  std::vector<std::string> dropped;
  Pair pair;
  std::vector<std::uint64_t> ne;
  bool violated = true;
  if (drop.empty()) {
    pair = admissible_pair(rng, t);
    ne = nonexpansive_noncyclic(rng, t, pair, config.map_mode);
  } else {
    dropped.push_back(dropped_name(drop));
    violated = false;
    for (std::size_t attempt = 0; attempt < 20 && !violated && n > 1; ++attempt) {
      if (drop == "delta") {
        pair = random_pair(rng, n);
        violated = dist_of(t, pair) < diameter_of(t, pair.b);
        ne = nonexpansive_noncyclic(rng, t, pair, config.map_mode);
      } else if (drop == "nonexpansive") {
        pair = admissible_pair(rng, t);
        ne = noncyclic_table(rng, t, pair);
        violated = !is_nonexpansive_on(t, ne, set_union(pair.a, pair.b));
      } else {
        pair = admissible_pair(rng, t);
        const auto d = set_union(pair.a, pair.b);
        auto image = greedy_table(rng, t, d, [&](Index) { return d; }, false, 10);
        if (image) {
          ne = *image;
          violated = !is_noncyclic(ne, pair);
        }
      }
    }
    if (!violated) return;
    ++summary.dropped_violated;
  }

  const SubsetSpec a = to_subset(*space, pair.a);
  const SubsetSpec b = to_subset(*space, pair.b);
  const std::vector<std::string>& ids = config.theorems.empty() ? all_theorems() : config.theorems;
  CheckOptions opts;
  opts.dropped = dropped;
  opts.seed = seed;

  for (const auto& id : ids) {
    std::optional<MapSpec> map;
    TheoremVerdict v;
    if (id == "lemma1") {
      v = check_lemma1(*space, a, b, kDefaultBound, dropped);
    } else if (id == "prop1") {
      v = check_prop1(*space, a, b, opts);
    } else if (id == "thm1" || id == "thm2" || id == "c2") {
      map = MapSpec{TableMap{ne}};
      if (id == "thm1") {
        v = check_theorem1(*space, a, b, *map, opts);
      } else {
        v = check_fixed_pair(*space, a, b, *map,
                             id == "thm2" ? FixedPairMode::kWeakRegular : FixedPairMode::kStrictOrbit, opts);
      }
    } else if (id == "thm3") {
      map = MapSpec{TableMap{pair.overlap && drop.empty() ? strictly_contractive(rng, t, pair) : ne}};
      v = check_fixed_pair(*space, a, b, *map, FixedPairMode::kStrict, opts);
    } else if (id == "cyclic") {
      map = MapSpec{TableMap{drop.empty() || drop == "delta" ? cyclic_table(rng, t, pair) : ne}};
      v = check_cyclic_remark(*space, a, b, *map, opts);
    } else {
      throw SpecError("fuzz: unknown theorem id: " + id);
    }
    // A dropped hypothesis the theorem does not have leaves nothing to probe.
    if (!dropped.empty() && !mentions(v, dropped.front())) continue;

    auto& tally = summary.tallies[id];
    ++tally.trials;
    if (v.status == VerdictStatus::kInapplicable) continue;
    ++tally.applicable;
    if (id == "thm1" && v.case_label) ++summary.thm1_cases[*v.case_label];
    if (v.status == VerdictStatus::kVerified) {
      ++tally.verified;
      continue;
    }
    ++tally.failed;
    Counterexample cx;
    cx.theorem = id;
    cx.trial = trial;
    cx.trial_seed = seed;
    cx.instance["space"] = space_to_json(*space);
    cx.instance["A"] = subset_to_json(*space, a);
    cx.instance["B"] = subset_to_json(*space, b);
    if (map) cx.instance["map"] = map_to_json(*space, *map);
    cx.verdict = to_json(v);
    summary.counterexamples.push_back(std::move(cx));
  }
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  if (config.trials < 1) throw SpecError("fuzz: trials must be at least 1");
  if (config.max_points < 1) throw SpecError("fuzz: max points must be at least 1");
  if (!config.drop_hypothesis.empty()) dropped_name(config.drop_hypothesis);
  FuzzSummary summary;
  summary.drop_hypothesis = config.drop_hypothesis;
  for (std::size_t i = 0; i < config.trials; ++i) run_trial(config, i, summary);
  return summary;
}

FuzzSummary fuzz_trial(const FuzzConfig& config, std::size_t trial) {
  FuzzSummary summary;
  summary.drop_hypothesis = config.drop_hypothesis;
  run_trial(config, trial, summary);
  return summary;
}

nlohmann::json to_json(const FuzzSummary& s) {
  nlohmann::json j;
  auto& tallies = j["tallies"] = nlohmann::json::object();
  for (const auto& [id, t] : s.tallies) {
    tallies[id] = {{"trials", t.trials}, {"applicable", t.applicable}, {"verified", t.verified}, {"failed", t.failed}};
  }
  j["thm1_cases"] = s.thm1_cases;
  auto& cx = j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : s.counterexamples) {
    cx.push_back({{"theorem", c.theorem},
                  {"trial", c.trial},
                  {"trial_seed", c.trial_seed},
                  {"instance", c.instance},
                  {"verdict", c.verdict}});
  }
  if (!s.drop_hypothesis.empty()) {
    j["drop_hypothesis"] = s.drop_hypothesis;
    j["dropped_violated"] = s.dropped_violated;
  }
  return j;
}

}  // namespace ultraprox
