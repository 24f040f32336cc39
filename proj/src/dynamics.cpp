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

#include "ultraprox/dynamics.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "ultraprox/errors.hpp"
#include "ultraprox/json_io.hpp"

namespace ultraprox {

const char* to_string(WeakRegular w) {
  switch (w) {
    case WeakRegular::kVerified:
      return "verified";
    case WeakRegular::kRefuted:
      return "refuted";
    case WeakRegular::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

const char* to_string(OrbitEnd e) {
  switch (e) {
    case OrbitEnd::kFixedPoint:
      return "fixed_point";
    case OrbitEnd::kCycle:
      return "cycle";
    case OrbitEnd::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

const char* to_string(SolveKind k) {
  switch (k) {
    case SolveKind::kFixedPoint:
      return "fixed_point";
    case SolveKind::kMinimalInvariantBall:
      return "minimal_invariant_ball";
    case SolveKind::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> indices_of(const Space& space, const SubsetSpec& subset) {
  std::vector<std::size_t> out;
  for (const auto& p : space.enumerate(subset, 0).points) out.push_back(p.index());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

void refute(PropertyFlag& flag, const Point& x, const Point& y) {
  if (!flag.holds) return;
  flag.holds = false;
  flag.certified = true;
  flag.witness = PointPair{x, y};
}

// Whether every point of `from` is sent into `to`; witness (x, Tx) otherwise.
PropertyFlag invariance_exhaustive(const Space& space, const std::vector<std::uint64_t>& image,
                                   const std::vector<std::size_t>& from, const std::vector<char>& to) {
  PropertyFlag f;
  f.certified = true;
  for (auto i : from) {
    if (!to[image[i]]) {
      refute(f, space.point(i), space.point(image[i]));
      break;
    }
  }
  return f;
}

std::vector<char> marker(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<char> out(n, 0);
  for (auto i : idx) out[i] = 1;
  return out;
}

MapClassification classify_exhaustive(const Space& space, const MapSpec& map, const std::optional<SubsetSpec>& a,
                                      const std::optional<SubsetSpec>& b) {
  const std::size_t n = space.size();
  const DistanceTable table(space);
  const auto image = tabulate(space, map);
  std::vector<std::size_t> domain;
  std::vector<std::size_t> ia;
  std::vector<std::size_t> ib;
  if (a) {
    ia = indices_of(space, *a);
    ib = indices_of(space, *b);
    std::set<std::size_t> u(ia.begin(), ia.end());
    u.insert(ib.begin(), ib.end());
    domain.assign(u.begin(), u.end());
  } else {
    domain = all_indices(n);
  }

  MapClassification c;
  c.exhaustive = true;
  for (auto* f : {&c.nonexpansive, &c.strictly_contractive, &c.strictly_contractive_on_orbit, &c.isometry}) {
    f->certified = true;
  }
  for (std::size_t p = 0; p < domain.size(); ++p) {
    for (std::size_t q = p + 1; q < domain.size(); ++q) {
      const auto i = domain[p];
      const auto j = domain[q];
      ++c.pairs_checked;
      const auto d = table.rank(i, j);
      const auto dt = table.rank(image[i], image[j]);
      if (dt > d) refute(c.nonexpansive, space.point(i), space.point(j));
      if (dt >= d) refute(c.strictly_contractive, space.point(i), space.point(j));
      if (dt != d) refute(c.isometry, space.point(i), space.point(j));
    }
  }
  for (auto i : domain) {
    const auto ti = image[i];
    if (ti != i && table.rank(image[ti], ti) >= table.rank(ti, i)) {
      refute(c.strictly_contractive_on_orbit, space.point(i), space.point(ti));
    }
  }

  c.weak_regular.status = WeakRegular::kVerified;
  c.weak_regular.detail = "every orbit from the domain ends in a fixed point or a cycle below the initial gap";
  for (auto i : domain) {
    auto trace = orbit(space, map, space.point(i), n + 1);
    auto v = weak_regular_verdict(trace);
    if (v.status != WeakRegular::kVerified) {
      c.weak_regular = std::move(v);
      break;
    }
  }

  if (a) {
    const auto in_a = marker(n, ia);
    const auto in_b = marker(n, ib);
    PropertyFlag non = invariance_exhaustive(space, image, ia, in_a);
    if (non.holds) non = invariance_exhaustive(space, image, ib, in_b);
    PropertyFlag cyc = invariance_exhaustive(space, image, ia, in_b);
    if (cyc.holds) cyc = invariance_exhaustive(space, image, ib, in_a);
    c.noncyclic = std::move(non);
    c.cyclic = std::move(cyc);
  }
  return c;
}

// Random points drawn from the classification domain.
class Sampler {
 public:
  Sampler(const Space& space, const std::optional<SubsetSpec>& a, const std::optional<SubsetSpec>& b,
          std::uint64_t seed)
      : space_(space), rng_(seed) {
    baire_ = dynamic_cast<const BaireSpace*>(&space);
    std::vector<const SubsetSpec*> parts;
    if (a) parts = {&*a, &*b};
    if (baire_) {
      for (const auto* s : parts) {
        auto shape = seq_shape(space, *s);
        if (!shape) throw UnsupportedError("classify: sequence-space subsets must be points or balls");
        shapes_.push_back(std::move(*shape));
      }
      if (shapes_.empty()) shapes_.push_back(SeqShape{false, baire_->point_of(UltraSeq::constant(0)), {}});
    } else if (parts.empty()) {
      pool_ = space.is_finite() ? space.points() : space.enumerate(PredicateSubset{Predicate::kOdd, 0}, 0).points;
      if (!space.is_finite()) {
        auto even = space.enumerate(PredicateSubset{Predicate::kEven, 0}, kDefaultBound).points;
        pool_ = space.enumerate(PredicateSubset{Predicate::kOdd, 0}, kDefaultBound).points;
        pool_.insert(pool_.end(), even.begin(), even.end());
      }
    } else {
      for (const auto* s : parts) {
        auto pts = listed_points(space, *s, kDefaultBound);
        pool_.insert(pool_.end(), pts.begin(), pts.end());
      }
    }
  }

  // A point and a second point from the same part, close to the first when
  // the space allows it.
  PointPair draw_pair() {
    if (!baire_) return {pick(), pick()};
    const auto& shape = shapes_[uniform(shapes_.size())];
    Point x = draw_in(shape);
    if (shape.is_point) {
      const auto& other = shapes_[uniform(shapes_.size())];
      return {x, draw_in(other)};
    }
    // y agrees with x on k >= |prefix| terms, then differs.
    const std::size_t k = shape.prefix.size() + uniform(7);
    auto head = x.seq().terms(k + 1);
    const Integer xk = head.back();
    head.pop_back();
    Integer yk = small();
    if (yk == xk) yk += 1;
    head.push_back(yk);
    for (std::size_t i = uniform(4); i > 0; --i) head.push_back(small());
    return {x, baire_->point_of(UltraSeq::from_prefix(std::move(head), small()))};
  }

  Point draw() {
    if (!baire_) return pick();
    return draw_in(shapes_[uniform(shapes_.size())]);
  }

 private:
  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  Integer small() { return Integer(uniform(5)); }

  Point pick() {
    if (pool_.empty()) throw DomainError("classify: empty domain");
    return pool_[uniform(pool_.size())];
  }

  Point draw_in(const SeqShape& shape) {
    if (shape.is_point) return shape.point;
    std::vector<Integer> prefix = shape.prefix;
    for (std::size_t i = uniform(7); i > 0; --i) prefix.push_back(small());
    return baire_->point_of(UltraSeq::from_prefix(std::move(prefix), small()));
  }

  const Space& space_;
  const BaireSpace* baire_ = nullptr;
  std::mt19937_64 rng_;
  std::vector<SeqShape> shapes_;
  std::vector<Point> pool_;
};

// Structural invariance for causal maps: the first k terms of T(x) depend
// only on the first k terms of x, so T maps the cylinder with prefix P into
// the cylinder with prefix Q (|Q| <= |P|) iff T(c) starts with Q for any c
// in the first cylinder.
std::optional<bool> causal_invariance(const Space& space, const MapSpec& map, const SeqShape& from,
                                      const SeqShape& to) {
  const Point tx = apply(space, map, from.point);
  if (from.is_point) {
    if (to.is_point) {
      if (space.same_point(tx, to.point)) return true;
      auto m = space.measure(tx, to.point);
      if (m.exact()) return false;
      return std::nullopt;
    }
    return space.contains(Ball{to.point, BaireSpace::distance_at(to.prefix.size())}, tx);
  }
  if (to.is_point || to.prefix.size() > from.prefix.size()) return std::nullopt;
  auto head = tx.seq().terms(to.prefix.size());
  return head == to.prefix;
}

MapClassification classify_sampled(const Space& space, const MapSpec& map, const std::optional<SubsetSpec>& a,
                                   const std::optional<SubsetSpec>& b, const ClassifyOptions& options) {
  MapClassification c;
  c.exhaustive = false;
  Sampler sampler(space, a, b, options.seed);
  const bool causal = space.kind() == SpaceKind::kBaire && is_causal(map);

  for (std::size_t s = 0; s < options.samples; ++s) {
    auto [x, y] = sampler.draw_pair();
    if (space.same_point(x, y)) continue;
    auto m = space.measure(x, y);
    const Point tx = apply(space, map, x);
    const Point ty = apply(space, map, y);
    auto mt = space.measure(tx, ty);
    if (!m.exact() || !mt.exact()) {
      ++c.undetermined_pairs;
      continue;
    }
    ++c.pairs_checked;
    if (*m.value < *mt.value) refute(c.nonexpansive, x, y);
    if (*m.value <= *mt.value) refute(c.strictly_contractive, x, y);
    if (*m.value != *mt.value) refute(c.isometry, x, y);

    auto g1 = space.measure(x, tx);
    if (g1.exact() && !g1.value->is_zero()) {
      auto g2 = space.measure(tx, apply(space, map, tx));
      if (g2.exact() && *g1.value <= *g2.value) refute(c.strictly_contractive_on_orbit, x, tx);
    }
  }
  // Maps that respect prefixes never expand the prefix metric.
  if (causal) c.nonexpansive.certified = true;

  const std::size_t orbits = std::min<std::size_t>(options.samples, 20);
  std::size_t agreeing = 0;
  for (std::size_t s = 0; s < orbits; ++s) {
    Point x = sampler.draw();
    auto v = weak_regular_verdict(orbit(space, map, x, std::max<std::size_t>(options.orbit_budget, 1)));
    if (v.status == WeakRegular::kRefuted) {
      c.weak_regular = std::move(v);
      break;
    }
    if (v.status == WeakRegular::kVerified) ++agreeing;
  }
  if (c.weak_regular.status != WeakRegular::kRefuted) {
    c.weak_regular.status = WeakRegular::kUndetermined;
    c.weak_regular.detail = "not refuted on " + std::to_string(orbits) + " sampled orbits (" +
                            std::to_string(agreeing) + " verified individually)";
  }

  if (a) {
    auto check = [&](const SubsetSpec& from, const SubsetSpec& to) {
      PropertyFlag f;
      if (causal) {
        auto sf = seq_shape(space, from);
        auto st = seq_shape(space, to);
        if (sf && st) {
          if (auto r = causal_invariance(space, map, *sf, *st)) {
            f.certified = true;
            if (!*r) {
              const Point x = sf->point;
              refute(f, x, apply(space, map, x));
            }
            return f;
          }
        }
      }
      Sampler local(space, from, from, options.seed + 1);
      for (std::size_t s = 0; s < options.samples && f.holds; ++s) {
        Point x = local.draw();
        Point tx = apply(space, map, x);
        if (!space.contains(to, tx)) refute(f, x, tx);
      }
      return f;
    };
    PropertyFlag non = check(*a, *a);
    if (non.holds) {
      PropertyFlag nb = check(*b, *b);
      nb.certified = nb.certified && non.certified;
      non = std::move(nb);
    }
    PropertyFlag cyc = check(*a, *b);
    if (cyc.holds) {
      PropertyFlag cb = check(*b, *a);
      cb.certified = cb.certified && cyc.certified;
      cyc = std::move(cb);
    }
    c.noncyclic = std::move(non);
    c.cyclic = std::move(cyc);
  }
  return c;
}

}  // namespace

MapClassification classify_map(const Space& space, const MapSpec& map, const std::optional<SubsetSpec>& a,
                               const std::optional<SubsetSpec>& b, const ClassifyOptions& options) {
  check_compatible(space, map);
  if (a.has_value() != b.has_value()) throw DomainError("classify: give both A and B or neither");
  if (options.mode == ClassifyMode::kExhaustive) {
    if (!space.is_finite()) throw UnsupportedError("classify: exhaustive mode requires a finite space");
    return classify_exhaustive(space, map, a, b);
  }
  return classify_sampled(space, map, a, b, options);
}

std::optional<PropertyFlag> maps_into(const Space& space, const MapSpec& map, const SubsetSpec& from,
                                      const SubsetSpec& to) {
  check_compatible(space, map);
  if (space.is_finite()) {
    const auto image = tabulate(space, map);
    return invariance_exhaustive(space, image, indices_of(space, from), marker(space.size(), indices_of(space, to)));
  }
  if (space.kind() != SpaceKind::kBaire || !is_causal(map)) return std::nullopt;
  auto sf = seq_shape(space, from);
  auto st = seq_shape(space, to);
  if (!sf || !st) return std::nullopt;
  auto r = causal_invariance(space, map, *sf, *st);
  if (!r) return std::nullopt;
  PropertyFlag f;
  f.certified = true;
  if (!*r) refute(f, sf->point, apply(space, map, sf->point));
  return f;
}

// ---------------------------------------------------------------------------
// Orbits

OrbitTrace orbit(const Space& space, const MapSpec& map, const Point& x, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("orbit: max_steps must be at least 1");
  space.check_owned(x);
  check_compatible(space, map);
  OrbitTrace t;
  t.points.push_back(x);
  std::unordered_map<std::uint64_t, std::size_t> seen;
  const bool indexed = x.has_index();
  if (indexed) seen.emplace(x.index(), 0);

  for (std::size_t step = 0; step < max_steps; ++step) {
    Point next = apply(space, map, t.points.back());
    auto m = space.measure(t.points.back(), next);
    if (!m.exact()) {
      t.depth_exhausted = true;
      return t;
    }
    t.points.push_back(std::move(next));
    t.gaps.push_back(*m.value);
    const std::size_t last = t.points.size() - 1;
    if (m.value->is_zero()) {
      t.end = OrbitEnd::kFixedPoint;
      t.entry = last - 1;
      t.length = 1;
      return t;
    }
    std::optional<std::size_t> prev;
    if (indexed) {
      auto [it, inserted] = seen.emplace(t.points[last].index(), last);
      if (!inserted) prev = it->second;
    } else {
      for (std::size_t k = 0; k + 1 < last; ++k) {
        if (space.same_point(t.points[k], t.points[last])) {
          prev = k;
          break;
        }
      }
    }
    if (prev) {
      t.end = OrbitEnd::kCycle;
      t.entry = *prev;
      t.length = last - *prev;
      return t;
    }
  }
  return t;
}

WeakRegularResult weak_regular_verdict(const OrbitTrace& trace) {
  WeakRegularResult r;
  if (!trace.points.empty()) r.witness = trace.points.front();
  if (trace.gaps.empty()) {
    r.detail = "no step could be evaluated";
    return r;
  }
  const Ratio& first = trace.gaps.front();
  if (first.is_zero()) {
    r.status = WeakRegular::kVerified;
    r.detail = "x is fixed; the condition is vacuous";
    return r;
  }
  switch (trace.end) {
    case OrbitEnd::kFixedPoint:
      r.status = WeakRegular::kVerified;
      r.detail = "orbit reaches a fixed point; limsup 0 < " + first.to_string();
      return r;
    case OrbitEnd::kCycle: {
      Ratio limsup;
      for (std::size_t k = trace.entry; k < trace.entry + trace.length; ++k) limsup = ratio_max(limsup, trace.gaps[k]);
      const bool ok = limsup < first;
      r.status = ok ? WeakRegular::kVerified : WeakRegular::kRefuted;
      r.detail = "cycle of length " + std::to_string(trace.length) + "; limsup " + limsup.to_string() +
                 (ok ? " < " : " >= ") + first.to_string();
      return r;
    }
    case OrbitEnd::kBudgetExhausted:
      r.detail = "budget exhausted after " + std::to_string(trace.gaps.size()) + " steps";
      return r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Minimal invariant balls

namespace {

std::vector<InvariantBall> invariant_balls_in(const Space& space, const DistanceTable& table,
                                              const std::vector<std::uint64_t>& image,
                                              const std::vector<std::size_t>& universe,
                                              const std::vector<char>& in_region) {
  const std::size_t n = table.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<InvariantBall> out;
  std::vector<char> in_ball(n, 0);
  for (auto c : universe) {
    if (!in_region[c]) continue;
    std::vector<std::uint32_t> radii;
    for (auto u : universe) radii.push_back(table.rank(c, u));
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (auto r : radii) {
      std::vector<std::size_t> members;
      bool inside = true;
      for (auto u : universe) {
        if (table.rank(c, u) > r) continue;
        if (!in_region[u]) {
          inside = false;
          break;
        }
        members.push_back(u);
      }
      // Larger radii only add points.
      if (!inside) break;
      if (!seen.insert(members).second) continue;

      for (auto m : members) in_ball[m] = 1;
      bool ok = true;
      const std::uint32_t gap = table.rank(members.front(), image[members.front()]);
      if (gap == 0) ok = false;
      for (std::size_t k = 0; ok && k < members.size(); ++k) {
        const auto m = members[k];
        ok = in_ball[image[m]] && table.rank(m, image[m]) == gap;
      }
      std::uint32_t diam = 0;
      for (std::size_t p = 0; ok && p < members.size(); ++p) {
        for (std::size_t q = p + 1; q < members.size(); ++q) diam = std::max(diam, table.rank(members[p], members[q]));
      }
      for (auto m : members) in_ball[m] = 0;
      if (!ok || diam != gap) continue;

      InvariantBall ball{Ball{space.point(members.front()), table.levels()[diam]}, table.levels()[gap], {}};
      for (auto m : members) ball.members.push_back(space.point(m));
      out.push_back(std::move(ball));
    }
  }
  return out;
}

}  // namespace

std::vector<InvariantBall> minimal_invariant_balls(const Space& space, const MapSpec& map, const SubsetSpec& region,
                                                   const std::optional<SubsetSpec>& universe) {
  if (!space.is_finite()) throw UnsupportedError("minimal_invariant_balls: finite spaces only");
  check_compatible(space, map);
  const DistanceTable table(space);
  const auto image = tabulate(space, map);
  const auto u = universe ? indices_of(space, *universe) : all_indices(space.size());
  return invariant_balls_in(space, table, image, u, marker(space.size(), indices_of(space, region)));
}

// ---------------------------------------------------------------------------
// Solver

namespace {

SolveOutcome solve_finite(const Space& space, const MapSpec& map, const Point& start,
                          const std::optional<SubsetSpec>& domain) {
  const std::size_t n = space.size();
  const DistanceTable table(space);
  const auto image = tabulate(space, map);
  const auto universe = domain ? indices_of(space, *domain) : all_indices(n);
  const std::size_t s = start.index();
  if (!std::binary_search(universe.begin(), universe.end(), s)) {
    throw DomainError("solve: start point lies outside the domain");
  }

  SolveOutcome out(Ball{start, Ratio()});
  const std::uint32_t r = table.rank(s, image[s]);
  out.search_ball = Ball{start, table.levels()[r]};
  std::vector<std::size_t> members;
  for (auto u : universe) {
    if (table.rank(s, u) <= r) members.push_back(u);
  }
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      const auto i = members[p];
      const auto j = members[q];
      if (table.rank(image[i], image[j]) > table.rank(i, j)) {
        throw PreconditionError("solve: map is not nonexpansive on the search ball",
                                "d(T" + space.label(space.point(i)) + ",T" + space.label(space.point(j)) + ") = " +
                                    table.value(image[i], image[j]).to_string() + " > d(" +
                                    space.label(space.point(i)) + "," + space.label(space.point(j)) +
                                    ") = " + table.value(i, j).to_string());
      }
    }
  }

  for (auto m : members) {
    if (image[m] == m) {
      out.kind = SolveKind::kFixedPoint;
      out.fixed_point = space.point(m);
      out.certificate = "T(" + space.label(space.point(m)) + ") = " + space.label(space.point(m));
      return out;
    }
  }
  auto balls = invariant_balls_in(space, table, image, universe, marker(n, members));
  if (!balls.empty()) {
    out.kind = SolveKind::kMinimalInvariantBall;
    out.invariant_ball = std::move(balls.front());
    return out;
  }
  out.reason = "no fixed point and no minimal invariant ball in the search ball";
  out.theorem_violation = true;
  return out;
}

std::string seq_certificate(const UltraSeq& x, std::size_t k) {
  std::string out = "agrees with the center on the first " + std::to_string(k) + " terms";
  if (auto tail = x.stable_tail()) {
    out += "; T(x) = x with stable tail " + tail->value.str() + " from index " + std::to_string(tail->from);
  }
  return out;
}

SolveOutcome solve_baire(const BaireSpace& space, const MapSpec& map, const Point& start,
                         const std::optional<SubsetSpec>& domain) {
  SolveOutcome out(Ball{start, Ratio()});
  const Point tx = apply(space, map, start);
  auto m = space.measure(start, tx);
  if (!m.exact()) {
    out.search_ball = Ball{start, Ratio()};
    out.reason = "d(x, Tx) not decided within the comparison depth";
    return out;
  }
  out.search_ball = Ball{start, *m.value};
  if (m.value->is_zero()) {
    out.kind = SolveKind::kFixedPoint;
    out.fixed_point = start;
    out.certificate = seq_certificate(start.seq(), 0);
    return out;
  }
  if (!is_causal(map)) {
    out.reason = "no structural solver for this map";
    return out;
  }
  const std::size_t k = *BaireSpace::cylinder_length(*m.value);
  const auto prefix = start.seq().terms(k);
  for (int tail : {0, 1}) {
    Point cand = space.point_of(UltraSeq::from_prefix(prefix, Integer(tail)));
    if (domain && !space.contains(*domain, cand)) continue;
    if (space.same_point(cand, apply(space, map, cand))) {
      out.kind = SolveKind::kFixedPoint;
      out.certificate = seq_certificate(cand.seq(), k);
      out.fixed_point = std::move(cand);
      return out;
    }
  }
  out.reason = "no eventually constant candidate in the ball is fixed";
  return out;
}

}  // namespace

SolveOutcome solve_in_ball(const Space& space, const MapSpec& map, const Point& start,
                           const std::optional<SubsetSpec>& domain) {
  space.check_owned(start);
  check_compatible(space, map);
  if (space.is_finite()) return solve_finite(space, map, start, domain);
  if (const auto* baire = dynamic_cast<const BaireSpace*>(&space)) return solve_baire(*baire, map, start, domain);
  SolveOutcome out(Ball{start, Ratio()});
  out.search_ball = Ball{start, Ratio()};
  out.reason = "no solver for this space";
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

nlohmann::json flag_json(const Space& space, const PropertyFlag& f) {
  nlohmann::json j;
  j["status"] = !f.holds ? "refuted" : (f.certified ? "holds" : "not_refuted");
  if (f.witness) {
    j["witness"] = {point_to_json(space, f.witness->first), point_to_json(space, f.witness->second)};
  }
  return j;
}

}  // namespace

nlohmann::json to_json(const Space& space, const MapClassification& c) {
  nlohmann::json j;
  j["mode"] = c.exhaustive ? "exhaustive" : "sampled";
  j["nonexpansive"] = flag_json(space, c.nonexpansive);
  j["strictly_contractive"] = flag_json(space, c.strictly_contractive);
  j["strictly_contractive_on_orbit"] = flag_json(space, c.strictly_contractive_on_orbit);
  j["isometry"] = flag_json(space, c.isometry);
  nlohmann::json wr;
  wr["status"] = to_string(c.weak_regular.status);
  wr["detail"] = c.weak_regular.detail;
  if (c.weak_regular.status != WeakRegular::kVerified && c.weak_regular.witness) {
    wr["witness"] = point_to_json(space, *c.weak_regular.witness);
  }
  j["weak_regular"] = wr;
  if (c.noncyclic) j["noncyclic"] = flag_json(space, *c.noncyclic);
  if (c.cyclic) j["cyclic"] = flag_json(space, *c.cyclic);
  j["pairs_checked"] = c.pairs_checked;
  j["undetermined_pairs"] = c.undetermined_pairs;
  return j;
}

nlohmann::json to_json(const Space& space, const OrbitTrace& t) {
  nlohmann::json j;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const auto& p : t.points) pts.push_back(space.label(p));
  auto& gaps = j["gaps"] = nlohmann::json::array();
  for (const auto& g : t.gaps) gaps.push_back(ratio_to_json(g));
  j["end"] = to_string(t.end);
  if (t.end != OrbitEnd::kBudgetExhausted) {
    j["entry"] = t.entry;
    j["length"] = t.length;
  }
  if (t.depth_exhausted) j["depth_exhausted"] = true;
  return j;
}

nlohmann::json to_json(const Space& space, const SolveOutcome& s) {
  nlohmann::json j;
  j["outcome"] = to_string(s.kind);
  j["search_ball"] = subset_to_json(space, s.search_ball);
  if (s.fixed_point) {
    j["fixed_point"] = point_to_json(space, *s.fixed_point);
    j["fixed_point_label"] = space.label(*s.fixed_point);
    j["certificate"] = s.certificate;
  }
  if (s.invariant_ball) {
    const auto& b = *s.invariant_ball;
    j["ball"] = subset_to_json(space, b.ball);
    j["common_gap"] = ratio_to_json(b.common_gap);
    auto& members = j["members"] = nlohmann::json::array();
    for (const auto& p : b.members) members.push_back(point_to_json(space, p));
  }
  if (s.kind == SolveKind::kInconclusive) j["reason"] = s.reason;
  if (s.theorem_violation) j["theorem_violation"] = true;
  return j;
}

}  // namespace ultraprox
