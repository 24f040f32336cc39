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

#include <algorithm>

#include "ultraprox/errors.hpp"
#include "ultraprox/json_io.hpp"

namespace ultraprox {

std::optional<SeqShape> seq_shape(const Space& space, const SubsetSpec& subset) {
  const auto* baire = dynamic_cast<const BaireSpace*>(&space);
  if (!baire) return std::nullopt;
  if (const auto* list = std::get_if<PointList>(&subset)) {
    if (list->points.size() != 1) return std::nullopt;
    space.check_owned(list->points.front());
    return SeqShape{true, list->points.front(), {}};
  }
  if (const auto* ball = std::get_if<Ball>(&subset)) {
    space.check_owned(ball->center);
    auto k = BaireSpace::cylinder_length(ball->radius);
    if (!k) return SeqShape{true, ball->center, {}};
    return SeqShape{false, ball->center, ball->center.seq().terms(*k)};
  }
  const auto& pred = std::get<PredicateSubset>(subset);
  if (pred.kind != Predicate::kCoord0) return std::nullopt;
  return SeqShape{false, baire->point_of(UltraSeq::constant(pred.value)), {pred.value}};
}

namespace {

using Shape = SeqShape;

// First index where x differs from `prefix`.
std::optional<std::size_t> prefix_mismatch(const UltraSeq& x, const std::vector<Integer>& prefix) {
  SeqBudget budget;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (x.term(i, budget) != prefix[i]) return i;
  }
  return std::nullopt;
}

struct ShapeDistance {
  Ratio value;
  PointPair witness;
  // Whether every cross pair realizes `value` (disjoint balls, or a point
  // outside a ball); otherwise the realizing points are the intersection.
  bool constant_cross = false;
};

ShapeDistance shape_distance(const Space& space, const Shape& a, const Shape& b) {
  if (a.is_point && b.is_point) {
    Ratio d = space.distance(a.point, b.point);
    return {d, {a.point, b.point}, true};
  }
  if (a.is_point || b.is_point) {
    const Shape& p = a.is_point ? a : b;
    const Shape& c = a.is_point ? b : a;
    auto j = prefix_mismatch(p.point.seq(), c.prefix);
    if (!j) return {Ratio(), {p.point, p.point}, false};
    ShapeDistance out{BaireSpace::distance_at(*j), {p.point, c.point}, true};
    if (!a.is_point) std::swap(out.witness.first, out.witness.second);
    return out;
  }
  const std::size_t common = std::min(a.prefix.size(), b.prefix.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.prefix[i] != b.prefix[i]) return {BaireSpace::distance_at(i), {a.point, b.point}, true};
  }
  const Point& inner = a.prefix.size() >= b.prefix.size() ? a.point : b.point;
  return {Ratio(), {inner, inner}, false};
}

DiameterReport shape_diameter(const BaireSpace& space, const Shape& s) {
  if (s.is_point) return {Ratio(), false, PointPair{s.point, s.point}};
  auto p0 = space.point_of(UltraSeq::from_prefix(s.prefix, Integer(0)));
  auto p1 = space.point_of(UltraSeq::from_prefix(s.prefix, Integer(1)));
  return {BaireSpace::distance_at(s.prefix.size()), false, PointPair{std::move(p0), std::move(p1)}};
}

struct PairScan {
  Ratio minimum;
  std::vector<std::pair<std::size_t, std::size_t>> at_minimum;
};

PairScan scan_pairs(const Space& space, const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) throw DomainError("dist(A,B): empty subset");
  PairScan out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Ratio d = space.distance(a[i], b[j]);
      if (first || d < out.minimum) {
        out.minimum = std::move(d);
        out.at_minimum.clear();
        first = false;
        out.at_minimum.emplace_back(i, j);
      } else if (d == out.minimum) {
        out.at_minimum.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<std::size_t> trend_bounds(std::size_t bound) {
  std::vector<std::size_t> out;
  for (std::size_t b : {bound / 4, bound / 2, bound}) {
    b = std::max<std::size_t>(b, 1);
    if (out.empty() || out.back() < b) out.push_back(b);
  }
  return out;
}

SetDistance listed_distance(const Space& space, const SubsetSpec& a, const SubsetSpec& b, std::size_t bound,
                            PairScan* scan_out, Enumeration* ea_out, Enumeration* eb_out) {
  Enumeration ea = space.enumerate(a, bound);
  Enumeration eb = space.enumerate(b, bound);
  PairScan scan = scan_pairs(space, ea.points, eb.points);
  SetDistance out;
  out.value = scan.minimum;
  const auto [i, j] = scan.at_minimum.front();
  out.witness = PointPair{ea.points[i], eb.points[j]};
  if (ea.truncated || eb.truncated) {
    out.truncated = true;
    for (std::size_t tb : trend_bounds(bound)) {
      if (tb == bound) {
        out.trend.push_back({tb, scan.minimum});
        continue;
      }
      Enumeration sa = space.enumerate(a, tb);
      Enumeration sb = space.enumerate(b, tb);
      if (sa.points.empty() || sb.points.empty()) continue;
      out.trend.push_back({tb, scan_pairs(space, sa.points, sb.points).minimum});
    }
    const auto n = out.trend.size();
    out.attained = !(n >= 2 && out.trend[n - 1].minimum < out.trend[n - 2].minimum);
  }
  if (scan_out) *scan_out = std::move(scan);
  if (ea_out) *ea_out = std::move(ea);
  if (eb_out) *eb_out = std::move(eb);
  return out;
}

void push_unique(const Space& space, std::vector<Point>& out, const Point& p) {
  for (const auto& q : out) {
    if (space.same_point(p, q)) return;
  }
  out.push_back(p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Balls

Enumeration ball_members(const Space& space, const Ball& ball, std::size_t bound) {
  return space.enumerate(ball, bound);
}

CentralityReport is_central(const Space& space, const Ball& ball) {
  if (!space.is_finite()) throw UnsupportedError("is_central: finite spaces only");
  const auto members = space.enumerate(ball, 0).points;
  for (const auto& y : members) {
    if (!same_ball(space, ball, Ball{y, ball.radius})) return {false, y};
  }
  return {true, std::nullopt};
}

bool same_ball(const Space& space, const Ball& a, const Ball& b) {
  if (!space.is_finite()) throw UnsupportedError("same_ball: finite spaces only");
  for (const auto& p : space.points()) {
    if (space.contains(a, p) != space.contains(b, p)) return false;
  }
  return true;
}

Ratio diameter(const Space& space, const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("diameter: empty set");
  Ratio out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Ratio d = space.distance(points[i], points[j]);
      if (out < d) out = std::move(d);
    }
  }
  return out;
}

DiameterReport subset_diameter(const Space& space, const SubsetSpec& subset, std::size_t bound) {
  if (auto shape = seq_shape(space, subset)) {
    return shape_diameter(static_cast<const BaireSpace&>(space), *shape);
  }
  Enumeration e = space.enumerate(subset, bound);
  if (e.points.empty()) throw DomainError("diameter: empty set");
  DiameterReport out;
  out.truncated = e.truncated;
  out.attained_by = PointPair{e.points.front(), e.points.front()};
  for (std::size_t i = 0; i < e.points.size(); ++i) {
    for (std::size_t j = i + 1; j < e.points.size(); ++j) {
      Ratio d = space.distance(e.points[i], e.points[j]);
      if (out.value < d) {
        out.value = std::move(d);
        out.attained_by = PointPair{e.points[i], e.points[j]};
      }
    }
  }
  return out;
}

Ratio actual_radius(const Space& space, const Ball& ball) {
  if (!space.is_finite()) throw UnsupportedError("actual_radius: finite spaces only");
  Ratio out;
  for (const auto& y : space.enumerate(ball, 0).points) {
    Ratio d = space.distance(ball.center, y);
    if (out < d) out = std::move(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proximity

SetDistance dist_sets(const Space& space, const SubsetSpec& a, const SubsetSpec& b, std::size_t bound) {
  auto sa = seq_shape(space, a);
  auto sb = seq_shape(space, b);
  if (sa && sb) {
    ShapeDistance d = shape_distance(space, *sa, *sb);
    SetDistance out;
    out.value = d.value;
    out.witness = d.witness;
    return out;
  }
  return listed_distance(space, a, b, bound, nullptr, nullptr, nullptr);
}

ProximityReport compute_a0_b0(const Space& space, const SubsetSpec& a, const SubsetSpec& b, std::size_t bound) {
  ProximityReport report;
  report.delta_a = subset_diameter(space, a, bound);
  report.delta_b = subset_diameter(space, b, bound);

  auto sa = seq_shape(space, a);
  auto sb = seq_shape(space, b);
  if (sa && sb) {
    ShapeDistance d = shape_distance(space, *sa, *sb);
    report.dist.value = d.value;
    report.dist.witness = d.witness;
    report.witness_pairs.push_back(d.witness);
    if (d.constant_cross) {
      // Every cross pair realizes the distance.
      report.a0 = a;
      report.b0 = b;
    } else {
      // Nested (or point-in-ball): realized exactly on the intersection,
      // which is the smaller of the two shapes.
      const bool a_inner = sa->is_point || (!sb->is_point && sa->prefix.size() >= sb->prefix.size());
      report.a0 = a_inner ? a : b;
      report.b0 = report.a0;
    }
  } else {
    PairScan scan;
    Enumeration ea;
    Enumeration eb;
    report.dist = listed_distance(space, a, b, bound, &scan, &ea, &eb);
    report.truncated = report.dist.truncated;
    std::vector<PointPair> pairs;
    for (auto [i, j] : scan.at_minimum) pairs.emplace_back(ea.points[i], eb.points[j]);
    PointList a0;
    PointList b0;
    if (report.dist.attained) {
      for (const auto& [x, y] : pairs) {
        push_unique(space, a0.points, x);
        push_unique(space, b0.points, y);
      }
      report.witness_pairs = std::move(pairs);
    } else {
      report.truncated_minimum_pairs = std::move(pairs);
    }
    report.a0 = std::move(a0);
    report.b0 = std::move(b0);
  }
  report.hypothesis_holds = report.delta_b.value <= report.dist.value;
  return report;
}

ProximinalReport is_proximinal(const Space& space, const SubsetSpec& a, const std::vector<Point>& probes,
                               std::size_t bound) {
  ProximinalReport report;
  auto shape = seq_shape(space, a);
  std::optional<Enumeration> listing;
  if (!shape) listing = space.enumerate(a, bound);
  if (listing && listing->points.empty()) throw DomainError("is_proximinal: empty subset");

  for (const auto& x : probes) {
    space.check_owned(x);
    Approximation approx{x, std::nullopt, Ratio(), true};
    if (shape) {
      ShapeDistance d = shape_distance(space, Shape{true, x, {}}, *shape);
      approx.distance = d.value;
      approx.nearest = d.witness.second;
    } else {
      const auto& pts = listing->points;
      std::size_t best = 0;
      Ratio best_d = space.distance(x, pts[0]);
      for (std::size_t i = 1; i < pts.size(); ++i) {
        Ratio d = space.distance(x, pts[i]);
        if (d < best_d) {
          best_d = std::move(d);
          best = i;
        }
      }
      approx.distance = best_d;
      approx.nearest = pts[best];
      if (listing->truncated) {
        // Evidence of non-attainment: the minimum still drops between half
        // the listing and the full listing.
        Enumeration half = space.enumerate(a, std::max<std::size_t>(bound / 2, 1));
        if (!half.points.empty()) {
          Ratio half_min = space.distance(x, half.points[0]);
          for (const auto& p : half.points) half_min = ratio_min(half_min, space.distance(x, p));
          if (best_d < half_min) approx.attained = false;
        }
      }
    }
    if (!approx.attained) report.proximinal = false;
    report.approximations.push_back(std::move(approx));
  }
  return report;
}

std::vector<Point> listed_points(const Space& space, const SubsetSpec& subset, std::size_t bound) {
  if (const auto* list = std::get_if<PointList>(&subset)) return list->points;
  return space.enumerate(subset, bound).points;
}

bool same_set(const Space& space, const std::vector<Point>& a, const std::vector<Point>& b) {
  auto covered = [&](const std::vector<Point>& xs, const std::vector<Point>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const Point& x) {
      return std::any_of(ys.begin(), ys.end(), [&](const Point& y) { return space.same_point(x, y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

namespace {

// Whether the subset reported as B0 is all of B.
bool b0_is_all_of_b(const Space& space, const ProximityReport& r, const SubsetSpec& b, std::size_t bound) {
  if (const auto* list = std::get_if<PointList>(&r.b0)) {
    return same_set(space, list->points, listed_points(space, b, bound));
  }
  // Symbolic B0 is produced only as a copy of A or B.
  return subset_to_json(space, r.b0) == subset_to_json(space, b);
}

bool a0_nonempty(const ProximityReport& r) {
  if (const auto* list = std::get_if<PointList>(&r.a0)) return !list->points.empty();
  return true;
}

}  // namespace

TheoremVerdict check_lemma1(const Space& space, const SubsetSpec& a, const SubsetSpec& b, std::size_t bound,
                            const std::vector<std::string>& dropped) {
  TheoremVerdict v;
  v.theorem = "lemma1";

  std::vector<Point> probes;
  if (space.is_finite()) {
    probes = space.points();
  } else {
    for (const auto* s : {&a, &b}) {
      auto listed = listed_points(space, *s, bound);
      if (listed.size() > 50) listed.erase(listed.begin() + 50, listed.end());
      probes.insert(probes.end(), listed.begin(), listed.end());
    }
  }
  ProximinalReport pa = is_proximinal(space, a, probes, bound);
  ProximinalReport pb = is_proximinal(space, b, probes, bound);
  v.add_hypothesis("proximinal", pa.proximinal && pb.proximinal,
                   std::to_string(probes.size()) + " probes" + (space.is_finite() ? " (exhaustive)" : " (sampled)"));

  ProximityReport r = compute_a0_b0(space, a, b, bound);
  v.add_hypothesis("B_bounded", true, "delta(B) = " + r.delta_b.value.to_string());
  v.add_hypothesis("delta_B_le_dist", r.hypothesis_holds,
                   r.delta_b.value.to_string() + (r.hypothesis_holds ? " <= " : " > ") + r.dist.value.to_string());

  v.witnesses["dist_AB"] = r.dist.value.to_string();
  v.witnesses["delta_B"] = r.delta_b.value.to_string();
  v.witnesses["A0"] = subset_to_json(space, r.a0);
  v.witnesses["B0"] = subset_to_json(space, r.b0);
  if (r.truncated) v.witnesses["truncated"] = true;

  auto failing = nlohmann::json::array();
  for (const auto& h : v.hypotheses) {
    if (!h.holds && std::find(dropped.begin(), dropped.end(), h.name) == dropped.end()) failing.push_back(h.name);
  }
  if (!failing.empty()) {
    v.status = VerdictStatus::kInapplicable;
    v.witnesses["failing_hypotheses"] = failing;
    return v;
  }
  const bool nonempty = a0_nonempty(r);
  const bool b0_full = b0_is_all_of_b(space, r, b, bound);
  v.witnesses["A0_nonempty"] = nonempty;
  v.witnesses["B0_equals_B"] = b0_full;
  v.status = nonempty && b0_full ? VerdictStatus::kVerified : VerdictStatus::kFailed;
  return v;
}

namespace {

nlohmann::json pair_json(const Space& space, const PointPair& p) {
  return {point_to_json(space, p.first), point_to_json(space, p.second)};
}

}  // namespace

nlohmann::json to_json(const Space& space, const SetDistance& d) {
  nlohmann::json j{{"value", ratio_to_json(d.value)}, {"attained", d.attained}, {"truncated", d.truncated}};
  if (!d.trend.empty()) {
    auto& trend = j["trend"] = nlohmann::json::array();
    for (const auto& t : d.trend) trend.push_back({{"bound", t.bound}, {"minimum", ratio_to_json(t.minimum)}});
  }
  if (d.witness) j["witness"] = pair_json(space, *d.witness);
  return j;
}

nlohmann::json to_json(const Space& space, const DiameterReport& d) {
  nlohmann::json j{{"value", ratio_to_json(d.value)}, {"truncated", d.truncated}};
  if (d.attained_by) j["attained_by"] = pair_json(space, *d.attained_by);
  return j;
}

nlohmann::json to_json(const Space& space, const ProximityReport& r) {
  nlohmann::json j;
  j["dist"] = to_json(space, r.dist);
  j["delta_A"] = to_json(space, r.delta_a);
  j["delta_B"] = to_json(space, r.delta_b);
  j["A0"] = subset_to_json(space, r.a0);
  j["B0"] = subset_to_json(space, r.b0);
  auto& pairs = j["best_proximity_pairs"] = nlohmann::json::array();
  for (const auto& p : r.witness_pairs) pairs.push_back(pair_json(space, p));
  if (!r.truncated_minimum_pairs.empty()) {
    auto& tp = j["truncated_minimum_pairs"] = nlohmann::json::array();
    for (const auto& p : r.truncated_minimum_pairs) tp.push_back(pair_json(space, p));
  }
  j["delta_B_le_dist"] = r.hypothesis_holds;
  j["truncated"] = r.truncated;
  return j;
}

}  // namespace ultraprox
