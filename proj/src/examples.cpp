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

#include "ultraprox/errors.hpp"
#include "ultraprox/harness.hpp"
#include "ultraprox/json_io.hpp"

namespace ultraprox {

bool ExampleReport::passed() const {
  if (discrepancy) return false;
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  for (const auto& v : verdicts) {
    if (v.is_failure()) return false;
  }
  return true;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"ex1", "baire", "padic", "seq2", "nat"};
  return names;
}

namespace {

void expect(ExampleReport& r, std::string name, nlohmann::json expected, nlohmann::json actual,
            std::optional<nlohmann::json> one_based = std::nullopt) {
  ExampleCheck c;
  c.name = std::move(name);
  c.ok = expected == actual;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.one_based_value = std::move(one_based);
  r.checks.push_back(std::move(c));
}

nlohmann::json r2j(const Ratio& r) { return ratio_to_json(r); }

nlohmann::json sorted_labels(const Space& space, const std::vector<Point>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(space.label(p));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json sorted_labels(const Space& space, const SubsetSpec& s, std::size_t bound) {
  return sorted_labels(space, listed_points(space, s, bound));
}

// ---------------------------------------------------------------------------

ExampleReport run_ex1() {
  ExampleReport r;
  r.name = "ex1";
  const Ratio h(1, 2);
  const Ratio one = Ratio::whole(1);
  FiniteSpace space({"a", "b", "c", "d"}, {{Ratio(), h, one, one},
                                           {h, Ratio(), one, one},
                                           {one, one, Ratio(), h},
                                           {one, one, h, Ratio()}});
  const auto p = [&](const char* l) { return space.point(*space.index_of(l)); };
  const SubsetSpec a = PointList{{p("a"), p("c")}};
  const SubsetSpec b = PointList{{p("b"), p("d")}};

  expect(r, "ultrametric", "valid", validate_ultrametric(space).valid ? "valid" : "invalid");
  const ProximityReport pr = compute_a0_b0(space, a, b);
  expect(r, "dist(A,B)", "1/2", r2j(pr.dist.value));
  expect(r, "delta(B)", "1/1", r2j(pr.delta_b.value));
  expect(r, "delta(A)", "1/1", r2j(pr.delta_a.value));
  expect(r, "delta(B) > dist(A,B)", true, pr.dist.value < pr.delta_b.value);
  expect(r, "dist(A,B) != 0", true, !pr.dist.value.is_zero());
  nlohmann::json cross;
  for (const char* x : {"a", "c"}) {
    for (const char* y : {"b", "d"}) cross[std::string("d(") + x + "," + y + ")"] = r2j(space.distance(p(x), p(y)));
  }
  expect(r, "cross distances", {{"d(a,b)", "1/2"}, {"d(a,d)", "1/1"}, {"d(c,b)", "1/1"}, {"d(c,d)", "1/2"}}, cross);
  expect(r, "A0", {"a", "c"}, sorted_labels(space, pr.a0, kDefaultBound));
  expect(r, "B0", {"b", "d"}, sorted_labels(space, pr.b0, kDefaultBound));
  TheoremVerdict lemma = check_lemma1(space, a, b);
  expect(r, "lemma1", "inapplicable", to_string(lemma.status));
  r.verdicts.push_back(std::move(lemma));
  return r;
}

// ---------------------------------------------------------------------------

ExampleReport run_baire(const ReplicationConfig& cfg) {
  ExampleReport r;
  r.name = "baire";
  BaireSpace space(cfg.depth);
  const MapSpec t{PartialProductMap{true}};
  const Ratio half(1, 2);
  auto bar = [&](std::size_t n) { return space.point_of(UltraSeq::constant(Integer(n))); };
  auto x_n = [&](std::size_t n) -> SubsetSpec { return Ball{bar(n), half}; };

  for (std::size_t n = 0; n <= cfg.baire_max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const Point nb = bar(n);
    expect(r, tag + "d(nbar,T nbar)", n <= 1 ? "0/1" : "1/3", r2j(space.distance(nb, apply(space, t, nb))));

    const DiameterReport dia = subset_diameter(space, x_n(n));
    expect(r, tag + "delta(X_n)", "1/2", r2j(dia.value));
    const auto& [u, w] = *dia.attained_by;
    expect(r, tag + "delta(X_n) attained", {{"pair", {space.label(u), space.label(w)}}, {"distance", "1/2"}},
           {{"pair", {space.label(u), space.label(w)}},
            {"distance", space.contains(x_n(n), u) && space.contains(x_n(n), w) ? r2j(space.distance(u, w))
                                                                                : "outside X_n"}});
    auto inv = maps_into(space, t, x_n(n), x_n(n));
    expect(r, tag + "T(X_n) in X_n", true, inv && inv->holds);

    const SolveOutcome s = solve_in_ball(space, t, nb, x_n(n));
    const Point expected = n <= 1 ? nb : space.point_of(UltraSeq::from_prefix({Integer(n), Integer(n)}, Integer(0)));
    nlohmann::json actual = to_string(s.kind);
    if (s.fixed_point) {
      const bool certified = space.same_point(*s.fixed_point, apply(space, t, *s.fixed_point)) &&
                             s.fixed_point->seq().stable_tail().has_value() && space.contains(x_n(n), *s.fixed_point);
      actual = {{"fixed_point", space.label(*s.fixed_point)}, {"certified", certified}};
    }
    expect(r, tag + "solve_in_ball", {{"fixed_point", space.label(expected)}, {"certified", true}}, actual);
  }

  std::size_t pairs = 0;
  std::vector<std::string> off;
  for (std::size_t n = 0; n <= cfg.baire_max_n; ++n) {
    for (std::size_t m = n + 1; m <= cfg.baire_max_n; ++m) {
      ++pairs;
      if (dist_sets(space, x_n(n), x_n(m)).value != Ratio::whole(1)) {
        off.push_back(std::to_string(n) + "," + std::to_string(m));
      }
    }
  }
  expect(r, "dist(X_n,X_m) = 1 for n != m", {{"pairs", pairs}, {"other", nlohmann::json::array()}},
         {{"pairs", pairs}, {"other", off}});

  ClassifyOptions co;
  co.mode = ClassifyMode::kSampled;
  co.samples = 400;
  const MapClassification c = classify_map(space, t, std::nullopt, std::nullopt, co);
  expect(r, "nonexpansive", "holds", to_json(space, c)["nonexpansive"]["status"]);
  expect(r, "isometry", "refuted", to_json(space, c)["isometry"]["status"]);

  const OrbitTrace orb = orbit(space, t, bar(2), 10);
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& g : orb.gaps) gaps.push_back(r2j(g));
  expect(r, "orbit of 2bar, budget 10",
         {{"end", "budget_exhausted"}, {"gaps", nlohmann::json::array({"1/3", "1/3", "1/3", "1/3", "1/3", "1/3",
                                                                       "1/3", "1/3", "1/3", "1/3"})}},
         {{"end", to_string(orb.end)}, {"gaps", gaps}});

  if (cfg.baire_max_n >= 3) {
    TheoremVerdict v = check_theorem1(space, x_n(2), x_n(3), t);
    expect(r, "thm1 on (X_2, X_3)", {{"status", "verified"}, {"case", "(i)"}},
           {{"status", to_string(v.status)}, {"case", v.case_label ? nlohmann::json(*v.case_label) : nullptr}});
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

// ---------------------------------------------------------------------------

ExampleReport run_padic(const ReplicationConfig& cfg) {
  ExampleReport r;
  r.name = "padic";
  if (cfg.padic_exponent < 1 || cfg.padic_exponent >= cfg.padic_precision) {
    throw SpecError("padic example: exponent must satisfy 1 <= exponent < precision");
  }
  PAdicSpace space(cfg.padic_prime, cfg.padic_precision);
  std::uint64_t shift = 1;
  for (std::uint64_t i = 0; i < cfg.padic_exponent; ++i) shift *= cfg.padic_prime;
  const MapSpec t{PAdicTranslation{shift}};
  const Ratio rad = Ratio::inverse_power(cfg.padic_prime, cfg.padic_exponent);
  const SubsetSpec a = Ball{space.point(0), rad};
  const SubsetSpec b = Ball{space.point(1), rad};
  const auto pa = listed_points(space, a, 0);
  const auto pb = listed_points(space, b, 0);

  std::size_t common = 0;
  for (const auto& x : pa) {
    for (const auto& y : pb) common += x.index() == y.index();
  }
  expect(r, "A and B disjoint", 0, common);
  const ProximityReport pr = compute_a0_b0(space, a, b);
  expect(r, "dist(A,B)", "1/1", r2j(pr.dist.value));
  expect(r, "delta(B)", r2j(rad), r2j(pr.delta_b.value));
  expect(r, "delta(A)", r2j(rad), r2j(pr.delta_a.value));

  const MapClassification c = classify_map(space, t, a, b);
  expect(r, "isometry", true, c.isometry.holds);
  expect(r, "noncyclic", true, c.noncyclic->holds);

  std::size_t fixed = 0;
  for (const auto& x : space.points()) fixed += apply(space, t, x).index() == x.index();
  expect(r, "fixed points", 0, fixed);

  std::vector<std::string> other_gap;
  for (const auto* s : {&pa, &pb}) {
    for (const auto& z : *s) {
      if (space.distance(z, apply(space, t, z)) != rad) other_gap.push_back(space.label(z));
    }
  }
  expect(r, "d(z,Tz) on A and B", {{"value", r2j(rad)}, {"other", nlohmann::json::array()}},
         {{"value", r2j(rad)}, {"other", other_gap}});

  const OrbitTrace orb = orbit(space, t, space.point(0), space.size() + 1);
  std::uint64_t cycle = 1;
  for (std::uint64_t i = cfg.padic_exponent; i < cfg.padic_precision; ++i) cycle *= cfg.padic_prime;
  bool constant = std::all_of(orb.gaps.begin(), orb.gaps.end(), [&](const Ratio& g) { return g == rad; });
  expect(r, "orbit of 0", {{"end", "cycle"}, {"length", cycle}, {"constant_gap", r2j(rad)}},
         {{"end", to_string(orb.end)}, {"length", orb.length}, {"constant_gap", constant ? r2j(rad) : "varies"}});
  expect(r, "weak-regular from 0", "refuted", to_string(weak_regular_verdict(orb).status));

  std::vector<Point> both = pa;
  both.insert(both.end(), pb.begin(), pb.end());
  const auto balls = minimal_invariant_balls(space, t, PointList{both});
  nlohmann::json found = nlohmann::json::array();
  for (const auto& ib : balls) found.push_back(sorted_labels(space, ib.members));
  std::sort(found.begin(), found.end());
  nlohmann::json want = {sorted_labels(space, pa), sorted_labels(space, pb)};
  std::sort(want.begin(), want.end());
  expect(r, "minimal invariant balls in A u B", want, found);

  TheoremVerdict v = check_theorem1(space, a, b, t);
  expect(r, "thm1", {{"status", "verified"}, {"case", "(iii)"}},
         {{"status", to_string(v.status)}, {"case", v.case_label ? nlohmann::json(*v.case_label) : nullptr}});
  r.verdicts.push_back(std::move(v));
  return r;
}

// ---------------------------------------------------------------------------

ExampleReport run_seq2(const ReplicationConfig& cfg) {
  ExampleReport r;
  r.name = "seq2";
  BaireSpace space(cfg.depth);
  const MapSpec t{PartialProductMap{false}};
  const Point a_star = space.point_of(UltraSeq::constant(1));
  const Point b_star = space.point_of(UltraSeq::from_prefix({Integer(1)}, Integer(2)));
  const Ratio gap = space.distance(b_star, apply(space, t, b_star));
  const SubsetSpec a = PointList{{a_star}};
  const SubsetSpec b = Ball{b_star, gap};

  expect(r, "T a* = a*", true, space.same_point(a_star, apply(space, t, a_star)));
  expect(r, "d(b*,Tb*)", "1/3", r2j(gap), "1/4");
  const ProximityReport pr = compute_a0_b0(space, a, b);
  expect(r, "delta(B)", "1/3", r2j(pr.delta_b.value), "1/4");
  expect(r, "dist(A,B)", "1/2", r2j(pr.dist.value), "1/3");
  expect(r, "delta(B) <= dist(A,B)", true, pr.hypothesis_holds);

  ClassifyOptions co;
  co.mode = ClassifyMode::kSampled;
  const MapClassification c = classify_map(space, t, a, b, co);
  expect(r, "nonexpansive", "holds", to_json(space, c)["nonexpansive"]["status"]);
  expect(r, "noncyclic", "holds", to_json(space, c)["noncyclic"]["status"]);

  const Point z = space.point_of(UltraSeq::from_prefix({Integer(1), Integer(2)}, Integer(0)));
  const Point tz = apply(space, t, z);
  const bool z_fixed = space.same_point(z, tz);
  const bool z_in_b = space.contains(b, z);
  expect(r, "z = (1,2,0,0,...) in B", true, z_in_b);
  expect(r, "T z = z", true, z_fixed);

  CheckOptions opts;
  opts.expected_case = "(ii)";
  TheoremVerdict v = check_theorem1(space, a, b, t, opts);
  expect(r, "thm1 conclusion", "verified", to_string(v.status));

  if (z_fixed && z_in_b) {
    const std::size_t shown = 8;
    auto terms = [&](const Point& p) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& x : p.seq().terms(shown)) out.push_back(x.str());
      return out;
    };
    auto tail = [&](const Point& p) -> nlohmann::json {
      auto st = p.seq().stable_tail();
      if (!st) return nullptr;
      return {{"from", st->from}, {"value", st->value.str()}};
    };
    nlohmann::json d;
    d["expected_b_outcome"] = "minimal_invariant_ball";
    d["found_b_outcome"] = "fixed_point";
    d["found_case"] = v.case_label ? nlohmann::json(*v.case_label) : nullptr;
    d["fixed_point"] = {{"point", point_to_json(space, z)},
                        {"label", space.label(z)},
                        {"terms", terms(z)},
                        {"image_terms", terms(tz)},
                        {"stable_tail", tail(z)},
                        {"image_stable_tail", tail(tz)},
                        {"d(z,Tz)", r2j(space.distance(z, tz))},
                        {"d(z,b*)", r2j(space.distance(z, b_star))},
                        {"radius", r2j(gap)}};
    d["reason"] = "a minimal invariant ball has d(y,Ty) equal to its radius > 0 for every member, but z in B is fixed";
    r.discrepancy = std::move(d);
  }
  r.verdicts.push_back(std::move(v));
  return r;
}

// ---------------------------------------------------------------------------

ExampleReport run_nat(const ReplicationConfig& cfg) {
  ExampleReport r;
  r.name = "nat";
  if (cfg.nat_bounds.empty()) throw SpecError("nat example: no bounds given");
  for (auto n : cfg.nat_bounds) {
    if (n < 2) throw SpecError("nat example: bounds must be at least 2");
  }
  const std::size_t top = *std::max_element(cfg.nat_bounds.begin(), cfg.nat_bounds.end());
  NatReciprocalSpace space(top);
  const SubsetSpec a = PredicateSubset{Predicate::kEven, 0};
  const SubsetSpec b = PredicateSubset{Predicate::kOdd, 0};

  std::optional<Ratio> previous;
  for (auto n : cfg.nat_bounds) {
    const std::string tag = "bound " + std::to_string(n) + ": ";
    const ProximityReport pr = compute_a0_b0(space, a, b, n);
    expect(r, tag + "truncated minimum", r2j(Ratio::reciprocal(Integer(n - 1))), r2j(pr.dist.value));
    bool decreasing = pr.dist.trend.size() >= 2;
    for (std::size_t i = 1; i < pr.dist.trend.size(); ++i) {
      decreasing = decreasing && pr.dist.trend[i].minimum < pr.dist.trend[i - 1].minimum;
    }
    expect(r, tag + "minimum decreasing within bound", true, decreasing);
    expect(r, tag + "non-attainment flagged", true, !pr.dist.attained);
    expect(r, tag + "A0 and B0", {{"A0", nlohmann::json::array()}, {"B0", nlohmann::json::array()}},
           {{"A0", sorted_labels(space, listed_points(space, pr.a0, n))},
            {"B0", sorted_labels(space, listed_points(space, pr.b0, n))}});
    expect(r, tag + "delta(B), delta(A)", {{"B", "1/1"}, {"A", "1/2"}},
           {{"B", r2j(pr.delta_b.value)}, {"A", r2j(pr.delta_a.value)}});
    if (previous) {
      expect(r, tag + "below previous bound's minimum", true, pr.dist.value < *previous);
    }
    previous = pr.dist.value;
  }
  return r;
}

}  // namespace

std::vector<ExampleReport> replicate_examples(const std::vector<std::string>& names, const ReplicationConfig& config) {
  const auto& known = example_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw SpecError("replicate: unknown example '" + n + "' (use ex1, baire, padic, seq2 or nat)");
    }
  }
  std::vector<ExampleReport> out;
  for (const auto& n : known) {
    if (!names.empty() && std::find(names.begin(), names.end(), n) == names.end()) continue;
    if (n == "ex1") out.push_back(run_ex1());
    if (n == "baire") out.push_back(run_baire(config));
    if (n == "padic") out.push_back(run_padic(config));
    if (n == "seq2") out.push_back(run_seq2(config));
    if (n == "nat") out.push_back(run_nat(config));
  }
  return out;
}

nlohmann::json to_json(const ExampleReport& r) {
  nlohmann::json j;
  j["example"] = r.name;
  j["passed"] = r.passed();
  auto& checks = j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}};
    if (c.one_based_value) cj["one_based_value"] = *c.one_based_value;
    checks.push_back(std::move(cj));
  }
  auto& verdicts = j["verdicts"] = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  if (r.discrepancy) j["discrepancy"] = *r.discrepancy;
  return j;
}

}  // namespace ultraprox
