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

#include "ultraprox/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "ultraprox/dynamics.hpp"
#include "ultraprox/errors.hpp"
#include "ultraprox/harness.hpp"
#include "ultraprox/json_io.hpp"
#include "ultraprox/proximity.hpp"

namespace ultraprox::cli {
namespace {

struct RunConfig {
  std::string output = "auto";
  std::uint64_t seed = 1;
  std::size_t bound = kDefaultBound;
  std::optional<std::size_t> depth;

  std::string space_file;
  std::string a_file;
  std::string b_file;
  std::string map_file;
  std::string domain_file;
  std::string start;

  std::string mode;
  std::size_t samples = 200;
  std::size_t budget = 32;

  std::string theorem;
  std::vector<std::string> dropped;
  std::string expected_case;

  std::size_t trials = 100;
  std::size_t max_points = 12;
  std::string drop_hypothesis;
  std::vector<std::string> theorems;
  std::string map_mode = "rejection";

  std::vector<std::string> examples;
  std::uint64_t p_exponent = 2;
  std::uint64_t precision = 5;
  std::uint64_t prime = 3;
  std::size_t baire_max_n = 10;
};

bool text_mode(const RunConfig& cfg, bool default_text) {
  if (cfg.output == "auto") return default_text;
  return cfg.output == "text";
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Loading

std::shared_ptr<Space> load_space(const RunConfig& cfg) {
  Json j = read_json_file(cfg.space_file);
  if (cfg.depth && j.is_object() && j.value("type", "") == "baire") j["depth_bound"] = *cfg.depth;
  return space_from_json(j);
}

/// Finite matrix spaces must satisfy the axioms before anything else runs.
void require_valid(const Space& space) {
  if (const auto* f = dynamic_cast<const FiniteSpace*>(&space)) {
    const ValidationReport r = validate_ultrametric(*f);
    if (!r.valid) throw SpecError("space is not an ultrametric: " + r.message);
  }
}

SubsetSpec load_subset(const Space& space, const std::string& path) {
  return subset_from_json(space, read_json_file(path));
}

MapSpec load_map(const Space& space, const std::string& path) {
  MapSpec m = map_from_json(space, read_json_file(path));
  check_compatible(space, m);
  return m;
}

/// A point given on the command line: JSON when it parses, a bare label otherwise.
Point parse_point(const Space& space, const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) j = text;
  if (j.is_number() && space.kind() == SpaceKind::kFinite) j = text;
  return point_from_json(space, j);
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  auto space = load_space(cfg);
  Json j{{"space", space->kind() == SpaceKind::kFinite ? "finite" : space_to_json(*space).at("type")}};
  ValidationReport r;
  if (const auto* f = dynamic_cast<const FiniteSpace*>(space.get())) {
    r = validate_ultrametric(*f);
    j["method"] = "exhaustive";
  } else if (space->is_finite() && space->size() <= 2048) {
    r = validate_ultrametric(materialize(*space));
    j["method"] = "exhaustive";
  } else {
    j["method"] = "by_construction";
  }
  j["ultrametric"] = r.valid ? "valid" : "invalid";
  if (!r.valid) {
    j["axiom"] = r.axiom;
    j["witness"] = r.witness;
    j["message"] = r.message;
  }
  if (text_mode(cfg, true)) {
    out << "ultrametric: " << (r.valid ? "valid" : "invalid");
    if (!r.valid) out << " (" << r.axiom << ": " << r.message << ")";
    out << "\n";
  } else {
    emit_json(out, j);
  }
  return r.valid ? kExitOk : kExitFailure;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  auto space = load_space(cfg);
  require_valid(*space);
  const SubsetSpec a = load_subset(*space, cfg.a_file);
  const SubsetSpec b = load_subset(*space, cfg.b_file);
  const ProximityReport r = compute_a0_b0(*space, a, b, cfg.bound);
  const Json j = to_json(*space, r);
  if (text_mode(cfg, false)) {
    out << "dist(A,B) = " << r.dist.value.to_string() << (r.dist.attained ? "" : " (not attained)")
        << (r.dist.truncated ? " [truncated at " + std::to_string(cfg.bound) + "]" : "") << "\n";
    out << "delta(A) = " << r.delta_a.value.to_string() << "\n";
    out << "delta(B) = " << r.delta_b.value.to_string() << "\n";
    out << "A0 = " << j.at("A0").dump() << "\n";
    out << "B0 = " << j.at("B0").dump() << "\n";
    out << "delta(B) <= dist(A,B): " << (r.hypothesis_holds ? "yes" : "no") << "\n";
  } else {
    emit_json(out, j);
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  auto space = load_space(cfg);
  require_valid(*space);
  const MapSpec map = load_map(*space, cfg.map_file);
  std::optional<SubsetSpec> a;
  std::optional<SubsetSpec> b;
  if (!cfg.a_file.empty()) a = load_subset(*space, cfg.a_file);
  if (!cfg.b_file.empty()) b = load_subset(*space, cfg.b_file);
  ClassifyOptions opts;
  if (cfg.mode.empty()) {
    opts.mode = space->is_finite() ? ClassifyMode::kExhaustive : ClassifyMode::kSampled;
  } else {
    opts.mode = cfg.mode == "exhaustive" ? ClassifyMode::kExhaustive : ClassifyMode::kSampled;
  }
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.orbit_budget = cfg.budget;
  const Json j = to_json(*space, classify_map(*space, map, a, b, opts));
  if (text_mode(cfg, false)) {
    for (const auto& [name, v] : j.items()) {
      if (v.is_object() && v.contains("status")) out << name << ": " << v.at("status").get<std::string>() << "\n";
    }
  } else {
    emit_json(out, j);
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  auto space = load_space(cfg);
  require_valid(*space);
  const MapSpec map = load_map(*space, cfg.map_file);
  const Point start = parse_point(*space, cfg.start);
  std::optional<SubsetSpec> domain;
  if (!cfg.domain_file.empty()) domain = load_subset(*space, cfg.domain_file);
  const SolveOutcome s = solve_in_ball(*space, map, start, domain);
  const Json j = to_json(*space, s);
  if (text_mode(cfg, false)) {
    out << "search ball: " << j.at("search_ball").dump() << "\n";
    out << "outcome: " << to_string(s.kind) << "\n";
    if (s.fixed_point) out << "fixed point: " << space->label(*s.fixed_point) << "\n";
    if (s.invariant_ball) {
      out << "invariant ball: " << j.at("ball").dump() << ", d(y,Ty) = " << s.invariant_ball->common_gap.to_string()
          << "\n";
    }
    if (!s.certificate.empty()) out << "certificate: " << s.certificate << "\n";
    if (!s.reason.empty()) out << "reason: " << s.reason << "\n";
  } else {
    emit_json(out, j);
  }
  return s.theorem_violation ? kExitFailure : kExitOk;
}

void print_verdict_text(std::ostream& out, const TheoremVerdict& v) {
  out << v.theorem << ": " << to_string(v.status);
  if (v.case_label) out << " case " << *v.case_label;
  out << "\n";
  for (const auto& h : v.hypotheses) {
    out << "  " << (h.holds ? "[x] " : "[ ] ") << h.name;
    if (!h.witness.empty()) out << " (" << h.witness << ")";
    out << "\n";
  }
  if (v.discrepancy) out << "  discrepancy: " << v.discrepancy->dump() << "\n";
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  auto space = load_space(cfg);
  require_valid(*space);
  const SubsetSpec a = load_subset(*space, cfg.a_file);
  const SubsetSpec b = load_subset(*space, cfg.b_file);
  CheckOptions opts;
  opts.dropped = cfg.dropped;
  opts.bound = cfg.bound;
  opts.seed = cfg.seed;
  if (!cfg.expected_case.empty()) opts.expected_case = cfg.expected_case;

  const std::string& t = cfg.theorem;
  const bool needs_map = t != "lemma1" && t != "prop1";
  if (needs_map && cfg.map_file.empty()) throw SpecError("--map is required for --theorem " + t);
  std::optional<MapSpec> map;
  if (needs_map) map = load_map(*space, cfg.map_file);

  TheoremVerdict v;
  if (t == "lemma1") {
    v = check_lemma1(*space, a, b, cfg.bound, cfg.dropped);
  } else if (t == "prop1") {
    v = check_prop1(*space, a, b, opts);
  } else if (t == "thm1") {
    v = check_theorem1(*space, a, b, *map, opts);
  } else if (t == "thm2") {
    v = check_fixed_pair(*space, a, b, *map, FixedPairMode::kWeakRegular, opts);
  } else if (t == "c2") {
    v = check_fixed_pair(*space, a, b, *map, FixedPairMode::kStrictOrbit, opts);
  } else if (t == "thm3") {
    v = check_fixed_pair(*space, a, b, *map, FixedPairMode::kStrict, opts);
  } else {
    v = check_cyclic_remark(*space, a, b, *map, opts);
  }
  if (text_mode(cfg, false)) {
    print_verdict_text(out, v);
  } else {
    emit_json(out, to_json(v));
  }
  return v.is_failure() ? kExitFailure : kExitOk;
}

int cmd_fuzz(const RunConfig& cfg, std::ostream& out) {
  FuzzConfig fc;
  fc.trials = cfg.trials;
  fc.max_points = cfg.max_points;
  fc.seed = cfg.seed;
  fc.theorems = cfg.theorems;
  fc.drop_hypothesis = cfg.drop_hypothesis;
  fc.map_mode = cfg.map_mode == "collapse" ? MapGenMode::kCollapse : MapGenMode::kRejection;
  const FuzzSummary s = fuzz(fc);
  if (text_mode(cfg, false)) {
    for (const auto& [name, t] : s.tallies) {
      out << name << ": " << t.verified << "/" << t.applicable << " applicable trials verified, " << t.failed
          << " failed (" << t.trials << " trials)\n";
    }
    if (!s.thm1_cases.empty()) {
      out << "thm1 cases:";
      for (const auto& [label, n] : s.thm1_cases) out << " " << label << "=" << n;
      out << "\n";
    }
    if (!s.drop_hypothesis.empty()) {
      out << "dropped " << s.drop_hypothesis << ": violated in " << s.dropped_violated << " trials\n";
    }
    out << "counterexamples: " << s.counterexamples.size() << "\n";
  } else {
    emit_json(out, to_json(s));
  }
  return s.counterexamples.empty() ? kExitOk : kExitFailure;
}

int cmd_replicate(const RunConfig& cfg, std::ostream& out) {
  ReplicationConfig rc;
  rc.padic_prime = cfg.prime;
  rc.padic_exponent = cfg.p_exponent;
  rc.padic_precision = cfg.precision;
  rc.baire_max_n = cfg.baire_max_n;
  if (cfg.depth) rc.depth = *cfg.depth;
  const auto reports = replicate_examples(cfg.examples, rc);
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    all.push_back(to_json(r));
  }
  if (text_mode(cfg, false)) {
    for (const auto& r : reports) {
      const auto passed = static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.ok; }));
      const char* status = r.passed() ? "pass" : (passed == r.checks.size() && r.discrepancy ? "discrepancy" : "FAIL");
      out << r.name << ": " << status << " (" << passed << "/" << r.checks.size()
          << " checks)\n";
      for (const auto& c : r.checks) {
        if (!c.ok) out << "  failed: " << c.name << " expected " << c.expected.dump() << " got " << c.actual.dump()
                       << "\n";
      }
      if (r.discrepancy) out << "  discrepancy: " << r.discrepancy->dump() << "\n";
    }
  } else {
    emit_json(out, Json{{"examples", all}, {"passed", ok}});
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ultrametric proximity and fixed-point toolkit", "ultraprox"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"auto", "json", "text"}));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--bound", cfg.bound, "Listing bound for infinite subsets")->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "Comparison depth for sequence spaces")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check the ultrametric axioms of a space");
  validate->add_option("--space", cfg.space_file)->required();

  auto* analyze = app.add_subcommand("analyze", "dist(A,B), diameters, A0 and B0");
  analyze->add_option("--space", cfg.space_file)->required();
  analyze->add_option("--A", cfg.a_file)->required();
  analyze->add_option("--B", cfg.b_file)->required();

  auto* classify = app.add_subcommand("classify", "Classify a self-map");
  classify->add_option("--space", cfg.space_file)->required();
  classify->add_option("--map", cfg.map_file)->required();
  auto* ca = classify->add_option("--A", cfg.a_file);
  auto* cb = classify->add_option("--B", cfg.b_file);
  ca->needs(cb);
  cb->needs(ca);
  classify->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  classify->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  classify->add_option("--budget", cfg.budget, "Orbit budget for weak-regularity")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Fixed point or minimal invariant ball in B(x, d(x,Tx))");
  solve->add_option("--space", cfg.space_file)->required();
  solve->add_option("--map", cfg.map_file)->required();
  solve->add_option("--start", cfg.start, "Label, integer or JSON point")->required();
  solve->add_option("--domain", cfg.domain_file, "Subset the result must lie in");

  auto* check = app.add_subcommand("check", "Check one theorem on an instance");
  check->add_option("--theorem", cfg.theorem)
      ->required()
      ->check(CLI::IsMember({"lemma1", "prop1", "thm1", "thm2", "c2", "thm3", "cyclic"}));
  check->add_option("--space", cfg.space_file)->required();
  check->add_option("--A", cfg.a_file)->required();
  check->add_option("--B", cfg.b_file)->required();
  check->add_option("--map", cfg.map_file);
  check->add_option("--drop", cfg.dropped, "Hypothesis that does not block the conclusion check");
  check->add_option("--expected-case", cfg.expected_case);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances against every theorem");
  fuzz_cmd->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-points", cfg.max_points)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--drop-hypothesis", cfg.drop_hypothesis)
      ->check(CLI::IsMember({"delta", "nonexpansive", "noncyclic"}));
  fuzz_cmd->add_option("--theorem", cfg.theorems)
      ->check(CLI::IsMember({"lemma1", "prop1", "thm1", "thm2", "c2", "thm3", "cyclic"}));
  fuzz_cmd->add_option("--map-mode", cfg.map_mode)->check(CLI::IsMember({"rejection", "collapse"}));

  auto* replicate = app.add_subcommand("replicate", "Re-run the worked examples");
  replicate->add_option("--example", cfg.examples)->check(CLI::IsMember(example_names()));
  replicate->add_option("--prime", cfg.prime)->check(CLI::Range(2, 1000));
  replicate->add_option("--p-exponent", cfg.p_exponent)->check(CLI::PositiveNumber);
  replicate->add_option("--precision", cfg.precision)->check(CLI::Range(1, 30));
  replicate->add_option("--baire-max-n", cfg.baire_max_n);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*classify) return cmd_classify(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*fuzz_cmd) return cmd_fuzz(cfg, out);
    if (*replicate) return cmd_replicate(cfg, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n  witness: " << e.witness() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ultraprox::cli
