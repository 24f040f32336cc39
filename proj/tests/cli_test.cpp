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

#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

namespace ultraprox {
namespace {

using testing::fixture;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, ValidatePrintsVerdict) {
  const Result r = run({"validate", "--space", fixture("ex1_space.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ultrametric: valid\n");
}

TEST(CliTest, ValidateReportsViolation) {
  const Result r = run({"validate", "--space", fixture("bad_triangle.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ultrametric: invalid"), std::string::npos);
  const Result j = run({"validate", "--space", fixture("bad_triangle.json"), "--output", "json"});
  EXPECT_EQ(Json::parse(j.out).at("axiom"), "strong_triangle");
}

TEST(CliTest, ValidateResidueRing) {
  const Result r = run({"--output", "json", "validate", "--space", fixture("padic_space.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("ultrametric"), "valid");
}

TEST(CliTest, MalformedFileGivesLocation) {
  const Result r = run({"validate", "--space", fixture("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliTest, InvalidSpaceIsBadInput) {
  const Result r = run({"analyze", "--space", fixture("bad_triangle.json"), "--A", fixture("ex1_A.json"), "--B",
                        fixture("ex1_B.json")});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, Analyze) {
  const Result r =
      run({"analyze", "--space", fixture("ex1_space.json"), "--A", fixture("ex1_A.json"), "--B", fixture("ex1_B.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("dist").at("value"), "1/2");
  EXPECT_EQ(j.at("A0").at("points"), Json::array({"a", "c"}));
  EXPECT_EQ(j.at("B0").at("points"), Json::array({"b", "d"}));
}

TEST(CliTest, AnalyzeTruncatedWithBound) {
  const Result r = run({"analyze", "--space", fixture("nat_space.json"), "--A", fixture("nat_A.json"), "--B",
                        fixture("nat_B.json"), "--bound", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("dist").at("value"), "1/99");
  EXPECT_EQ(j.at("dist").at("attained"), false);
  EXPECT_TRUE(j.at("A0").at("points").empty());
}

TEST(CliTest, ClassifyAndSolve) {
  Result r = run({"classify", "--space", fixture("padic_space.json"), "--map", fixture("padic_map.json"), "--A",
                  fixture("padic_A.json"), "--B", fixture("padic_B.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("isometry").at("status"), "holds");
  EXPECT_EQ(j.at("noncyclic").at("status"), "holds");

  r = run({"solve", "--space", fixture("baire_space.json"), "--map", fixture("baire_map.json"), "--start",
           R"({"prefix":[],"tail":3})"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j.at("outcome"), "fixed_point");
  EXPECT_EQ(j.at("fixed_point_label"), "(3,3,0,0,...)");

  r = run({"solve", "--space", fixture("cluster_space.json"), "--map", fixture("cluster_map.json"), "--start", "a2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("fixed_point"), "a1");

  r = run({"solve", "--space", fixture("padic_space.json"), "--map", fixture("padic_map.json"), "--start", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("outcome"), "minimal_invariant_ball");
}

TEST(CliTest, SolveUnknownPoint) {
  const Result r =
      run({"solve", "--space", fixture("cluster_space.json"), "--map", fixture("cluster_map.json"), "--start", "zz"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("zz"), std::string::npos);
}

TEST(CliTest, CheckTheorems) {
  for (const char* t : {"lemma1", "prop1", "thm1", "thm2", "c2", "thm3"}) {
    SCOPED_TRACE(t);
    const Result r = run({"check", "--theorem", t, "--space", fixture("cluster_space.json"), "--A",
                          fixture("cluster_A.json"), "--B", fixture("cluster_B.json"), "--map",
                          fixture("cluster_map.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out).at("theorem"), t);
  }
  const Result cyc = run({"check", "--theorem", "cyclic", "--space", fixture("cluster_space.json"), "--A",
                          fixture("cluster_A.json"), "--B", fixture("cluster_B.json"), "--map",
                          fixture("cluster_swap.json")});
  EXPECT_EQ(cyc.code, 0);
  EXPECT_EQ(Json::parse(cyc.out).at("status"), "verified");
}

TEST(CliTest, CheckFailureExitsOne) {
  const Result r = run({"check", "--theorem", "thm1", "--drop", "noncyclic", "--space", fixture("cluster_space.json"),
                        "--A", fixture("cluster_A.json"), "--B", fixture("cluster_B.json"), "--map",
                        fixture("cluster_swap.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out).at("status"), "failed");
}

TEST(CliTest, CheckNeedsMap) {
  const Result r = run({"check", "--theorem", "thm1", "--space", fixture("cluster_space.json"), "--A",
                        fixture("cluster_A.json"), "--B", fixture("cluster_B.json")});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, ReplicateSeq2Discrepancy) {
  const Result r = run({"replicate", "--example", "seq2"});
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("passed"), false);
  EXPECT_EQ(j.at("examples").at(0).at("discrepancy").at("fixed_point").at("label"), "(1,2,0,0,...)");
}

TEST(CliTest, ReplicatePassingExample) {
  const Result r = run({"replicate", "--example", "padic", "--p-exponent", "2", "--precision", "5"});
  EXPECT_EQ(r.code, 0);
  const Result bad = run({"replicate", "--example", "padic", "--p-exponent", "5", "--precision", "5"});
  EXPECT_EQ(bad.code, 2);
}

TEST(CliTest, FuzzIsDeterministic) {
  const Result a = run({"fuzz", "--trials", "40", "--max-points", "8", "--seed", "4"});
  const Result b = run({"fuzz", "--trials", "40", "--max-points", "8", "--seed", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result drop = run({"fuzz", "--trials", "100", "--seed", "4", "--drop-hypothesis", "delta"});
  EXPECT_EQ(drop.code, 1);
}

TEST(CliTest, OutputIsByteIdentical) {
  const std::vector<std::string> args{"classify", "--space", fixture("baire_space.json"), "--map",
                                      fixture("baire_map.json"), "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "--space", fixture("ex1_space.json")}).code, 2);
  EXPECT_EQ(run({"check", "--theorem", "thm9", "--space", "x", "--A", "y", "--B", "z"}).code, 2);
  EXPECT_EQ(run({"--output", "yaml", "validate", "--space", fixture("ex1_space.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace ultraprox
