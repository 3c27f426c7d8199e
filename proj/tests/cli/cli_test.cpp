// Copyright 2026 The fsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fsl/forms.hpp"
#include "fsl/random.hpp"
#include "fsl/reduction.hpp"
#include "fsl_cli/commands.hpp"
#include "fsl_cli/json_io.hpp"

namespace fsl::cli {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Invocation Invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "fsl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Invocation r;
  r.code = RunMain(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json WithoutTime(Json j) {
  j.erase("wall_seconds");
  return j;
}

std::string TupleJson(const FormedSpace& s, const std::vector<Vector>& pts) {
  Json j = Json::object();
  j["epsilon"] = s.epsilon();
  j["d"] = s.d();
  j["r"] = s.r();
  Json p = Json::array();
  for (const Vector& v : pts) p.push_back(ToJson(v));
  j["points"] = p;
  return j.dump();
}

TEST(Cli, VerifyExample) {
  const Invocation r = Invoke({"verify", "--suite", "cross-ratios", "--eps", "+1", "--d", "0",
                        "--r", "3", "--trials", "200", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["config"]["suite"], "cross-ratios");
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["samples"], 200);
    EXPECT_LE(c["max_residual"].get<double>(), 1e-9);
  }
  EXPECT_TRUE(j.contains("wall_seconds"));
  EXPECT_FALSE(j["version"].get<std::string>().empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--trials", "0"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--trials", "-3"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--eps", "2", "--d", "0"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--eps", "-1", "--d", "1"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--eps", "+1"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--tol", "identity=-1"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--tol", "bogus=1e-3"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--tol", "identity"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--suite", "constants", "--family", "E8"}).code, 2);
  EXPECT_EQ(Invoke({"verify", "--threads", "0"}).code, 2);
  EXPECT_EQ(Invoke({"estimate-norm"}).code, 2);
  EXPECT_EQ(Invoke({"estimate-norm", "--cocycle", "vol-p2"}).code, 2);
  const Invocation zero = Invoke({"estimate-norm", "--cocycle", "vol-p1", "--trials", "0"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("trials"), std::string::npos);
  EXPECT_EQ(Invoke({"estimate-norm", "--cocycle", "b-n", "--n", "1"}).code, 2);
}

TEST(Cli, HelpAndVersionExitZero) {
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({"verify", "--help"}).code, 0);
  const Invocation v = Invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("0."), std::string::npos);
}

TEST(Cli, CheckFailureExitsOneAndNamesTheRecord) {
  const Invocation r = Invoke({"verify", "--suite", "dilogarithm", "--trials", "50", "--tol",
                        "dilog=1e-30"});
  EXPECT_EQ(r.code, 1);
  const Json j = r.json();
  EXPECT_FALSE(j["pass"].get<bool>());
  ASSERT_TRUE(j.contains("first_failure"));
  EXPECT_NE(r.err.find(j["first_failure"].get<std::string>()), std::string::npos);
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::string> base = {"verify", "--suite", "bbi-value", "--trials", "12",
                                         "--seed", "99"};
  auto a = base, b = base;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "3"});
  const Invocation ra = Invoke(a), rb = Invoke(b), rc = Invoke(a);
  ASSERT_EQ(ra.code, 0);
  EXPECT_EQ(WithoutTime(ra.json()).dump(), WithoutTime(rb.json()).dump());
  EXPECT_EQ(WithoutTime(ra.json()).dump(), WithoutTime(rc.json()).dump());
  const Invocation other = Invoke({"verify", "--suite", "bbi-value", "--trials", "12", "--seed", "98"});
  EXPECT_NE(WithoutTime(ra.json()).dump(), WithoutTime(other.json()).dump());
}

TEST(Cli, EstimateVolP1) {
  const Invocation r = Invoke({"estimate-norm", "--cocycle", "vol-p1", "--trials", "2000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_NEAR(j["results"]["estimate"].get<double>(), 1.0149, 5e-4);
  EXPECT_EQ(j["results"]["argmax"].size(), 2u);
  EXPECT_NEAR(j["results"]["ratio"].get<double>(), 1.0, 1e-6);
}

TEST(Cli, EstimateBnStaysBelowTheNorm) {
  const Invocation r = Invoke({"estimate-norm", "--cocycle", "b-n", "--n", "3", "--trials", "50",
                        "--no-refine"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(r.json()["results"]["ratio"].get<double>(), 1.0);
}

TEST(Cli, ReduceRandomTuples) {
  for (int k : {3, 4, 5}) {
    const FormedSpace s = FormedSpace::Make(1, 1, 3);
    Rng rng(static_cast<std::uint64_t>(k));
    const ConfigTuple t = RandomTuple(s, k, rng);
    const Invocation r = Invoke({"reduce"}, TupleJson(s, t.points()));
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_LE(j["results"]["residual"].get<double>(), 1e-8);
    // Apply the emitted g ourselves.
    const Matrix g = MatrixFromJson(j["results"]["g"], "g");
    EXPECT_LE(s.GroupResidual(g), 1e-9);
    const Json canon = j["results"]["canonical"];
    ASSERT_EQ(canon.size(), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const Vector c = VectorFromJson(canon[i], "c");
      EXPECT_LE(ProjectiveDistance(g * t.point(i), c), 1e-8);
    }
  }
}

TEST(Cli, ReduceCanonicalInputHasZeroResidual) {
  const FormedSpace s = FormedSpace::Make(-1, 0, 2);
  const ConfigTuple t = Phi3(s, Pair{Complex(0.2, 0.5), Complex(-1.0, 0.3)});
  const Invocation r = Invoke({"reduce"}, TupleJson(s, t.points()));
  ASSERT_EQ(r.code, 0);
  EXPECT_LE(r.json()["results"]["residual"].get<double>(), 1e-14);
}

TEST(Cli, ReduceRejectsDegenerateDelta) {
  const FormedSpace s = FormedSpace::Make(-1, 0, 3);
  std::vector<Vector> pts = Phi2(s).points();
  pts.push_back(Phi3Vector(s, Pair{Complex(0.5, 1.0), Complex(0.5, -1.0)}) +
                s.Basis(Slot::E(1)));
  const Invocation r = Invoke({"reduce"}, TupleJson(s, pts));
  EXPECT_EQ(r.code, 1);
  const Json j = r.json();
  EXPECT_EQ(j["error"]["kind"], "genericity");
  EXPECT_EQ(j["error"]["predicate"], "Delta");
}

TEST(Cli, ReduceParseErrors) {
  const Invocation syntax = Invoke({"reduce"}, "{\"epsilon\": 1,\n \"d\": 0,, }");
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("<stdin>:2:"), std::string::npos) << syntax.err;
  EXPECT_EQ(Invoke({"reduce"}, R"({"epsilon": 1, "d": 0, "r": 2, "points": [[[1, 0]]]})").code,
            2);
  EXPECT_EQ(Invoke({"reduce"}, R"({"epsilon": 1, "d": 0, "points": []})").code, 2);
  EXPECT_EQ(Invoke({"reduce"}, R"({"epsilon": 1, "d": 0, "r": 2,
      "points": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],["x",0]]]})")
                .code,
            2);
  // Non-isotropic point.
  EXPECT_EQ(Invoke({"reduce"}, R"({"epsilon": 1, "d": 0, "r": 2,
      "points": [[[1,0],[0,0],[0,0],[1,0]], [[0,0],[0,0],[0,0],[1,0]],
                 [[0,0],[1,0],[0,0],[0,0]]]})")
                .code,
            2);
  EXPECT_EQ(Invoke({"reduce", "--in", "/nonexistent/input.json"}).code, 2);
}

TEST(Cli, OutPathWritesTheReport) {
  const std::string path = ::testing::TempDir() + "fsl_cli_report.json";
  const Invocation r = Invoke({"verify", "--suite", "constants", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const Json j = Json::parse(f);
  EXPECT_EQ(j["schema"], 1);
  std::remove(path.c_str());
}

TEST(Cli, FamilyTagIsReported) {
  const Invocation r = Invoke({"verify", "--suite", "constants", "--family", "D4"});
  ASSERT_EQ(r.code, 0);
  const Json f = r.json()["results"]["family"];
  EXPECT_EQ(f["dynkin_index"], 28);
  EXPECT_EQ(f["status"], "CONJECTURE");
}

}  // namespace
}  // namespace fsl::cli
