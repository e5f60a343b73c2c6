// Copyright 2026 The kltcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "kltcalc/json_io.hpp"
#include "oracles.hpp"

namespace kltcalc {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, KltFlagExamples) {
  auto r = run({"klt-flag", "A1", "--d", "a1=0", "--json"});
  EXPECT_EQ(r.status, 0);
  auto j = json_io::parse(r.out);
  EXPECT_TRUE(j["klt"].get<bool>());
  ASSERT_EQ(j["ledger"].size(), 1u);
  EXPECT_EQ(j["ledger"][0]["discrepancy"], "0");

  r = run({"klt-flag", "A2", "--I", "a1", "--d", "a2=1", "--json"});
  EXPECT_EQ(r.status, 0);
  j = json_io::parse(r.out);
  EXPECT_FALSE(j["klt"].get<bool>());
  EXPECT_EQ(j["witness"]["beta"], json_io::parse("[1,1]"));
  EXPECT_EQ(j["min_discrepancy"], "-1");

  r = run({"klt-flag", "A2", "--I", "a1", "--d", "a2=1/2"});
  EXPECT_NE(r.out.find("verdict: klt"), std::string::npos);
  EXPECT_NE(r.out.find("-1/2"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  auto r = run({"roots", "A2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("a1+a2"), std::string::npos);
  r = run({"parabolic", "A2", "--I", "a1"});
  EXPECT_NE(r.out.find("s2,s1"), std::string::npos);
  EXPECT_NE(r.out.find("3w2"), std::string::npos);
  r = run({"bs", "A2", "--I", "a1", "--word", "s2,s1", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_io::parse(r.out)["anticanonical"], json_io::parse(R"(["2","3"])"));
  r = run({"resolve-fan", testing::fixture_path("fans/hj_1_3.json"), "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_io::parse(r.out)["provenance"].size(), 2u);
  r = run({"klt-horo", testing::fixture_path("horo/hj12_A1.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("consistency: ok"), std::string::npos);
  r = run({"verify", "--max-rank", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("0 failures"), std::string::npos);
  r = run({"verify", "--types", "B3,G2", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(json_io::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, PairingAndWeylExamples) {
  auto r = run({"pairing", "A2", "--weight", "-w1+3/2w2", "--coroot", "a1+a2", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_io::parse(r.out)["pairings"][0]["pairing"], "1/2");
  r = run({"pairing", "A2", "--weight", "rho", "--coroot", "a1+a2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["pairings"][0]["pairing"], "2");
  // <w_i, a_j^vee> = delta_ij
  for (int i = 1; i <= 3; ++i) {
    r = run({"pairing", "A3", "--weight", "w" + std::to_string(i), "--json"});
    const auto rows = json_io::parse(r.out)["pairings"];
    for (int j = 0; j < 3; ++j) EXPECT_EQ(rows[j]["pairing"], i == j + 1 ? "1" : "0");
  }
  r = run({"pairing", "A2", "--weight", "w1", "--coroot", "a1-a2"});
  EXPECT_EQ(r.status, 2);
  r = run({"pairing", "A2", "--weight", "v1"});
  EXPECT_EQ(r.status, 2);

  r = run({"weyl", "A2", "--word", "s1", "--root", "a2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["root_image"], json_io::parse("[1,1]"));
  r = run({"weyl", "A2", "--word", "s1", "--weight", "w1", "--json"});
  // w1 - a1 = -w1 + w2
  EXPECT_EQ(json_io::parse(r.out)["weight_image"], json_io::parse(R"(["-1","1"])"));
  r = run({"weyl", "A2", "--word", "", "--weight", "1/2w1-w2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["weight_image"], json_io::parse(R"(["1/2","-1"])"));
  EXPECT_TRUE(json_io::parse(r.out)["inversion_set"].empty());
  r = run({"weyl", "A2", "--word", "s2,s1", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["inversion_set"], json_io::parse("[[0,1],[1,1]]"));
  r = run({"weyl", "A2", "--word", "s1,s2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["inversion_set"], json_io::parse("[[1,0],[1,1]]"));
}

TEST(Cli, CharacterAndPullback) {
  auto r = run({"parabolic", "A2", "--I", "a1", "--character", "3w2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["character_divisor"], json_io::parse(R"({"D_a2":"3"})"));
  r = run({"parabolic", "A2", "--I", "a1", "--character", "0", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["character_divisor"], json_io::parse(R"({"D_a2":"0"})"));
  r = run({"bs", "A2", "--pullback", "0", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["pullback"], json_io::parse(R"(["0","0","0"])"));
  r = run({"parabolic", "A1", "--character", "2rho"});
  EXPECT_NE(r.out.find("2 D_a1"), std::string::npos);
  r = run({"bs", "A2", "--I", "a1", "--pullback", "3w2", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["pullback"], json_io::parse(R"(["3","3"])"));
  r = run({"bs", "A1", "--pullback", "rho", "--json"});
  EXPECT_EQ(json_io::parse(r.out)["pullback"], json_io::parse(R"(["1"])"));
  // w1 is not a character of P when a1 is in the Levi.
  r = run({"bs", "A2", "--I", "a1", "--pullback", "w1"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, InequalityValues) {
  auto r = run({"inequality", "A2", "--I", "a1", "--json"});
  EXPECT_EQ(r.status, 0);
  auto j = json_io::parse(r.out);
  ASSERT_EQ(j["values"].size(), 2u);
  EXPECT_EQ(j["values"][0]["beta"], json_io::parse("[0,1]"));
  EXPECT_EQ(j["values"][0]["value"], "1");
  EXPECT_EQ(j["values"][1]["value"], "0");
  EXPECT_EQ(j["values"][1]["w0_levi_beta"], json_io::parse("[0,1]"));
  r = run({"inequality", "B3", "--json"});
  j = json_io::parse(r.out);
  EXPECT_EQ(j["witness_count"], 9);
  EXPECT_EQ(j["min"], "0");
}

TEST(Cli, PlFunction) {
  auto r = run({"pl-function", testing::fixture_path("fans/hj_1_2.json"), "--values", "1,1",
                "--at", "1,1", "--at", "-1,0", "--json"});
  EXPECT_EQ(r.status, 0);
  auto j = json_io::parse(r.out);
  EXPECT_EQ(j["functionals"], json_io::parse(R"([["1","0"]])"));
  EXPECT_EQ(j["evaluations"][0]["value"], "1");
  EXPECT_TRUE(j["evaluations"][1]["value"].is_null());
  r = run({"pl-function", testing::fixture_path("fans/square_cone_not_qcartier.json"), "--values",
           "1,0,0,0"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("NotQCartier"), std::string::npos);
  r = run({"pl-function", testing::fixture_path("fans/hj_1_2.json"), "--values", "1"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, InputMultiplicitiesAndAnticanonical) {
  auto r = run({"resolve-fan", testing::fixture_path("fans/cone_det2_rank3.json"), "--json"});
  EXPECT_EQ(json_io::parse(r.out)["input_multiplicities"], json_io::parse("[2]"));
  r = run({"resolve-fan", testing::fixture_path("fans/smooth_quadrant.json")});
  EXPECT_NE(r.out.find("multiplicity 1 (smooth)"), std::string::npos);
  r = run({"resolve-fan", testing::fixture_path("fans/square_cone_qcartier.json"), "--json"});
  EXPECT_TRUE(json_io::parse(r.out)["input_multiplicities"][0].is_null());
  r = run({"klt-horo", testing::fixture_path("horo/flag_A2_a1.json"), "--json"});
  EXPECT_EQ(json_io::parse(r.out)["anticanonical"]["colors"], json_io::parse(R"({"D_a2":"3"})"));
  r = run({"klt-horo", testing::fixture_path("horo/line_A1.json")});
  EXPECT_NE(r.out.find("-K = 1 X1 + 1 X2 + 2 D_a1"), std::string::npos);
}

TEST(Cli, HoroDocumentationExamples) {
  const auto interior = testing::fixture_path("horo_examples/interior_color_hj12_A1.json");
  auto r = run({"klt-horo", interior, "--resolution-only", "--json"});
  EXPECT_EQ(r.status, 0);
  auto j = json_io::parse(r.out);
  EXPECT_EQ(j["colors"][0]["placement"], "interior");
  EXPECT_EQ(j["fan"]["rays"][2], json_io::parse("[1,1]"));
  EXPECT_EQ(j["provenance"][0]["reason"], "color a1");
  EXPECT_NE(run({"klt-horo", interior, "--resolution-only"}).out.find("all cones smooth: yes"),
            std::string::npos);
  r = run({"klt-horo", interior});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("Unsupported"), std::string::npos);

  r = run({"klt-horo", testing::fixture_path("horo_examples/flag_A2_a1_sharp.json"), "--json"});
  EXPECT_EQ(r.status, 0);
  j = json_io::parse(r.out);
  EXPECT_FALSE(j["klt"].get<bool>());
  EXPECT_FALSE(j["consistency_failure"].get<bool>());
  EXPECT_EQ(j["ledger_min"], "-1");
  EXPECT_EQ(j["ledger"]["entries"][1]["beta"], json_io::parse("[1,1]"));
  EXPECT_EQ(j["ledger"]["entries"][1]["discrepancy"], "-1");
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
  EXPECT_EQ(run({"klt-flag", "A2", "--I", "a1", "--d", "a2=0.5"}).status, 2);
  EXPECT_EQ(run({"klt-flag", "A2", "--I", "a1", "--d", "a2=3/2"}).status, 2);
  EXPECT_EQ(run({"klt-flag", "Q2"}).status, 2);
  EXPECT_EQ(run({"bs", "A2", "--I", "a1", "--word", "s1,s1"}).status, 2);
  EXPECT_EQ(run({"resolve-fan", "/nonexistent.json"}).status, 2);
  EXPECT_EQ(run({"resolve-fan", testing::fixture_path("fans/square_cone_not_qcartier.json")}).status, 1);
  for (const auto& f : testing::fixture_files("horo_not_qcartier")) {
    const auto r = run({"klt-horo", f});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("NotQCartier"), std::string::npos);
  }
  EXPECT_EQ(run({"verify", "--types", "A2xA1"}).status, 2);
  EXPECT_EQ(run({"verify", "--max-rank", "9"}).status, 2);
}

TEST(Cli, HelpDocumentsRootNaming) {
  const auto r = run({"--help"});
  EXPECT_NE(r.out.find("a1..an"), std::string::npos);
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"roots", "G2", "--json"},
      {"parabolic", "B3", "--I", "a2"},
      {"bs", "C3", "--I", "a1,a3", "--json"},
      {"klt-flag", "D4", "--I", "a2", "--d", "a1=1/4,a3=3/4,a4=1", "--json"},
      {"resolve-fan", testing::fixture_path("fans/weighted_p112.json"), "--json"},
      {"klt-horo", testing::fixture_path("horo/two_cones_B2_a2.json"), "--json"},
      {"verify", "--max-rank", "3", "--json"},
      {"pairing", "F4", "--weight", "rho", "--json"},
      {"weyl", "B3", "--word", "s1,s2,s3", "--weight", "w2", "--json"},
      {"inequality", "C4", "--I", "a2,a3", "--json"},
      {"pl-function", testing::fixture_path("fans/hj_1_3.json"), "--values", "1,2", "--json"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.status, 0) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
  }
}

}  // namespace
}  // namespace kltcalc
