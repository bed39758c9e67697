// Copyright 2026 The gamma4 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gamma4_cli.hpp"

namespace gamma4::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = invoke(std::move(args));
  EXPECT_EQ(r.code, kOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, InvariantsOfMirrorTorusKnot) {
  const json doc = invoke_json({"invariants", "T(3,-5)"});
  EXPECT_EQ(doc["input"], "T(3,-5)");
  EXPECT_TRUE(doc.contains("version"));
  const json& r = doc["results"];
  EXPECT_EQ(r["expression"], "-T(3,5)");
  EXPECT_EQ(r["signature"], 8);
  EXPECT_EQ(r["t"], 3);
  EXPECT_EQ(r["V_mirror"], (std::vector<int>{2, 1, 1, 1, 0}));
  EXPECT_EQ(r["genus_negative"], 4);
}

TEST(Cli, LeadingMinusIsAnExpression) {
  const Result a = invoke({"invariants", "-T(2,3)"});
  const Result b = invoke({"invariants", "--", "-T(2,3)"});
  EXPECT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(b.code, kOk) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BoundExamples) {
  const json unknot = invoke_json({"bound", ""})["results"];
  EXPECT_EQ(unknot["main"], 0);
  EXPECT_EQ(unknot["final_gamma4_lower"], 1);

  const json sharp = invoke_json({"bound", "T(3,-5)"})["results"];
  EXPECT_EQ(sharp["main"], 1);
  EXPECT_EQ(sharp["argmax"], 1);
  EXPECT_EQ(sharp["batson"], 0);
  EXPECT_EQ(sharp["nu_plus"], 0);
  EXPECT_EQ(sharp["upsilon"], 1);

  const json head = invoke_json({"bound", "T(2,3) - T(5,6)", "--stable", "5"})["results"];
  EXPECT_EQ(head["t"], 6);
  EXPECT_EQ(head["main"], 1);
  EXPECT_EQ(head["stable"]["num"], 8);
  EXPECT_EQ(head["stable"]["den"], 5);
  EXPECT_EQ(head["stable_witness"], 5);
  EXPECT_EQ(head["final_gamma4_lower"], 2);
}

TEST(Cli, DInvariantOfUnknotSurgery) {
  const json r = invoke_json({"d-invariant", "", "3"})["results"];
  ASSERT_EQ(r["d"].size(), 3u);
  EXPECT_EQ(r["d"][0]["d"], (json{{"num", 1}, {"den", 2}}));
  EXPECT_EQ(r["d"][1]["d"], (json{{"num", -1}, {"den", 6}}));
  EXPECT_EQ(r["d"][2]["d"], (json{{"num", -1}, {"den", 6}}));
}

TEST(Cli, DInvariantNegativeFramingIsMirrored) {
  const json pos = invoke_json({"d-invariant", "T(2,3)", "5"})["results"]["d"];
  const json neg = invoke_json({"d-invariant", "-T(2,3)", "-5"})["results"]["d"];
  ASSERT_EQ(pos.size(), neg.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    EXPECT_EQ(pos[k]["d"]["num"].get<std::int64_t>(), -neg[k]["d"]["num"].get<std::int64_t>());
    EXPECT_EQ(pos[k]["d"]["den"], neg[k]["d"]["den"]);
  }
}

TEST(Cli, OmegaRows) {
  const json r = invoke_json({"omega", "T(2,3) - T(5,6)", "--max-n", "25"})["results"];
  ASSERT_EQ(r["rows"].size(), 25u);
  auto row = [&](int n) { return r["rows"][static_cast<std::size_t>(n - 1)]; };
  EXPECT_EQ(row(5)["t"], 27);
  EXPECT_EQ(row(5)["ratio"], (json{{"num", 27}, {"den", 5}}));
  EXPECT_EQ(row(10)["t"], 53);
  EXPECT_EQ(row(25)["t"], 131);
  EXPECT_EQ(row(25)["ratio"], (json{{"num", 131}, {"den", 25}}));
  EXPECT_FALSE(r["strictly_decreasing"].get<bool>());

  const json flat = invoke_json({"omega", "T(3,-5)", "--max-n", "6"})["results"];
  for (const auto& x : flat["rows"]) EXPECT_EQ(x["ratio"], (json{{"num", 3}, {"den", 1}}));
}

TEST(Cli, Thin) {
  const json r = invoke_json({"thin", "--tau", "3", "--sigma", "-6"})["results"];
  EXPECT_EQ(r["main"], 0);
  EXPECT_EQ(r["t_mirror"], 3);
  EXPECT_EQ(invoke({"thin", "--tau", "1", "--sigma", "3"}).code, kUsage);
}

TEST(Cli, VerifySubsets) {
  const Result r = invoke({"verify", "--subset", "sharpness"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--subset", "no-such-subset"}).code, kUsage);
}

TEST(Cli, CfkDumpMatchesLibrary) {
  const Result r = invoke({"cfk-dump", "T(2,3)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0 0 1\n1 -1 0\n2 -2 -1\n1 -> U^0 2\n1 -> U^1 0\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"invariants", "T(2,4)"}).code, kUsage);
  EXPECT_EQ(invoke({"invariants", "T(2,3"}).code, kUsage);
  EXPECT_EQ(invoke({"d-invariant", "T(2,3)", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"omega", "T(2,3)", "--max-n", "0"}).code, kUsage);
  const Result big = invoke({"cfk-dump", "T(2,3) + T(9,10) + T(11,12) + T(13,14)"});
  EXPECT_EQ(big.code, kUnsupported);
  EXPECT_NE(big.err.find("unsupported"), std::string::npos);
}

TEST(Cli, SyntaxErrorReportsPosition) {
  const Result r = invoke({"invariants", "T(2,3) * T(3,4)"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("position"), std::string::npos);
}

TEST(Cli, OutputIsByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"invariants", "T(2,3) - T(5,6)"}, {"bound", "2*T(3,4) - T(2,7)"}, {"--json", "bound", "T(3,-5)"}}) {
    const Result a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, DecimalIsMarkedInexact) {
  const Result r = invoke({"--decimal", "bound", "T(2,3) - T(5,6)", "--stable", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("1.6 (inexact)"), std::string::npos) << r.out;
}

class CliCache : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("gamma4_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".json");
    std::filesystem::remove(path_);
  }
  void TearDown() override { std::filesystem::remove(path_); }
  std::filesystem::path path_;
};

TEST_F(CliCache, CachedRunsMatchUncached) {
  const std::vector<std::string> cmd = {"bound", "T(2,3) - T(5,6)", "--stable", "12"};
  const Result plain = invoke(cmd);
  std::vector<std::string> cached = {"--cache", path_.string()};
  cached.insert(cached.end(), cmd.begin(), cmd.end());
  const Result cold = invoke(cached);
  ASSERT_TRUE(std::filesystem::exists(path_));
  EXPECT_FALSE(std::filesystem::exists(path_.string() + ".tmp"));
  const Result warm = invoke(cached);
  EXPECT_EQ(plain.out, cold.out);
  EXPECT_EQ(plain.out, warm.out);

  std::ifstream in(path_);
  const json data = json::parse(in);
  EXPECT_EQ(data.at("-T(2,3) + T(5,6)|V"), to_json(vi_expr(parse("T(5,6) - T(2,3)"))));
  EXPECT_EQ(data.at("T(2,3) - T(5,6)|t"), 6);
}

TEST_F(CliCache, CorruptCacheIsUsageError) {
  { std::ofstream(path_) << "not json"; }
  EXPECT_EQ(invoke({"--cache", path_.string(), "invariants", "T(2,3)"}).code, kUsage);
}

}  // namespace
}  // namespace gamma4::cli
