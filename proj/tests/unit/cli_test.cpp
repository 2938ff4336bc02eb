// Copyright 2026 The ci-mirror Authors.
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

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ci_mirror");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cimirror::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GwJson) {
  const Result r = invoke({"gw", "--a", "5", "--max-degree", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["multidegree"], nlohmann::json::array({5}));
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["kind"], "gw");
  EXPECT_EQ(j["order"], 5);
  EXPECT_EQ(j["table"]["1"], "2875/12");
  EXPECT_EQ(j["table"].size(), 5u);
}

TEST(Cli, BpsCsv) {
  const Result r = invoke({"bps", "--a", "2,2,2,2", "--max-degree", "7", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("multidegree,d,value\n", 0), 0u);
  EXPECT_NE(r.out.find("\"2,2,2,2\",4,14752\n"), std::string::npos);
}

TEST(Cli, K3IsZero) {
  const Result r = invoke({"gw", "--a", "4", "--max-degree", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& [d, v] : j["table"].items()) EXPECT_EQ(v, "0") << d;
}

TEST(Cli, Enumerate) {
  const Result r = invoke({"enumerate", "--dim", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 11u);
  EXPECT_EQ(invoke({"enumerate", "--dim", "3"}).out, "(5)\n(2,4)\n(3,3)\n(2,2,3)\n(2,2,2,2)\n");
}

TEST(Cli, Verify) {
  const Result ids = invoke({"verify", "--suite", "identities", "--a", "3,3", "--order", "12"});
  EXPECT_EQ(ids.code, 0) << ids.out;
  const Result fx = invoke({"verify", "--suite", "fixtures", "--dim", "3"});
  EXPECT_EQ(fx.code, 0);
  EXPECT_NE(fx.out.find("26/26 checks passed"), std::string::npos) << fx.out;
  const Result json = invoke({"verify", "--suite", "elliptic", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(json.out)["passed"]);
}

TEST(Cli, Fixtures) {
  const Result r = invoke({"fixtures", "--dim", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"6\",3,2734099200\n"), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, 2);
  const Result bps4 = invoke({"bps", "--a", "6"});
  EXPECT_EQ(bps4.code, 2);
  EXPECT_NE(bps4.err.find("DimensionMismatch"), std::string::npos);
  EXPECT_EQ(invoke({"gw", "--a", "2,x"}).code, 2);
  EXPECT_EQ(invoke({"gw", "--a", "5", "--max-degree", "0"}).code, 2);
  EXPECT_EQ(invoke({"gw", "--a", "5", "--dim", "3"}).code, 2);
  EXPECT_EQ(invoke({"gw", "--a", "5", "--w-order", "1"}).code, 2);
  EXPECT_NE(invoke({"gw", "--a", "5", "--w-order", "1"}).err.find("WUnderflow"), std::string::npos);
  EXPECT_NE(invoke({"frobnicate"}).code, 0);
  const Result ones = invoke({"gw", "--a", "1,5", "--max-degree", "1"});
  EXPECT_EQ(ones.code, 0);
  EXPECT_NE(ones.err.find("warning"), std::string::npos);
}

TEST(Cli, DeterministicAcrossJobs) {
  const auto one = invoke({"gw", "--dim", "3", "--max-degree", "9", "--jobs", "1"});
  const auto four = invoke({"gw", "--dim", "3", "--max-degree", "9", "--jobs", "4"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, invoke({"gw", "--dim", "3", "--max-degree", "9", "--jobs", "4"}).out);
}
