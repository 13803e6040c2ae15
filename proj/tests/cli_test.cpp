// Copyright 2026 The equidim Authors
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
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace equidim::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string generated(const std::string& family) {
  return invoke({"gen", family}).out;
}

TEST(CliTest, GenWritesEdgeList) {
  const Outcome r = invoke({"gen", "cycle", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

TEST(CliTest, XiFromStdin) {
  const Outcome r = invoke({"xi", "-"}, generated("fish"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("xi = 2"), std::string::npos) << r.out;
}

TEST(CliTest, XiCoronaJson) {
  const Outcome r = invoke({"--json", "xi-corona", "-", "--nh", "2"}, generated("fish"));
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 8);
  EXPECT_EQ(j["decomposition"]["upper"], nlohmann::json::array({4}));
  EXPECT_EQ(j["decomposition"]["lower"].size(), 6u);
}

TEST(CliTest, EmptyBisector) {
  const Outcome r = invoke({"empty-bisector", "-"}, generated("fish"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "6 2\n4 5\n4 6\n");
}

TEST(CliTest, ThresholdSweepCsv) {
  const Outcome r = invoke({"k-threshold", "-", "--sweep", "1..3"}, generated("chorded-path"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "nh,xi,line,lower,upper\n1,8,8,8,11\n2,12,12,12,15\n3,16,16,16,19\n");
}

TEST(CliTest, ParseErrorNamesLine) {
  const Outcome r = invoke({"xi", "-"}, "3 2\n1 2\n2 x\n");
  EXPECT_EQ(r.code, kError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliTest, UnknownSubcommand) {
  const Outcome r = invoke({"bogus"});
  EXPECT_EQ(r.code, kError);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
}

TEST(CliTest, MissingFile) {
  EXPECT_EQ(invoke({"xi", "/nonexistent/graph.txt"}).code, kError);
}

TEST(CliTest, BudgetRefusesLargeInstance) {
  const Outcome r = invoke({"--budget", "5", "xi-corona", "-", "--nh", "1"},
                           generated("chorded-path"));
  EXPECT_EQ(r.code, kError);
  EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;
}

TEST(CliTest, CsvRejectedForScalarCommands) {
  EXPECT_EQ(invoke({"--format", "csv", "xi", "-"}, generated("fish")).code, kError);
}

TEST(CliTest, ForwardCheck) {
  const std::string g = generated("forward-example");
  const Outcome yes = invoke({"forward-check", "-", "--x", "1,2,3,5,6", "--y", "1,2,3,4"}, g);
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.out.find("not"), std::string::npos) << yes.out;
  const Outcome no = invoke({"forward-check", "-", "--x", "1,2,3,4", "--y", "1,2,3,5,6"}, g);
  EXPECT_EQ(no.code, kOk);
  EXPECT_NE(no.out.find("not"), std::string::npos) << no.out;
  EXPECT_EQ(invoke({"forward-check", "-", "--x", "1", "--y", "2"}, g).code, kError);
}

TEST(CliTest, VerifySuiteJson) {
  const Outcome r = invoke({"--json", "verify", "table1", "--threads", "2"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "table1");
  EXPECT_EQ(j["failures"], 0);
}

TEST(CliTest, VerifyUnknownSuite) {
  EXPECT_EQ(invoke({"verify", "nope"}).code, kError);
}

}  // namespace
}  // namespace equidim::cli
