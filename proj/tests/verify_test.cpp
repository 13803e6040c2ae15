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

#include "equidim/errors.hpp"
#include "equidim/random_graphs.hpp"
#include "equidim/verify.hpp"

namespace equidim {
namespace {

TEST(RandomGraphsTest, SeedDeterministicAndConnected) {
  const auto a = random_corpus(99, 20);
  const auto b = random_corpus(99, 20);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_TRUE(is_connected(a[i]));
    EXPECT_GE(a[i].order(), 2);
    EXPECT_LE(a[i].order(), 10);
  }
  EXPECT_NE(random_corpus(100, 20), a);
}

TEST(RandomGraphsTest, LabelledEnumerationCounts) {
  const int want[] = {1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(all_connected_graphs(n).size(), static_cast<std::size_t>(want[n - 1]));
  }
}

TEST(VerifyTest, EverySuitePasses) {
  for (const std::string& name : suite_names()) {
    const SuiteReport r = run_suite(name);
    EXPECT_FALSE(r.checks.empty()) << name;
    EXPECT_EQ(r.failures(), 0) << name << "\n" << report_json(r);
  }
}

TEST(VerifyTest, ReportIndependentOfThreadCount) {
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions four;
  four.threads = 4;
  for (const char* name : {"linearity", "oracle-equivalence"}) {
    EXPECT_EQ(report_json(run_suite(name, one)), report_json(run_suite(name, four)));
  }
}

TEST(VerifyTest, FailuresCarryCounterexamples) {
  SuiteOptions o;
  o.budget = Budget::capped(4);  // most random samples no longer fit
  const SuiteReport r = run_suite("gallai", o);
  ASSERT_GT(r.failures(), 0);
  for (const auto& c : r.checks) {
    if (!c.passed) {
      EXPECT_FALSE(c.counterexample.empty());
    }
  }
}

TEST(VerifyTest, UnknownSuite) {
  EXPECT_THROW(run_suite("nope"), PreconditionError);
}

}  // namespace
}  // namespace equidim
