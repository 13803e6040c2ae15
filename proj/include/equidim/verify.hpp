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

#ifndef EQUIDIM_VERIFY_HPP_
#define EQUIDIM_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equidim/budget.hpp"

namespace equidim {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CheckResult {
  std::string instance;
  std::string check;
  bool passed = false;
  std::string detail;
  std::string counterexample;  // edge list of the offending graph on failure
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  int random_count = 50;
  Budget budget;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by (instance, check)

  int failures() const;
  bool passed() const { return failures() == 0; }
};

// table1, fig7, families, bounds, bipartite, gallai, characterization,
// linearity, oracle-equivalence, g-vs-ghat.
const std::vector<std::string>& suite_names();

// Instances run on `threads` workers; the report does not depend on the
// worker count. Throws PreconditionError for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

// Stable JSON rendering: same report, same bytes.
std::string report_json(const SuiteReport& report);
std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace equidim

#endif  // EQUIDIM_VERIFY_HPP_
