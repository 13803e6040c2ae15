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

// One line per acceptance criterion; exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "equidim/bisector.hpp"
#include "equidim/cover.hpp"
#include "equidim/equidistant.hpp"
#include "equidim/families.hpp"
#include "equidim/verify.hpp"

namespace {

using namespace equidim;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome suites(const std::vector<std::string>& names, int threads = 2) {
  SuiteOptions options;
  options.threads = threads;
  Outcome o;
  int checks = 0;
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, options);
    checks += static_cast<int>(r.checks.size());
    for (const auto& c : r.checks) {
      if (c.passed) continue;
      if (o.passed) o.detail = name + " " + c.instance + " " + c.check + ": " + c.detail;
      o.passed = false;
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome chorded_path() {
  const Graph g = generate({Family::kChordedPath, {}});
  const Graph ghat = empty_bisector_graph(g).graph();
  Outcome o;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok && o.passed) {
      o.passed = false;
      o.detail = what;
    }
  };
  expect(vertex_cover_number(ghat).value == 4, "beta(Ghat) != 4");
  expect(independence_number(ghat).value == 3, "alpha(Ghat) != 3");
  expect(beta_star(g).value == 1, "beta* != 1");
  for (int nh = 1; nh <= 4; ++nh) {
    const long long xi = xi_corona_structured(g, nh).value;
    expect(xi == 4 * nh + 4, "nh=" + std::to_string(nh) + " got " + std::to_string(xi));
  }
  if (o.passed) o.detail = "xi = 4 nH + 4 for nH 1..4, beta 4, alpha 3, beta* 1";
  return o;
}

const std::vector<std::string> kAllCriteria = {
    "table1", "fig7", "families", "oracle-equivalence", "bounds",
    "characterization", "linearity", "bipartite", "gallai", "g-vs-ghat"};

Outcome determinism() {
  Outcome o;
  for (const auto& name : kAllCriteria) {
    std::string first;
    for (int threads : {1, 3, 8}) {
      SuiteOptions options;
      options.threads = threads;
      const std::string json = report_json(run_suite(name, options));
      if (first.empty()) {
        first = json;
      } else if (json != first) {
        o.passed = false;
        o.detail = name + " differs at threads=" + std::to_string(threads);
        return o;
      }
    }
  }
  o.detail = "threads 1, 3, 8 byte-identical over every suite";
  return o;
}

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 1.0, [] { return suites({"table1"}); }},
      {2, 10.0, [] { return suites({"fig7"}); }},
      {3, 5.0, chorded_path},
      {4, 120.0, [] { return suites({"families"}); }},
      {5, 300.0, [] { return suites({"oracle-equivalence"}); }},
      {6, 600.0, [] { return suites({"bounds", "characterization", "linearity"}); }},
      {7, 600.0, [] { return suites({"bipartite", "gallai", "g-vs-ghat"}); }},
      {8, 600.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      o.passed = false;
      o.detail += " (time limit exceeded)";
    }
    if (!o.passed) ++failed;
    std::printf("criterion %d: %s %.3fs (limit %.0fs) %s\n", c.id,
                o.passed ? "PASS" : "FAIL", seconds, c.limit_seconds, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
