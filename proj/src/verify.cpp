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

#include "equidim/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "equidim/bisector.hpp"
#include "equidim/corona.hpp"
#include "equidim/cover.hpp"
#include "equidim/equidistant.hpp"
#include "equidim/errors.hpp"
#include "equidim/families.hpp"
#include "equidim/graph_io.hpp"
#include "equidim/random_graphs.hpp"
#include "equidim/theory.hpp"

namespace equidim {

namespace {

std::string pad(int value, int width = 2) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::string nh_key(int copy_order) { return "nh=" + pad(copy_order) + "/"; }

template <typename T>
std::string show(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

class Recorder {
 public:
  Recorder(std::string instance, const Graph& g)
      : instance_(std::move(instance)), graph_(g) {}

  void expect(std::string check, bool ok, std::string detail = {}) {
    CheckResult r{instance_, std::move(check), ok, std::move(detail), {}};
    if (!ok) r.counterexample = format_edge_list(graph_);
    results_.push_back(std::move(r));
  }

  template <typename A, typename B>
  void expect_eq(std::string check, const A& got, const B& want) {
    std::ostringstream d;
    d << "got " << got << ", want " << want;
    expect(std::move(check), got == want, d.str());
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string instance_;
  const Graph& graph_;
  std::vector<CheckResult> results_;
};

struct Task {
  std::string instance;
  Graph graph;
  std::function<void(const Graph&, Recorder&)> body;
};

std::vector<CheckResult> run_task(const Task& task) {
  Recorder rec(task.instance, task.graph);
  try {
    task.body(task.graph, rec);
  } catch (const std::exception& e) {
    rec.expect("completed", false, e.what());
  }
  return rec.take();
}

std::vector<CheckResult> run_all(const std::vector<Task>& tasks, int threads) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  const int workers =
      std::max(1, std::min(threads, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      slots[i] = run_task(tasks[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.instance, a.check) < std::tie(b.instance, b.check);
  });
  return out;
}

Graph family(Family f, std::vector<int> params = {}) {
  return generate({f, std::move(params)});
}

VertexSet by_labels(const Graph& g, std::initializer_list<Label> labels) {
  VertexSet s(g.order());
  for (Label l : labels) s.insert(*g.vertex_of(l));
  return s;
}

std::vector<std::pair<std::string, Graph>> random_instances(
    const SuiteOptions& o) {
  std::vector<std::pair<std::string, Graph>> out;
  const std::vector<Graph> corpus = random_corpus(o.seed, o.random_count);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.emplace_back("random-" + pad(static_cast<int>(i)), corpus[i]);
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> named_examples() {
  return {{"fish", family(Family::kFish)},
          {"nonlinear", family(Family::kNonlinear)},
          {"chorded-path", family(Family::kChordedPath)},
          {"k5-corona-n1", family(Family::kK5CoronaN1)},
          {"c3-corona-p2", family(Family::kC3CoronaP2)},
          {"forward-example", family(Family::kForwardExample)}};
}

// ---------------------------------------------------------------------------

std::vector<Task> table1(const SuiteOptions& o) {
  struct Row {
    int lower, s1, s2, upper, xi;
  };
  const Row rows[] = {{6, 7, 6, 7, 6}, {7, 8, 8, 8, 8}, {8, 9, 10, 9, 9}};
  std::vector<Task> tasks;
  for (int nh = 1; nh <= 3; ++nh) {
    const Row want = rows[nh - 1];
    tasks.push_back({"fish/nh=" + std::to_string(nh), family(Family::kFish),
                     [=](const Graph& g, Recorder& rec) {
      const BoundsReport b = bounds_report(g, nh, o.budget);
      const Graph ghat = empty_bisector_graph(g).graph();
      const CoronaGraph c = corona(g, family(Family::kEmpty, {nh}));
      auto size_of = [&](const char* name, const VertexSet& up,
                         const VertexSet& low) {
        rec.expect(std::string(name) + "-forward",
                   is_vertex_cover(ghat, up) && is_vertex_cover(ghat, low) &&
                       forward_equalized(g, {up, low}));
        rec.expect(std::string(name) + "-equalizer",
                   is_distance_equalizer(c.product(), c.lift(up, low)));
        return up.size() * nh + low.size();
      };
      const int s1 = size_of("s1", by_labels(g, {4}), VertexSet::full(6));
      const int s2 = size_of("s2", by_labels(g, {3, 4}),
                             by_labels(g, {1, 2, 5, 6}));
      rec.expect_eq("lower", show(b.lower), std::to_string(want.lower));
      rec.expect_eq("s1", s1, want.s1);
      rec.expect_eq("s2", s2, want.s2);
      rec.expect_eq("upper", show(b.upper), std::to_string(want.upper));
      rec.expect_eq("xi", show(b.exact), std::to_string(want.xi));
    }});
  }
  return tasks;
}

std::vector<Task> fig7(const SuiteOptions& o) {
  const int want[] = {8, 12, 16, 19, 22, 25};
  std::vector<Task> tasks;
  for (int nh = 1; nh <= 6; ++nh) {
    tasks.push_back({"nonlinear/nh=" + std::to_string(nh),
                     family(Family::kNonlinear),
                     [=](const Graph& g, Recorder& rec) {
      const int xi = xi_corona_structured(g, nh, o.budget).value;
      rec.expect_eq("xi", xi, want[nh - 1]);
      rec.expect_eq("line", xi, nh <= 2 ? 4 * nh + 4 : 3 * nh + 7);
    }});
  }
  return tasks;
}

std::vector<Task> families(const SuiteOptions& o) {
  const std::vector<FamilySpec> specs = {
      {Family::kComplete, {2}}, {Family::kComplete, {3}},
      {Family::kComplete, {4}}, {Family::kComplete, {5}},
      {Family::kCompleteBipartite, {1, 1}},
      {Family::kCompleteBipartite, {1, 2}},
      {Family::kCompleteBipartite, {1, 3}},
      {Family::kBistar, {1, 1}}, {Family::kBistar, {1, 2}},
      {Family::kBistar, {1, 3}},
      {Family::kCompleteMultipartite, {1, 1, 1}},
      {Family::kCompleteMultipartite, {1, 1, 1, 1}},
      {Family::kCompleteMultipartite, {1, 1, 2}},
      {Family::kWheel, {4}}, {Family::kWheel, {5}}, {Family::kWheel, {6}},
      {Family::kHypercube, {1}}, {Family::kHypercube, {2}},
      {Family::kHypercube, {3}},
      {Family::kPath, {2}}, {Family::kPath, {3}}, {Family::kPath, {4}},
      {Family::kPath, {5}},
      {Family::kCycle, {3}}, {Family::kCycle, {4}}, {Family::kCycle, {5}},
      {Family::kCycle, {6}},
  };
  std::vector<Task> tasks;
  for (const FamilySpec& spec : specs) {
    tasks.push_back({describe(spec), generate(spec),
                     [=](const Graph& g, Recorder& rec) {
      for (int nh = 1; nh <= 3; ++nh) {
        const FormulaValue f = closed_formula(spec, nh);
        const long long xi = xi_corona_structured(g, nh, o.budget).value;
        if (f.flagged) {
          std::ostringstream d;
          d << "got " << xi << ", bipartite value " << *f.bipartite_value
            << ", published value " << f.value;
          rec.expect(nh_key(nh) + "bipartite-value", xi == *f.bipartite_value,
                     d.str());
        } else {
          rec.expect_eq(nh_key(nh) + f.clause, xi, f.value);
        }
      }
    }});
  }
  return tasks;
}

std::vector<Task> bounds(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (auto& [name, graph] : random_instances(o)) {
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      for (int nh = 1; nh <= 5; ++nh) {
        const BoundsReport b = bounds_report(g, nh, o.budget);
        std::ostringstream d;
        d << "floor=" << b.floor << " weak=" << show(b.lower_weak)
          << " lower=" << show(b.lower) << " exact=" << show(b.exact)
          << " upper=" << show(b.upper) << " via-xi=" << show(b.upper_via_xi);
        rec.expect(nh_key(nh) + "chain", b.chain_holds() && b.exact && b.lower,
                   d.str());
      }
    }});
  }
  return tasks;
}

std::vector<Task> bipartite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, Graph>> graphs;
  const std::vector<FamilySpec> specs = {
      {Family::kPath, {2}}, {Family::kPath, {5}}, {Family::kPath, {6}},
      {Family::kCycle, {4}}, {Family::kCycle, {6}}, {Family::kCycle, {8}},
      {Family::kCompleteBipartite, {2, 3}}, {Family::kCompleteBipartite, {3, 5}},
      {Family::kHypercube, {2}}, {Family::kHypercube, {3}},
      {Family::kBistar, {1, 2}}, {Family::kBistar, {2, 3}},
  };
  for (const auto& s : specs) graphs.emplace_back(describe(s), generate(s));
  for (auto& [name, g] : random_instances(o)) {
    if (is_bipartite(g)) graphs.emplace_back(name, g);
  }
  std::vector<Task> tasks;
  for (auto& [name, graph] : graphs) {
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      for (int nh = 1; nh <= 4; ++nh) {
        rec.expect_eq(nh_key(nh) + "formula",
                      static_cast<long long>(
                          xi_corona_structured(g, nh, o.budget).value),
                      bipartite_formula(g, nh));
      }
    }});
  }
  return tasks;
}

std::vector<Task> gallai(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (auto& [name, graph] : random_instances(o)) {
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      const Graph ghat = empty_bisector_graph(g).graph();
      const CoverResult beta = vertex_cover_number(ghat, o.budget);
      const CoverResult alpha = independence_number(ghat, o.budget);
      rec.expect_eq("identity", alpha.value + beta.value, ghat.order());
      rec.expect("cover-witness", is_vertex_cover(ghat, beta.witness) &&
                                      beta.witness.size() == beta.value);
      rec.expect("independent-witness",
                 is_independent_set(ghat, alpha.witness) &&
                     alpha.witness.size() == alpha.value);
    }});
  }
  return tasks;
}

void characterize(const Graph& g, Recorder& rec, const Budget& budget,
                  int max_copy_order) {
  const int n = g.order();
  const DegreeProfile profile = degree_profile(g);
  for (int nh = 1; nh <= max_copy_order; ++nh) {
    const long long xi = xi_corona_structured(g, nh, budget).value;
    const Characterization c = xi_equals_order_characterization(g, nh, budget);
    rec.expect(nh_key(nh) + "order-iff", c.predicted == (xi == n),
               c.via + ", xi=" + std::to_string(xi));
    if (const auto e = eccentricity2_case(g, nh, budget)) {
      rec.expect(nh_key(nh) + "eccentricity-upper", xi <= e->upper,
                 "xi=" + std::to_string(xi) + " upper=" +
                     std::to_string(e->upper));
      if (e->exact) rec.expect_eq(nh_key(nh) + "eccentricity-exact", xi, *e->exact);
    }
    if (n >= 2 && profile.max_degree == n - 1) {
      rec.expect_eq(nh_key(nh) + "universal", xi,
                    universal_vertex_formula(g, nh));
    }
  }
}

std::vector<Task> characterization(const SuiteOptions& o) {
  std::vector<Task> tasks;
  auto graphs = random_instances(o);
  for (auto& named : named_examples()) graphs.push_back(named);
  graphs.emplace_back("C_7", family(Family::kCycle, {7}));
  for (auto& [name, graph] : graphs) {
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      characterize(g, rec, o.budget, 5);
    }});
  }
  const std::vector<std::pair<Graph, Graph>> joins = {
      {family(Family::kComplete, {1}), family(Family::kCycle, {4})},
      {family(Family::kComplete, {2}), family(Family::kComplete, {2})},
      {family(Family::kPath, {3}), family(Family::kEmpty, {2})},
      {family(Family::kCycle, {5}), family(Family::kEmpty, {3})},
  };
  for (std::size_t i = 0; i < joins.size(); ++i) {
    const auto [a, b] = joins[i];
    tasks.push_back({"join-" + pad(static_cast<int>(i)), join(a, b),
                     [=](const Graph& g, Recorder& rec) {
      for (int nh = 1; nh <= 3; ++nh) {
        rec.expect_eq(nh_key(nh) + "join",
                      static_cast<long long>(
                          xi_corona_structured(g, nh, o.budget).value),
                      join_formula(a, b, nh));
      }
    }});
  }
  return tasks;
}

std::vector<Task> linearity(const SuiteOptions& o) {
  const std::map<std::string, int> known_k = {
      {"fish", 6}, {"nonlinear", 7}, {"chorded-path", 4}, {"C_5", 5}};
  auto graphs = random_instances(o);
  for (auto& named : named_examples()) graphs.push_back(named);
  graphs.emplace_back("C_5", family(Family::kCycle, {5}));
  std::vector<Task> tasks;
  for (auto& [name, graph] : graphs) {
    const auto it = known_k.find(name);
    const std::optional<int> expected_k =
        it == known_k.end() ? std::nullopt : std::optional<int>(it->second);
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      const ThresholdResult t = k_threshold(g, o.budget);
      std::ostringstream d;
      d << "k=" << t.k << " threshold=" << t.threshold << " slope=" << t.slope
        << " alpha=" << t.alpha << " beta*=" << show(t.beta_star);
      rec.expect("k-bounds", t.within_bounds && t.used_beta_star, d.str());
      if (expected_k) rec.expect_eq("k", t.k, *expected_k);
      for (int nh = 1; nh <= t.threshold + 4; ++nh) {
        const EquidimResult r = xi_corona_structured(g, nh, o.budget);
        const long long line = static_cast<long long>(t.slope) * nh + t.k;
        if (nh <= t.threshold) {
          rec.expect(nh_key(nh) + "below-line", r.value <= line,
                     "xi=" + std::to_string(r.value) +
                         " line=" + std::to_string(line));
        } else {
          rec.expect_eq(nh_key(nh) + "on-line", static_cast<long long>(r.value),
                        line);
          rec.expect_eq(nh_key(nh) + "upper-size",
                        r.decomposition->upper.size(), t.beta);
        }
      }
    }});
  }
  return tasks;
}

std::vector<Task> oracle_equivalence(const SuiteOptions& o) {
  const std::vector<std::pair<std::string, Graph>> factors = {
      {"N_1", family(Family::kEmpty, {1})},
      {"N_2", family(Family::kEmpty, {2})},
      {"P_2", family(Family::kPath, {2})}};
  const std::vector<Graph> order3 = {family(Family::kPath, {3}),
                                     family(Family::kEmpty, {3}),
                                     family(Family::kComplete, {3})};
  std::vector<Task> tasks;
  for (int n = 1; n <= 4; ++n) {
    const std::vector<Graph> graphs = all_connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::string name = "n" + std::to_string(n) + "-g" +
                               pad(static_cast<int>(i));
      tasks.push_back({name, graphs[i], [=](const Graph& g, Recorder& rec) {
        const Graph ghat = empty_bisector_graph(g).graph();
        for (const auto& [hname, h] : factors) {
          const EquidimResult s = xi_corona_structured(g, h.order(), o.budget);
          const EquidimResult b = xi_corona_oracle(g, h, o.budget);
          rec.expect_eq(hname + "/equal", s.value, b.value);
          const CoronaGraph c = corona(g, h);
          rec.expect(hname + "/witness",
                     is_distance_equalizer(c.product(), s.witness) &&
                         s.witness.size() == s.value);
          const Decomposition& p = *b.decomposition;
          rec.expect(hname + "/projections",
                     is_vertex_cover(ghat, p.upper) &&
                         is_vertex_cover(ghat, p.lower) &&
                         (p.upper | p.lower) == VertexSet::full(g.order()));
        }
        std::vector<int> values;
        for (const Graph& h : order3) {
          values.push_back(xi_corona_oracle(g, h, o.budget).value);
        }
        rec.expect("order-only",
                   values[0] == values[1] && values[1] == values[2],
                   "P_3=" + std::to_string(values[0]) + " N_3=" +
                       std::to_string(values[1]) + " K_3=" +
                       std::to_string(values[2]));
      }});
    }
  }
  return tasks;
}

std::vector<Task> g_vs_ghat(const SuiteOptions& o) {
  auto graphs = random_instances(o);
  for (auto& named : named_examples()) graphs.push_back(named);
  std::vector<Task> tasks;
  for (auto& [name, graph] : graphs) {
    tasks.push_back({name, graph, [=](const Graph& g, Recorder& rec) {
      const int n = g.order();
      const Graph ghat = empty_bisector_graph(g).graph();
      const int beta = vertex_cover_number(ghat, o.budget).value;
      const int alpha = n - beta;
      if (const auto colors = two_coloring(g)) {
        bool complete_bipartite = true;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            const bool across = (*colors)[u] != (*colors)[v];
            complete_bipartite &= ghat.adjacent(u, v) == across;
          }
        }
        rec.expect("bipartite-complete", complete_bipartite);
      }
      if (n <= kMaxXiBoundOrder) {
        const int xi = xi_bruteforce(g, o.budget).value;
        rec.expect("xi-vs-beta", xi >= beta,
                   "xi=" + std::to_string(xi) + " beta=" + std::to_string(beta));
      }
      const int max_degree = degree_profile(g).max_degree;
      rec.expect("degree-vs-alpha", max_degree <= alpha,
                 "max degree=" + std::to_string(max_degree) +
                     " alpha=" + std::to_string(alpha));
      if (n != 2) {
        const int omega = clique_number(g, o.budget).value;
        rec.expect("clique-vs-alpha", omega <= alpha,
                   "omega=" + std::to_string(omega) +
                       " alpha=" + std::to_string(alpha));
      }
    }});
  }
  return tasks;
}

using SuiteFn = std::vector<Task> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"table1", table1},
      {"fig7", fig7},
      {"families", families},
      {"bounds", bounds},
      {"bipartite", bipartite},
      {"gallai", gallai},
      {"characterization", characterization},
      {"linearity", linearity},
      {"oracle-equivalence", oracle_equivalence},
      {"g-vs-ghat", g_vs_ghat},
  };
  return r;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["checks"] = report.checks.size();
  j["failures"] = report.failures();
  j["passed"] = report.passed();
  auto& results = j["results"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json r;
    r["instance"] = c.instance;
    r["check"] = c.check;
    r["passed"] = c.passed;
    r["detail"] = c.detail;
    if (!c.passed) r["counterexample"] = c.counterexample;
    results.push_back(std::move(r));
  }
  return j;
}

}  // namespace

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteReport report;
    report.suite = suite;
    report.seed = options.seed;
    report.checks = run_all(fn(options), options.threads);
    return report;
  }
  throw PreconditionError("unknown suite: " + std::string(name));
}

std::string report_json(const SuiteReport& report) {
  return to_json(report).dump(2);
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j.dump(2);
}

}  // namespace equidim
