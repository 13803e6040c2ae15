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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "equidim/bisector.hpp"
#include "equidim/budget.hpp"
#include "equidim/cover.hpp"
#include "equidim/equidistant.hpp"
#include "equidim/errors.hpp"
#include "equidim/families.hpp"
#include "equidim/graph.hpp"
#include "equidim/graph_io.hpp"
#include "equidim/theory.hpp"
#include "equidim/verify.hpp"

namespace equidim::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { kHuman, kJson, kCsv };

constexpr int kMaxCopyOrder = 1000000;

struct Context {
  std::istream& in;
  std::ostream& out;
  Format format = Format::kHuman;
  Budget budget;
};

Graph load(const Context& ctx, const std::string& path) {
  if (path == "-") return read_edge_list(ctx.in);
  return load_edge_list(path);
}

std::vector<Label> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<Label> out;
  for (int v : s.elements()) out.push_back(g.label(v));
  return out;
}

std::string braces(const std::vector<Label>& labels) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    s << (i ? ", " : "") << labels[i];
  }
  s << "}";
  return s.str();
}

std::string braces(const Graph& g, const VertexSet& s) {
  return braces(labels_of(g, s));
}

int vertex_by_label(const Graph& g, Label label) {
  const std::optional<int> v = g.vertex_of(label);
  if (!v) throw PreconditionError("no vertex labelled " + std::to_string(label));
  return *v;
}

// "1,2,3" (spaces and braces tolerated) as a vertex set of g.
VertexSet parse_label_set(const Graph& g, std::string text) {
  std::replace_if(text.begin(), text.end(),
                  [](char c) { return c == ',' || c == '{' || c == '}'; }, ' ');
  std::istringstream in(text);
  VertexSet s(g.order());
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    Label label = 0;
    try {
      label = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw PreconditionError("bad vertex label '" + token + "'");
    }
    s.insert(vertex_by_label(g, label));
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

void reject_csv(const Context& ctx, const std::string& command) {
  if (ctx.format == Format::kCsv) {
    throw PreconditionError("csv output is not available for " + command);
  }
}

json cover_json(const Graph& g, const CoverResult& r) {
  return {{"value", r.value}, {"witness", labels_of(g, r.witness)}};
}

json decomposition_json(const Graph& g, const EquidimResult& r) {
  json j;
  j["upper"] = labels_of(g, r.decomposition->upper);
  j["lower"] = labels_of(g, r.decomposition->lower);
  return j;
}

// ---------------------------------------------------------------------------

int cmd_gen(const Context& ctx, const std::string& name,
            const std::vector<int>& params, const std::string& output) {
  const std::optional<Family> f = family_from_name(name);
  if (!f) {
    std::string known;
    for (Family x : all_families()) {
      known += (known.empty() ? "" : ", ") + std::string(family_name(x));
    }
    throw PreconditionError("unknown family '" + name + "' (known: " + known +
                            ")");
  }
  const Graph g = generate({*f, params});
  if (output.empty() || output == "-") {
    write_edge_list(ctx.out, g);
  } else {
    std::ofstream file(output);
    if (!file) throw Error("cannot write " + output);
    write_edge_list(file, g);
  }
  return kOk;
}

int cmd_dist(const Context& ctx, const Graph& g) {
  const DistanceMatrix& d = g.distances();
  const int n = g.order();
  auto cell = [&](int u, int v) {
    return d.finite(u, v) ? std::to_string(d.at(u, v)) : std::string("inf");
  };
  if (ctx.format == Format::kJson) {
    json rows = json::array();
    for (int u = 0; u < n; ++u) {
      json row = json::array();
      for (int v = 0; v < n; ++v) {
        row.push_back(d.finite(u, v) ? json(d.at(u, v)) : json(nullptr));
      }
      rows.push_back(std::move(row));
    }
    emit(ctx, {{"labels", g.labels()}, {"distances", rows}});
    return kOk;
  }
  const char sep = ctx.format == Format::kCsv ? ',' : '\t';
  ctx.out << (ctx.format == Format::kCsv ? "vertex" : "");
  for (int v = 0; v < n; ++v) ctx.out << sep << g.label(v);
  ctx.out << "\n";
  for (int u = 0; u < n; ++u) {
    ctx.out << g.label(u);
    for (int v = 0; v < n; ++v) ctx.out << sep << cell(u, v);
    ctx.out << "\n";
  }
  return kOk;
}

int cmd_bisector(const Context& ctx, const Graph& g, Label u, Label v) {
  reject_csv(ctx, "bisector");
  const VertexSet b = bisector(g, vertex_by_label(g, u), vertex_by_label(g, v));
  if (ctx.format == Format::kJson) {
    emit(ctx, {{"u", u}, {"v", v}, {"bisector", labels_of(g, b)}});
  } else {
    ctx.out << "B(" << u << " | " << v << ") = " << braces(g, b) << "\n";
  }
  return kOk;
}

int cmd_empty_bisector(const Context& ctx, const Graph& g) {
  reject_csv(ctx, "empty-bisector");
  const Graph ghat = empty_bisector_graph(g).graph();
  if (ctx.format == Format::kJson) {
    json edges = json::array();
    for (const auto& [a, b] : ghat.edges()) {
      edges.push_back({ghat.label(a), ghat.label(b)});
    }
    emit(ctx, {{"order", ghat.order()}, {"edges", edges}});
  } else {
    write_edge_list(ctx.out, ghat);
  }
  return kOk;
}

int cmd_cover_kind(const Context& ctx, const Graph& g, const std::string& kind) {
  reject_csv(ctx, kind);
  CoverResult r;
  std::string what;
  if (kind == "cover") {
    r = vertex_cover_number(g, ctx.budget);
    what = "vertex cover number";
  } else if (kind == "alpha") {
    r = independence_number(g, ctx.budget);
    what = "independence number";
  } else {
    r = clique_number(g, ctx.budget);
    what = "clique number";
  }
  if (ctx.format == Format::kJson) {
    emit(ctx, cover_json(g, r));
  } else {
    ctx.out << what << ": " << r.value << "\nwitness: " << braces(g, r.witness)
            << "\n";
  }
  return kOk;
}

int cmd_xi(const Context& ctx, const Graph& g, bool total) {
  reject_csv(ctx, total ? "xi-total" : "xi");
  const EquidimResult r =
      total ? xi_total(g, ctx.budget) : xi_bruteforce(g, ctx.budget);
  if (ctx.format == Format::kJson) {
    json j;
    j["infinite"] = r.infinite;
    j["value"] = r.infinite ? json(nullptr) : json(r.value);
    j["witness"] = labels_of(g, r.witness);
    emit(ctx, j);
  } else if (r.infinite) {
    ctx.out << "xi_t = infinite (the empty bisector graph has edges)\n";
  } else {
    ctx.out << (total ? "xi_t = " : "xi = ") << r.value
            << "\nwitness: " << braces(g, r.witness) << "\n";
  }
  return kOk;
}

int cmd_xi_corona(const Context& ctx, const Graph& g, int nh,
                  const std::string& oracle_path) {
  reject_csv(ctx, "xi-corona");
  EquidimResult r;
  bool oracle = !oracle_path.empty();
  if (oracle) {
    const Graph h = load(ctx, oracle_path);
    if (nh != 0 && nh != h.order()) {
      throw PreconditionError("--nh disagrees with the order of the oracle graph");
    }
    r = xi_corona_oracle(g, h, ctx.budget);
  } else {
    if (nh == 0) throw PreconditionError("xi-corona needs --nh or --oracle");
    r = xi_corona_structured(g, nh, ctx.budget);
  }
  if (ctx.format == Format::kJson) {
    json j;
    j["method"] = oracle ? "oracle" : "structured";
    j["copy_order"] = *r.copy_order;
    j["value"] = r.value;
    j["decomposition"] = decomposition_json(g, r);
    j["witness"] = r.witness.elements();
    emit(ctx, j);
  } else {
    ctx.out << "xi(G o H) = " << r.value << "  (n(H) = " << *r.copy_order
            << ", " << (oracle ? "oracle" : "structured") << ")\n"
            << "U = " << braces(g, r.decomposition->upper) << "\n"
            << "L = " << braces(g, r.decomposition->lower) << "\n";
  }
  return kOk;
}

int cmd_beta_star(const Context& ctx, const Graph& g) {
  reject_csv(ctx, "beta-star");
  const BetaStarResult r = beta_star(g, ctx.budget);
  if (ctx.format == Format::kJson) {
    emit(ctx, {{"value", r.value},
               {"intersection", labels_of(g, r.intersection)},
               {"x", labels_of(g, r.pair.x)},
               {"y", labels_of(g, r.pair.y)}});
  } else {
    ctx.out << "beta* = " << r.value << "\nX = " << braces(g, r.pair.x)
            << "\nY = " << braces(g, r.pair.y)
            << "\nX & Y = " << braces(g, r.intersection) << "\n";
  }
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      std::size_t a_used = 0;
      std::size_t b_used = 0;
      const std::string a_text = text.substr(0, dots);
      const std::string b_text = text.substr(dots + 2);
      const int a = std::stoi(a_text, &a_used);
      const int b = std::stoi(b_text, &b_used);
      if (a_used == a_text.size() && b_used == b_text.size() && a >= 1 &&
          a <= b && b <= kMaxCopyOrder) {
        return {a, b};
      }
    }
  } catch (const std::exception&) {
  }
  throw PreconditionError("--sweep expects a..b with 1 <= a <= b");
}

int cmd_k_threshold(const Context& ctx, const Graph& g,
                    const std::string& sweep) {
  const ThresholdResult t = k_threshold(g, ctx.budget);
  if (!sweep.empty()) {
    const auto [from, to] = parse_range(sweep);
    json rows = json::array();
    if (ctx.format != Format::kJson) ctx.out << "nh,xi,line,lower,upper\n";
    for (int nh = from; nh <= to; ++nh) {
      const BoundsReport b = bounds_report(g, nh, ctx.budget);
      const long long line = static_cast<long long>(t.slope) * nh + t.k;
      if (ctx.format == Format::kJson) {
        rows.push_back({{"nh", nh}, {"xi", *b.exact}, {"line", line},
                        {"lower", b.lower ? json(*b.lower) : json(nullptr)},
                        {"upper", *b.upper}});
      } else {
        ctx.out << nh << "," << *b.exact << "," << line << ","
                << (b.lower ? std::to_string(*b.lower) : "") << "," << *b.upper
                << "\n";
      }
    }
    if (ctx.format == Format::kJson) emit(ctx, rows);
    return kOk;
  }
  reject_csv(ctx, "k-threshold without --sweep");
  if (ctx.format == Format::kJson) {
    emit(ctx, {{"k", t.k},
               {"threshold", t.threshold},
               {"slope", t.slope},
               {"alpha", t.alpha},
               {"beta", t.beta},
               {"beta_star", t.beta_star ? json(*t.beta_star) : json(nullptr)},
               {"threshold_bound", t.used_beta_star ? "beta-star" : "alpha"},
               {"within_bounds", t.within_bounds}});
  } else {
    ctx.out << "xi(G o H) = " << t.slope << " n(H) + " << t.k
            << " for n(H) > " << t.threshold << "\n"
            << "alpha(Ghat) = " << t.alpha << ", beta(Ghat) = " << t.beta
            << ", beta* = "
            << (t.beta_star ? std::to_string(*t.beta_star) : "out of budget")
            << "\nthreshold from "
            << (t.used_beta_star ? "min(alpha, beta - beta* + 1)" : "alpha")
            << "; bounds on k " << (t.within_bounds ? "hold" : "VIOLATED")
            << "\n";
  }
  return kOk;
}

int cmd_forward_check(const Context& ctx, const Graph& g, const std::string& x,
                      const std::string& y) {
  reject_csv(ctx, "forward-check");
  const ForwardPair pair{parse_label_set(g, x), parse_label_set(g, y)};
  const bool ok = forward_equalized(g, pair);
  if (ctx.format == Format::kJson) {
    emit(ctx, {{"x", labels_of(g, pair.x)},
               {"y", labels_of(g, pair.y)},
               {"forward_equalized", ok}});
  } else {
    ctx.out << "(" << braces(g, pair.x) << ", " << braces(g, pair.y) << ") is "
            << (ok ? "" : "not ") << "forward-equalized\n";
  }
  return kOk;
}

int cmd_bounds(const Context& ctx, const Graph& g, int nh) {
  reject_csv(ctx, "bounds");
  const BoundsReport b = bounds_report(g, nh, ctx.budget);
  auto opt = [](const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
  };
  if (ctx.format == Format::kJson) {
    emit(ctx, {{"copy_order", nh},
               {"floor", b.floor},
               {"lower_weak", opt(b.lower_weak)},
               {"lower", opt(b.lower)},
               {"exact", opt(b.exact)},
               {"upper", opt(b.upper)},
               {"upper_via_xi", opt(b.upper_via_xi)},
               {"chain_holds", b.chain_holds()},
               {"gaps", b.gaps}});
    return kOk;
  }
  auto text = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  ctx.out << "n(H) = " << nh << "\n"
          << "floor        " << b.floor << "\n"
          << "lower (weak) " << text(b.lower_weak) << "\n"
          << "lower        " << text(b.lower) << "\n"
          << "exact        " << text(b.exact) << "\n"
          << "upper        " << text(b.upper) << "\n"
          << "upper via xi " << text(b.upper_via_xi) << "\n";
  for (const auto& gap : b.gaps) ctx.out << "gap: " << gap << "\n";
  return kOk;
}

int cmd_verify(const Context& ctx, const std::string& suite,
               std::uint64_t seed, int threads) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  SuiteOptions options;
  options.seed = seed;
  options.threads = threads;
  options.budget = ctx.budget;
  std::vector<SuiteReport> reports;
  int failures = 0;
  for (const auto& name : names) {
    reports.push_back(run_suite(name, options));
    failures += reports.back().failures();
  }
  if (ctx.format == Format::kJson) {
    ctx.out << (reports.size() == 1 ? report_json(reports.front())
                                    : report_json(reports))
            << "\n";
  } else if (ctx.format == Format::kCsv) {
    ctx.out << "suite,instance,check,passed,detail\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        ctx.out << r.suite << "," << csv_field(c.instance) << ","
                << csv_field(c.check) << "," << (c.passed ? "true" : "false")
                << "," << csv_field(c.detail) << "\n";
      }
    }
  } else {
    for (const auto& r : reports) {
      ctx.out << r.suite << ": " << r.checks.size() << " checks, "
              << r.failures() << " failures\n";
      for (const auto& c : r.checks) {
        if (c.passed) continue;
        ctx.out << "  FAIL " << c.instance << " " << c.check << ": " << c.detail
                << "\n  counterexample:\n";
        std::istringstream lines(c.counterexample);
        for (std::string line; std::getline(lines, line);) {
          ctx.out << "    " << line << "\n";
        }
      }
    }
  }
  return failures == 0 ? kOk : kSuiteFailures;
}

int default_threads() {
  if (const char* env = std::getenv("EQUIDIM_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Equidistant dimension of graphs and corona products."};
  app.name("equidim");
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false;
  std::string format = "human";
  int budget_n = 0;
  app.add_flag("--json", json_flag, "Shorthand for --format json");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--budget", budget_n,
                 "Lower the exact-search order caps to N (never raises them)")
      ->check(CLI::PositiveNumber);

  std::string graph_path;
  auto with_graph = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("graph", graph_path, "Edge-list file, or - for stdin")
        ->required();
    return sub;
  };

  std::string family;
  std::vector<int> params;
  std::string output;
  CLI::App* gen = app.add_subcommand("gen", "Write a named graph as an edge list");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  CLI::App* dist = with_graph("dist", "All-pairs distance matrix");
  Label bu = 0;
  Label bv = 0;
  CLI::App* bis = with_graph("bisector", "Vertices equidistant from u and v");
  bis->add_option("u", bu, "Vertex label")->required();
  bis->add_option("v", bv, "Vertex label")->required();
  CLI::App* ebg = with_graph("empty-bisector", "Empty bisector graph");
  CLI::App* cover = with_graph("cover", "Vertex cover number");
  CLI::App* alpha = with_graph("alpha", "Independence number");
  CLI::App* omega = with_graph("omega", "Clique number");
  CLI::App* xi = with_graph("xi", "Equidistant dimension (subset scan)");
  CLI::App* xit = with_graph("xi-total", "Total equidistant dimension");

  int nh = 0;
  std::string oracle;
  CLI::App* xic = with_graph("xi-corona", "Equidistant dimension of G o H");
  xic->add_option("--nh", nh, "Order of H")
      ->check(CLI::Range(1, kMaxCopyOrder));
  xic->add_option("--oracle", oracle,
                  "Brute force on the product with this H edge list");

  CLI::App* bstar = with_graph("beta-star", "Least overlap of a forward pair");
  std::string sweep;
  CLI::App* kth = with_graph("k-threshold", "Eventual slope, intercept and threshold");
  kth->add_option("--sweep", sweep, "Tabulate n(H) over a..b as CSV");

  std::string fx;
  std::string fy;
  CLI::App* fwd = with_graph("forward-check", "Forward-equalized pair test");
  fwd->add_option("--x", fx, "Comma-separated labels")->required();
  fwd->add_option("--y", fy, "Comma-separated labels")->required();

  int bounds_nh = 0;
  CLI::App* bnd = with_graph("bounds", "Bounds on xi(G o H)");
  bnd->add_option("--nh", bounds_nh, "Order of H")
      ->required()
      ->check(CLI::Range(1, kMaxCopyOrder));

  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  CLI::App* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("suite", suite, "Suite name or all");
  ver->add_option("--seed", seed, "Random corpus seed");
  ver->add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
      return s->get_name() == args.front();
    });
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
      return kError;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  Context ctx{in, out};
  ctx.format = json_flag ? Format::kJson
               : format == "json" ? Format::kJson
               : format == "csv"  ? Format::kCsv
                                  : Format::kHuman;
  if (budget_n > 0) ctx.budget = Budget::capped(budget_n);

  try {
    if (gen->parsed()) return cmd_gen(ctx, family, params, output);
    if (ver->parsed()) {
      if (suite != "all" &&
          std::find(suite_names().begin(), suite_names().end(), suite) ==
              suite_names().end()) {
        throw PreconditionError("unknown suite '" + suite + "'");
      }
      return cmd_verify(ctx, suite, seed, threads > 0 ? threads : default_threads());
    }
    const Graph g = load(ctx, graph_path);
    if (dist->parsed()) return cmd_dist(ctx, g);
    if (bis->parsed()) return cmd_bisector(ctx, g, bu, bv);
    if (ebg->parsed()) return cmd_empty_bisector(ctx, g);
    if (cover->parsed()) return cmd_cover_kind(ctx, g, "cover");
    if (alpha->parsed()) return cmd_cover_kind(ctx, g, "alpha");
    if (omega->parsed()) return cmd_cover_kind(ctx, g, "omega");
    if (xi->parsed()) return cmd_xi(ctx, g, false);
    if (xit->parsed()) return cmd_xi(ctx, g, true);
    if (xic->parsed()) return cmd_xi_corona(ctx, g, nh, oracle);
    if (bstar->parsed()) return cmd_beta_star(ctx, g);
    if (kth->parsed()) return cmd_k_threshold(ctx, g, sweep);
    if (fwd->parsed()) return cmd_forward_check(ctx, g, fx, fy);
    if (bnd->parsed()) return cmd_bounds(ctx, g, bounds_nh);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace equidim::cli
