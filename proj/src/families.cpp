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

#include "equidim/families.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "equidim/corona.hpp"
#include "equidim/errors.hpp"

namespace equidim {

namespace {

struct NamedFamily {
  Family family;
  std::string_view name;
  int min_params;
  int max_params;  // -1: unbounded
};

constexpr std::array<NamedFamily, 15> kFamilies = {{
    {Family::kEmpty, "empty", 1, 1},
    {Family::kPath, "path", 1, 1},
    {Family::kCycle, "cycle", 1, 1},
    {Family::kWheel, "wheel", 1, 1},
    {Family::kComplete, "complete", 1, 1},
    {Family::kCompleteBipartite, "bipartite", 2, 2},
    {Family::kCompleteMultipartite, "multipartite", 3, -1},
    {Family::kBistar, "bistar", 2, 2},
    {Family::kHypercube, "hypercube", 1, 1},
    {Family::kFish, "fish", 0, 0},
    {Family::kChordedPath, "chorded-path", 0, 0},
    {Family::kNonlinear, "nonlinear", 0, 0},
    {Family::kK5CoronaN1, "k5-corona-n1", 0, 0},
    {Family::kForwardExample, "forward-example", 0, 0},
    {Family::kC3CoronaP2, "c3-corona-p2", 0, 0},
}};

const NamedFamily& entry(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e;
  }
  throw PreconditionError("unknown family");
}

// Figure graphs are written with the figures' 1-based vertex numbers.
Graph one_based(int order, std::initializer_list<Edge> edges) {
  std::vector<Edge> shifted;
  for (const auto& [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
  std::vector<Label> labels(order);
  std::iota(labels.begin(), labels.end(), Label{1});
  return Graph(order, shifted, std::move(labels));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph multipartite(const std::vector<int>& parts) {
  std::vector<int> block;
  for (int b = 0; b < static_cast<int>(parts.size()); ++b) {
    block.insert(block.end(), parts[b], b);
  }
  const int n = static_cast<int>(block.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (block[u] != block[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph bistar(int r, int s) {
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < r; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < s; ++i) edges.emplace_back(1, 2 + r + i);
  return Graph(r + s + 2, edges);
}

Graph hypercube(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, edges);
}

void require(bool ok, const FamilySpec& spec, std::string_view why) {
  if (!ok) {
    throw PreconditionError("invalid parameters for " +
                            std::string(family_name(spec.family)) + ": " +
                            std::string(why));
  }
}

}  // namespace

std::string_view family_name(Family f) { return entry(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& e : kFamilies) {
    if (e.name == name) return e.family;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : kFamilies) out.push_back(e.family);
  return out;
}

std::string describe(const FamilySpec& spec) {
  const auto& p = spec.params;
  std::ostringstream out;
  switch (spec.family) {
    case Family::kEmpty: out << "N_" << p.at(0); break;
    case Family::kPath: out << "P_" << p.at(0); break;
    case Family::kCycle: out << "C_" << p.at(0); break;
    case Family::kWheel: out << "W_" << p.at(0); break;
    case Family::kComplete: out << "K_" << p.at(0); break;
    case Family::kCompleteBipartite:
      out << "K_{" << p.at(0) << "," << p.at(1) << "}";
      break;
    case Family::kCompleteMultipartite: {
      out << "K_{";
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
      out << "}";
      break;
    }
    case Family::kBistar:
      out << "K_2(" << p.at(0) << "," << p.at(1) << ")";
      break;
    case Family::kHypercube: out << "Q_" << p.at(0); break;
    default: out << family_name(spec.family); break;
  }
  return out.str();
}

void validate(const FamilySpec& spec) {
  const NamedFamily& e = entry(spec.family);
  const int count = static_cast<int>(spec.params.size());
  require(count >= e.min_params && (e.max_params < 0 || count <= e.max_params),
          spec, "wrong number of parameters");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kEmpty:
    case Family::kPath:
    case Family::kComplete:
      require(p[0] >= 1, spec, "order must be at least 1");
      break;
    case Family::kCycle:
      require(p[0] >= 3, spec, "a cycle needs at least 3 vertices");
      break;
    case Family::kWheel:
      require(p[0] >= 4, spec, "a wheel needs at least 4 vertices");
      break;
    case Family::kCompleteBipartite:
    case Family::kBistar:
      require(p[0] >= 1, spec, "r must be at least 1");
      require(p[1] >= p[0], spec, "s must be at least r");
      break;
    case Family::kCompleteMultipartite:
      require(count >= 3, spec, "need at least 3 parts");
      for (int part : p) require(part >= 1, spec, "every part needs a vertex");
      break;
    case Family::kHypercube:
      require(p[0] >= 1 && p[0] <= 16, spec, "dimension must be in 1..16");
      break;
    default:
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kEmpty: return Graph(p[0], std::vector<Edge>{});
    case Family::kPath: return path(p[0]);
    case Family::kCycle: return cycle(p[0]);
    case Family::kWheel: return join(complete(1), cycle(p[0] - 1));
    case Family::kComplete: return complete(p[0]);
    case Family::kCompleteBipartite: return multipartite({p[0], p[1]});
    case Family::kCompleteMultipartite: return multipartite(p);
    case Family::kBistar: return bistar(p[0], p[1]);
    case Family::kHypercube: return hypercube(p[0]);
    // Figure: fish graph and its two-edge empty bisector graph.
    case Family::kFish:
      return one_based(6, {{1, 3}, {3, 2}, {2, 4}, {4, 1},
                           {1, 2}, {3, 5}, {5, 6}, {6, 3}});
    // Figure: non-bipartite graph attaining the β*-lower bound, ξ = 4 n(H) + 4.
    case Family::kChordedPath:
      return one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                           {5, 6}, {6, 7}, {3, 5}});
    // Figure: graph whose ξ(G ⊙ H) leaves its line below n(H) = 3.
    case Family::kNonlinear:
      return one_based(8, {{1, 2}, {2, 3}, {1, 3}, {1, 4},
                           {2, 5}, {2, 6}, {3, 7}, {3, 8}});
    // Figure: K_5 ⊙ N_1, clique 1..5, pendant i+5 on vertex i.
    case Family::kK5CoronaN1: {
      const Graph g = corona(complete(5), Graph(1, std::vector<Edge>{})).product();
      std::vector<Label> labels(10);
      std::iota(labels.begin(), labels.end(), Label{1});
      return g.with_labels(std::move(labels));
    }
    // Figure: forward-equalized pair illustration.
    case Family::kForwardExample:
      return one_based(6, {{3, 6}, {3, 1}, {3, 5}, {3, 2},
                           {4, 2}, {4, 1}, {2, 1}, {4, 3}});
    // Figure: C_3 ⊙ P_2 with copies {4,5}, {6,7}, {8,9}.
    case Family::kC3CoronaP2: {
      const Graph g = corona(cycle(3), path(2)).product();
      std::vector<Label> labels(9);
      std::iota(labels.begin(), labels.end(), Label{1});
      return g.with_labels(std::move(labels));
    }
  }
  throw PreconditionError("unknown family");
}

}  // namespace equidim
