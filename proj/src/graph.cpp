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

#include "equidim/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "equidim/errors.hpp"

namespace equidim {

struct Graph::DistanceCache {
  std::once_flag once;
  DistanceMatrix matrix;
};

DistanceMatrix::DistanceMatrix(int order, std::vector<Distance> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(order) * order) {
    throw PreconditionError("distance matrix has the wrong number of entries");
  }
}

bool DistanceMatrix::all_finite() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](Distance d) { return d == kUnreachable; });
}

DistanceMatrix::Distance DistanceMatrix::max_finite() const {
  Distance best = 0;
  for (Distance d : entries_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

namespace {

std::vector<Label> identity_labels(int order) {
  std::vector<Label> labels(std::max(order, 0));
  std::iota(labels.begin(), labels.end(), Label{0});
  return labels;
}

}  // namespace

Graph::Graph(int order, std::span<const Edge> edges)
    : Graph(order, edges, identity_labels(order)) {}

Graph::Graph(int order, std::span<const Edge> edges, std::vector<Label> labels)
    : labels_(std::move(labels)), cache_(std::make_shared<DistanceCache>()) {
  if (order < 1) throw PreconditionError("graph order must be at least 1");
  if (static_cast<int>(labels_.size()) != order) {
    throw PreconditionError("label count does not match graph order");
  }
  adjacency_.resize(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") outside 0.." +
                              std::to_string(order - 1));
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::vertex_of(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Graph Graph::relabeled_identity() const {
  return with_labels(identity_labels(order()));
}

Graph Graph::with_labels(std::vector<Label> labels) const {
  const std::vector<Edge> e = edges();
  return Graph(order(), e, std::move(labels));
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->once,
                 [this] { cache_->matrix = all_pairs_distances(*this); });
  return cache_->matrix;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (order() > 64) {
    throw PreconditionError("neighbor_mask needs order at most 64");
  }
  std::uint64_t mask = 0;
  for (int w : adjacency_.at(v)) mask |= std::uint64_t{1} << w;
  return mask;
}

Graph build_graph(int order, std::span<const Edge> edges) {
  return Graph(order, edges);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<DistanceMatrix::Distance> d(
      static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto* row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == g.order();
}

DegreeProfile degree_profile(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("eccentricities need a connected graph");
  }
  const int n = g.order();
  const DistanceMatrix& d = g.distances();
  DegreeProfile p;
  p.degree.resize(n);
  p.eccentricity.resize(n);
  for (int v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
    int ecc = 0;
    for (int w = 0; w < n; ++w) ecc = std::max(ecc, static_cast<int>(d.at(v, w)));
    p.eccentricity[v] = ecc;
  }
  p.max_degree = *std::max_element(p.degree.begin(), p.degree.end());
  p.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  return p;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  }
  return Graph(n1 + n2, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges, std::vector<Label>(g.labels().begin(),
                                                    g.labels().end()));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  std::vector<Edge> edges;
  for (int a = 0; a < ng; ++a) {
    for (const auto& [x, y] : h.edges()) edges.emplace_back(a * nh + x, a * nh + y);
  }
  for (const auto& [a, b] : g.edges()) {
    for (int x = 0; x < nh; ++x) edges.emplace_back(a * nh + x, b * nh + x);
  }
  return Graph(ng * nh, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const std::vector<int> kept = keep.elements();
  if (kept.empty()) throw PreconditionError("induced subgraph on no vertices");
  std::unordered_map<int, int> index;
  std::vector<Label> labels;
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
    index[kept[i]] = i;
    labels.push_back(g.label(kept[i]));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu != index.end() && iv != index.end()) {
      edges.emplace_back(iu->second, iv->second);
    }
  }
  return Graph(static_cast<int>(kept.size()), edges, std::move(labels));
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

}  // namespace equidim
