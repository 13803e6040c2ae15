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

#ifndef EQUIDIM_GRAPH_HPP_
#define EQUIDIM_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equidim/vertex_set.hpp"

namespace equidim {

using Edge = std::pair<int, int>;
using Label = std::int64_t;

// All-pairs shortest-path lengths of an unweighted graph. Unreachable pairs
// hold kUnreachable; no finite entry ever comes close to it, so d+1 and d+2
// never wrap for finite d.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;
  static constexpr Distance kUnreachable =
      std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  DistanceMatrix(int order, std::vector<Distance> entries);

  int order() const { return order_; }
  Distance at(int u, int v) const { return entries_[index(u, v)]; }
  bool finite(int u, int v) const { return at(u, v) != kUnreachable; }
  // True iff every entry is finite.
  bool all_finite() const;
  // Largest finite entry (0 for order <= 1).
  Distance max_finite() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v);
  }

  int order_ = 0;
  std::vector<Distance> entries_;
};

// Immutable simple undirected graph on vertices 0..order-1.
//
// Each vertex carries an external integer label (identity by default) that the
// I/O layer uses to round-trip user numbering. The distance matrix is computed
// on first use and shared between copies; concurrent readers are safe.
class Graph {
 public:
  // Builds the simple graph with the deduplicated edge set. Throws
  // PreconditionError on order < 1, out-of-range endpoints or self-loops.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::span<const Edge> edges, std::vector<Label> labels);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const;
  // Sorted ascending.
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  Label label(int v) const { return labels_.at(v); }
  std::span<const Label> labels() const { return labels_; }
  // Vertex carrying `label`, if any.
  std::optional<int> vertex_of(Label label) const;

  // Same edges, fresh identity labels.
  Graph relabeled_identity() const;
  Graph with_labels(std::vector<Label> labels) const;

  const DistanceMatrix& distances() const;
  DistanceMatrix::Distance distance(int u, int v) const {
    return distances().at(u, v);
  }

  // Neighbourhood bitmask. Requires order <= 64.
  std::uint64_t neighbor_mask(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  struct DistanceCache;

  std::vector<std::vector<int>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<DistanceCache> cache_;
};

// Equivalent to the Graph constructor.
Graph build_graph(int order, std::span<const Edge> edges);

// Exact unweighted shortest paths by one BFS per source.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

struct DegreeProfile {
  std::vector<int> degree;
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> eccentricity;
  int diameter = 0;
  int radius = 0;
};

// Throws PreconditionError on a disconnected graph (eccentricities would be
// infinite).
DegreeProfile degree_profile(const Graph& g);

// Disjoint union of g1 and g2 (g1 first) plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

// Vertex (a, b) sits at a * order(h) + b.
Graph cartesian_product(const Graph& g, const Graph& h);

// Subgraph induced by `keep`; vertices renumbered in increasing order and
// labels carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// A proper 2-colouring (colour 0 on the smallest vertex of each component),
// or nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace equidim

#endif  // EQUIDIM_GRAPH_HPP_
