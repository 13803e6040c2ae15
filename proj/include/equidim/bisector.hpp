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

#ifndef EQUIDIM_BISECTOR_HPP_
#define EQUIDIM_BISECTOR_HPP_

#include "equidim/graph.hpp"
#include "equidim/vertex_set.hpp"

namespace equidim {

// B(u | v) = { w : d(w, u) = d(w, v) } for distinct u, v of a connected graph.
// Never contains u or v.
VertexSet bisector(const Graph& g, int u, int v);

// Ĝ: same vertex set (and labels) as the source graph, with {u, v} an edge
// iff B(u | v) is empty.
class EmptyBisectorGraph {
 public:
  explicit EmptyBisectorGraph(const Graph& source);

  const Graph& graph() const { return graph_; }
  int source_order() const { return graph_.order(); }

 private:
  Graph graph_;
};

// O(n^3) over the cached distance matrix. Throws PreconditionError on a
// disconnected graph.
EmptyBisectorGraph empty_bisector_graph(const Graph& g);

}  // namespace equidim

#endif  // EQUIDIM_BISECTOR_HPP_
