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

#include "equidim/corona.hpp"

#include <vector>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

Graph build_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  std::vector<Edge> edges = g.edges();
  const std::vector<Edge> copy_edges = h.edges();
  for (int i = 0; i < ng; ++i) {
    const int offset = ng + i * nh;
    for (int j = 0; j < nh; ++j) edges.emplace_back(i, offset + j);
    for (const auto& [a, b] : copy_edges) edges.emplace_back(offset + a, offset + b);
  }
  return Graph(ng * (1 + nh), edges);
}

}  // namespace

CoronaGraph::CoronaGraph(Graph base, Graph copy)
    : base_(std::move(base)),
      copy_(std::move(copy)),
      product_(build_product(base_, copy_)) {}

VertexKind CoronaGraph::kind(int product_vertex) const {
  if (product_vertex < 0 || product_vertex >= product_.order()) {
    throw PreconditionError("product vertex out of range");
  }
  if (product_vertex < base_order()) {
    return {VertexKind::Tag::kBase, product_vertex, -1};
  }
  const int offset = product_vertex - base_order();
  return {VertexKind::Tag::kCopy, offset / copy_order(), offset % copy_order()};
}

VertexSet CoronaGraph::upper_projection(const VertexSet& s) const {
  VertexSet out(base_order());
  for (int v : s.elements()) {
    const VertexKind k = kind(v);
    if (!k.is_base()) out.insert(k.base);
  }
  return out;
}

VertexSet CoronaGraph::lower_projection(const VertexSet& s) const {
  VertexSet out(base_order());
  for (int v : s.elements()) {
    if (v < base_order()) out.insert(v);
  }
  return out;
}

VertexSet CoronaGraph::lift(const VertexSet& upper,
                            const VertexSet& lower) const {
  if (upper.universe() != base_order() || lower.universe() != base_order()) {
    throw PreconditionError("lift expects subsets of the base graph");
  }
  VertexSet out(product_.order());
  for (int i : upper.elements()) {
    for (int j = 0; j < copy_order(); ++j) out.insert(copy_vertex(i, j));
  }
  for (int v : lower.elements()) out.insert(v);
  return out;
}

CoronaGraph corona(const Graph& g, const Graph& h) { return CoronaGraph(g, h); }

}  // namespace equidim
