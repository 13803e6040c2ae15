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

#include "equidim/bisector.hpp"

#include <string>
#include <vector>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(what) + " needs a connected graph");
  }
}

bool empty_bisector(const DistanceMatrix& d, int n, int u, int v) {
  for (int w = 0; w < n; ++w) {
    if (d.at(w, u) == d.at(w, v)) return false;
  }
  return true;
}

Graph build(const Graph& source) {
  require_connected(source, "empty bisector graph");
  const int n = source.order();
  const DistanceMatrix& d = source.distances();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (empty_bisector(d, n, u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges,
               std::vector<Label>(source.labels().begin(), source.labels().end()));
}

}  // namespace

VertexSet bisector(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw PreconditionError("bisector vertex out of range");
  }
  if (u == v) throw PreconditionError("bisector needs two distinct vertices");
  require_connected(g, "bisector");
  const DistanceMatrix& d = g.distances();
  VertexSet out(n);
  for (int w = 0; w < n; ++w) {
    if (d.at(w, u) == d.at(w, v)) out.insert(w);
  }
  return out;
}

EmptyBisectorGraph::EmptyBisectorGraph(const Graph& source)
    : graph_(build(source)) {}

EmptyBisectorGraph empty_bisector_graph(const Graph& g) {
  return EmptyBisectorGraph(g);
}

}  // namespace equidim
