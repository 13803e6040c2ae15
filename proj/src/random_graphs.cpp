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

#include "equidim/random_graphs.hpp"

#include "equidim/errors.hpp"

namespace equidim {

namespace {

// Uniform in [0, 1) from the top 53 bits.
double unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_connected_graph(Rng& rng, int order, double density) {
  if (order < 1) throw PreconditionError("order must be at least 1");
  if (!(density > 0.0) || density > 1.0) {
    throw PreconditionError("density must be in (0, 1]");
  }
  while (true) {
    std::vector<Edge> edges;
    for (int u = 0; u < order; ++u) {
      for (int v = u + 1; v < order; ++v) {
        if (unit(rng) < density) edges.emplace_back(u, v);
      }
    }
    Graph g(order, edges);
    if (is_connected(g)) return g;
  }
}

std::vector<Graph> random_corpus(std::uint64_t seed, int count,
                                 const CorpusOptions& options) {
  if (options.min_order < 1 || options.max_order < options.min_order ||
      options.densities.empty()) {
    throw PreconditionError("invalid corpus options");
  }
  Rng rng(seed);
  const auto span =
      static_cast<std::uint64_t>(options.max_order - options.min_order + 1);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int order = options.min_order + static_cast<int>(rng() % span);
    const double density = options.densities[i % options.densities.size()];
    out.push_back(random_connected_graph(rng, order, density));
  }
  return out;
}

std::vector<Graph> all_connected_graphs(int order) {
  if (order < 1 || order > 6) {
    throw PreconditionError("labelled enumeration supports orders 1..6");
  }
  std::vector<Edge> slots;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (m >> i & 1) edges.push_back(slots[i]);
    }
    Graph g(order, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace equidim
