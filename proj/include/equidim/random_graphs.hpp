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

#ifndef EQUIDIM_RANDOM_GRAPHS_HPP_
#define EQUIDIM_RANDOM_GRAPHS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "equidim/graph.hpp"

namespace equidim {

// Only raw engine output is used, so samples are identical on every
// platform and standard library.
using Rng = std::mt19937_64;

struct CorpusOptions {
  int min_order = 2;
  int max_order = 10;
  // Edge probabilities, used round robin over the corpus.
  std::vector<double> densities = {0.2, 0.35, 0.5, 0.7};
};

// Erdős–Rényi sample G(order, density), resampled until connected.
Graph random_connected_graph(Rng& rng, int order, double density);

// `count` connected samples from one seed.
std::vector<Graph> random_corpus(std::uint64_t seed, int count,
                                 const CorpusOptions& options = {});

// Every connected graph on vertices 0..order-1 (labelled, not up to
// isomorphism), in increasing edge-subset order. order <= 6.
std::vector<Graph> all_connected_graphs(int order);

}  // namespace equidim

#endif  // EQUIDIM_RANDOM_GRAPHS_HPP_
