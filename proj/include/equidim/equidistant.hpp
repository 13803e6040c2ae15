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

#ifndef EQUIDIM_EQUIDISTANT_HPP_
#define EQUIDIM_EQUIDISTANT_HPP_

#include <optional>

#include "equidim/budget.hpp"
#include "equidim/graph.hpp"
#include "equidim/vertex_set.hpp"

namespace equidim {

// (X, Y) over V(G) with X ∪ Y = V(G).
struct ForwardPair {
  VertexSet x;
  VertexSet y;
};

// Corona-side split of an equalizer S of G ⊙ H: `upper` holds the base
// vertices whose copy lies inside S, `lower` = S ∩ V(G).
struct Decomposition {
  VertexSet upper;
  VertexSet lower;
};

struct EquidimResult {
  bool infinite = false;  // only ever set by xi_total
  int value = 0;
  VertexSet witness;  // in the product graph for corona results
  std::optional<Decomposition> decomposition;
  std::optional<int> copy_order;
};

// Every pair u != v outside s has some w in s with d(w,u) = d(w,v).
// Throws PreconditionError on a disconnected graph.
bool is_distance_equalizer(const Graph& g, const VertexSet& s);

// ξ(g) by subset scan in increasing size, lexicographic within a size.
EquidimResult xi_bruteforce(const Graph& g, const Budget& budget = {});

// ξ_t(g): infinite iff the empty bisector graph has an edge.
EquidimResult xi_total(const Graph& g, const Budget& budget = {});

// Every (u, v) in (X∖Y) × (Y∖X) has a w with d(w,u) = d(w,v) + 1.
// Throws PreconditionError unless X ∪ Y = V(g).
bool forward_equalized(const Graph& g, const ForwardPair& pair);

// Vertices x of `upper` for which some v outside `upper` has no w with
// d(w,x) = d(w,v) + 1: exactly what any forward-equalized (upper, L) with
// L ⊇ V∖upper must also put into L.
VertexSet mandatory_set(const Graph& g, const VertexSet& upper);

// ξ(G ⊙ H) for any H of order copy_order, without building the product.
//
// Walks the vertex covers U of Ĝ by size then lexicographically; for each U
// the cheapest lower part is (V∖U) ∪ T with T the lexicographically least
// minimum cover of Ĝ[U] containing mandatory_set(g, U). Stops once
// |U|·copy_order + n - |U| reaches the incumbent. Ties keep the smallest
// |U|, then the least U, then the least lower part.
EquidimResult xi_corona_structured(const Graph& g, int copy_order,
                                   const Budget& budget = {});

// ξ(G ⊙ H) by xi_bruteforce on the explicit product.
EquidimResult xi_corona_oracle(const Graph& g, const Graph& h,
                               const Budget& budget = {});

struct BetaStarResult {
  int value = 0;
  VertexSet intersection;  // X ∩ Y of the recorded pair
  ForwardPair pair;
};

// β*(G): least |X ∩ Y| over forward-equalized pairs of vertex covers of Ĝ.
BetaStarResult beta_star(const Graph& g, const Budget& budget = {});

struct ThresholdResult {
  int k = 0;
  int threshold = 0;
  int slope = 0;  // β(Ĝ)
  int alpha = 0;  // α(Ĝ)
  int beta = 0;   // β(Ĝ)
  std::optional<int> beta_star;  // empty when it ran out of budget
  bool used_beta_star = false;   // false: threshold fell back to α(Ĝ)
  bool within_bounds = false;    // α(Ĝ) + β*(G) <= k <= n(G)
};

// Beyond `threshold`, ξ(G ⊙ H) = slope · n(H) + k.
ThresholdResult k_threshold(const Graph& g, const Budget& budget = {});

}  // namespace equidim

#endif  // EQUIDIM_EQUIDISTANT_HPP_
