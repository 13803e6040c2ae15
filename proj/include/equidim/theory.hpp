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

#ifndef EQUIDIM_THEORY_HPP_
#define EQUIDIM_THEORY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "equidim/budget.hpp"
#include "equidim/families.hpp"
#include "equidim/graph.hpp"

namespace equidim {

// Bounds on ξ(G ⊙ H) for n(H) = copy_order. A component that ran out of
// budget is left empty and named in `gaps`.
struct BoundsReport {
  int copy_order = 0;
  std::optional<int> lower;       // β(Ĝ)·n(H) + α(Ĝ) + β*(G)
  std::optional<int> lower_weak;  // β(Ĝ)·n(H) + α(Ĝ)
  int floor = 0;                  // n(G)
  std::optional<int> upper;       // β(Ĝ)·n(H) + n(G)
  std::optional<int> upper_via_xi;  // ξ(G)·n(H) + n(G), small graphs only
  std::optional<int> exact;
  std::vector<std::string> gaps;

  // floor <= lower_weak, floor <= exact and lower_weak <= lower <= exact <= upper <= upper_via_xi
  // over whichever values are present.
  bool chain_holds() const;
};

// ξ(G) feeds upper_via_xi only when n(G) <= kMaxXiBoundOrder.
inline constexpr int kMaxXiBoundOrder = 14;

BoundsReport bounds_report(const Graph& g, int copy_order,
                           const Budget& budget = {});

struct FormulaValue {
  FamilySpec family;
  int copy_order = 0;
  long long value = 0;
  std::string clause;
  // Bistar only: the published value r·n(H) + s disagrees with the
  // bipartite formula on the order r + s + 2 bistar, which gives
  // (r + 1)·n(H) + (s + 1). `value` keeps the published one.
  bool flagged = false;
  std::optional<long long> bipartite_value;
};

// Closed form of ξ(G ⊙ H) for complete, complete bipartite, bistar,
// complete multipartite, wheel, hypercube, path and cycle graphs.
// Throws PreconditionError for any other family or parameters outside the
// formula's range (for instance K_1 or P_1).
FormulaValue closed_formula(const FamilySpec& family, int copy_order);

struct Characterization {
  bool predicted = false;  // ξ(G ⊙ H) = n(G)
  std::string via;
};

// ξ(G ⊙ H) = n(G) iff β(Ĝ) = 0, or n(H) = 1 and β*(G) = 0.
Characterization xi_equals_order_characterization(const Graph& g,
                                                  int copy_order,
                                                  const Budget& budget = {});

// |B|·n(H) + |A| for the colour classes |A| >= |B| of a connected bipartite
// graph. Throws PreconditionError otherwise.
long long bipartite_formula(const Graph& g, int copy_order);

// n(g1) + n(g2) for ξ((g1 + g2) ⊙ H). Throws PreconditionError when both
// graphs have an isolated vertex.
long long join_formula(const Graph& g1, const Graph& g2, int copy_order);

struct EccentricityBound {
  int vertex = 0;  // a minimiser of the bound among vertices with ε <= 2
  long long upper = 0;  // (n - deg u)·n(H) + deg u
  // β(Ĝ)·n(H) + α(Ĝ) when some ε <= 2 vertex has degree α(Ĝ).
  std::optional<long long> exact;
};

// Empty when every vertex has eccentricity above 2.
std::optional<EccentricityBound> eccentricity2_case(const Graph& g,
                                                    int copy_order,
                                                    const Budget& budget = {});

// For graphs with a universal vertex: n(G) when the minimum degree is at
// least 2, n(H) + n(G) - 1 when it is 1. Throws PreconditionError without a
// universal vertex or on K_1.
long long universal_vertex_formula(const Graph& g, int copy_order);

}  // namespace equidim

#endif  // EQUIDIM_THEORY_HPP_
