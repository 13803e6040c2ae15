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

#include "equidim/theory.hpp"

#include <algorithm>
#include <numeric>

#include "equidim/bisector.hpp"
#include "equidim/cover.hpp"
#include "equidim/equidistant.hpp"
#include "equidim/errors.hpp"

namespace equidim {

namespace {

void require_copy_order(int copy_order) {
  if (copy_order < 1) {
    throw PreconditionError("the corona factor needs at least one vertex");
  }
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

}  // namespace

bool BoundsReport::chain_holds() const {
  auto le = [](const std::optional<int>& a, const std::optional<int>& b) {
    return !a || !b || *a <= *b;
  };
  return le(floor, exact) && le(floor, lower_weak) && le(lower_weak, lower) && le(lower, exact) &&
         le(lower_weak, exact) && le(exact, upper) && le(upper, upper_via_xi) &&
         le(exact, upper_via_xi);
}

BoundsReport bounds_report(const Graph& g, int copy_order,
                           const Budget& budget) {
  require_copy_order(copy_order);
  if (!is_connected(g)) {
    throw PreconditionError("bounds need a connected graph");
  }
  BoundsReport r;
  r.copy_order = copy_order;
  const int n = g.order();
  r.floor = n;
  const Graph ghat = empty_bisector_graph(g).graph();
  try {
    const int beta = vertex_cover_number(ghat, budget).value;
    const int alpha = n - beta;
    r.lower_weak = beta * copy_order + alpha;
    r.upper = beta * copy_order + n;
    try {
      r.lower = *r.lower_weak + beta_star(g, budget).value;
    } catch (const BudgetExceeded& e) {
      r.gaps.push_back(std::string("lower: ") + e.what());
    }
  } catch (const BudgetExceeded& e) {
    r.gaps.push_back(std::string("cover number: ") + e.what());
  }
  try {
    r.exact = xi_corona_structured(g, copy_order, budget).value;
  } catch (const BudgetExceeded& e) {
    r.gaps.push_back(std::string("exact: ") + e.what());
  }
  if (n <= kMaxXiBoundOrder) {
    try {
      r.upper_via_xi = xi_bruteforce(g, budget).value * copy_order + n;
    } catch (const BudgetExceeded& e) {
      r.gaps.push_back(std::string("upper via xi: ") + e.what());
    }
  } else {
    r.gaps.push_back("upper via xi: order above " +
                     std::to_string(kMaxXiBoundOrder));
  }
  return r;
}

FormulaValue closed_formula(const FamilySpec& family, int copy_order) {
  require_copy_order(copy_order);
  validate(family);
  const auto& p = family.params;
  const long long h = copy_order;
  FormulaValue f;
  f.family = family;
  f.copy_order = copy_order;
  switch (family.family) {
    case Family::kComplete:
      if (p[0] < 2) throw PreconditionError("complete formula needs n >= 2");
      f.clause = "complete";
      f.value = p[0] == 2 ? h + 1 : p[0];
      break;
    case Family::kCompleteBipartite:
      f.clause = "complete bipartite";
      f.value = p[0] * h + p[1];
      break;
    case Family::kBistar:
      f.clause = "bistar";
      f.value = p[0] * h + p[1];
      f.flagged = true;
      f.bipartite_value = (p[0] + 1) * h + (p[1] + 1);
      break;
    case Family::kCompleteMultipartite:
      f.clause = "complete multipartite";
      f.value = std::accumulate(p.begin(), p.end(), 0LL);
      break;
    case Family::kWheel:
      f.clause = "wheel";
      f.value = p[0];
      break;
    case Family::kHypercube:
      f.clause = "hypercube";
      f.value = (1LL << (p[0] - 1)) * (h + 1);
      break;
    case Family::kPath:
      if (p[0] < 2) throw PreconditionError("path formula needs n >= 2");
      f.clause = "path";
      f.value = (p[0] / 2) * h + (p[0] + 1) / 2;
      break;
    case Family::kCycle:
      f.clause = p[0] % 2 ? "odd cycle" : "even cycle";
      f.value = p[0] % 2 ? p[0] : p[0] * (h + 1) / 2;
      break;
    default:
      throw PreconditionError("no closed formula for " +
                              std::string(family_name(family.family)));
  }
  return f;
}

Characterization xi_equals_order_characterization(const Graph& g,
                                                  int copy_order,
                                                  const Budget& budget) {
  require_copy_order(copy_order);
  const Graph ghat = empty_bisector_graph(g).graph();
  if (ghat.edge_count() == 0) return {true, "empty bisector graph is edgeless"};
  if (copy_order == 1 && beta_star(g, budget).value == 0) {
    return {true, "n(H) = 1 and beta* = 0"};
  }
  return {false, copy_order == 1 ? "beta* > 0"
                                  : "n(H) > 1 and the empty bisector graph has edges"};
}

long long bipartite_formula(const Graph& g, int copy_order) {
  require_copy_order(copy_order);
  if (!is_connected(g)) {
    throw PreconditionError("bipartite formula needs a connected graph");
  }
  const auto colors = two_coloring(g);
  if (!colors) throw PreconditionError("graph is not bipartite");
  const long long ones = std::count(colors->begin(), colors->end(), 1);
  const long long zeros = g.order() - ones;
  return std::min(ones, zeros) * copy_order + std::max(ones, zeros);
}

long long join_formula(const Graph& g1, const Graph& g2, int copy_order) {
  require_copy_order(copy_order);
  if (has_isolated_vertex(g1) && has_isolated_vertex(g2)) {
    throw PreconditionError("join formula needs one side without isolated vertices");
  }
  return static_cast<long long>(g1.order()) + g2.order();
}

std::optional<EccentricityBound> eccentricity2_case(const Graph& g,
                                                    int copy_order,
                                                    const Budget& budget) {
  require_copy_order(copy_order);
  const DegreeProfile profile = degree_profile(g);
  const int n = g.order();
  int best = -1;
  for (int u = 0; u < n; ++u) {
    if (profile.eccentricity[u] > 2) continue;
    if (best < 0 || profile.degree[u] > profile.degree[best]) best = u;
  }
  if (best < 0) return std::nullopt;
  const long long deg = profile.degree[best];
  EccentricityBound b;
  b.vertex = best;
  b.upper = (n - deg) * copy_order + deg;
  const CoverResult beta =
      vertex_cover_number(empty_bisector_graph(g).graph(), budget);
  if (deg == n - beta.value) {
    b.exact = static_cast<long long>(beta.value) * copy_order + (n - beta.value);
  }
  return b;
}

long long universal_vertex_formula(const Graph& g, int copy_order) {
  require_copy_order(copy_order);
  const int n = g.order();
  if (n < 2) throw PreconditionError("universal vertex formula needs n >= 2");
  const DegreeProfile profile = degree_profile(g);
  if (profile.max_degree != n - 1) {
    throw PreconditionError("graph has no universal vertex");
  }
  return profile.min_degree >= 2 ? n : static_cast<long long>(copy_order) + n - 1;
}

}  // namespace equidim
