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

#include "equidim/equidistant.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "equidim/bisector.hpp"
#include "equidim/corona.hpp"
#include "equidim/cover.hpp"
#include "equidim/errors.hpp"

namespace equidim {

namespace {

constexpr Mask bit(int v) { return Mask{1} << v; }
int count(Mask m) { return std::popcount(m); }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(what) + " needs a connected graph");
  }
}

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw PreconditionError("vertex set does not match the graph order");
  }
}

// bisectors[u * n + v] = B(u | v) as a mask.
std::vector<Mask> bisector_masks(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix& d = g.distances();
  std::vector<Mask> out(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Mask m = 0;
      for (int w = 0; w < n; ++w) {
        if (d.at(w, u) == d.at(w, v)) m |= bit(w);
      }
      out[u * n + v] = out[v * n + u] = m;
    }
  }
  return out;
}

// forward[x] = { v : some w has d(w,x) = d(w,v) + 1 }.
std::vector<Mask> forward_masks(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix& d = g.distances();
  std::vector<Mask> out(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (d.at(w, x) == d.at(w, v) + 1) {
          out[x] |= bit(v);
          break;
        }
      }
    }
  }
  return out;
}

Mask mandatory_mask(const std::vector<Mask>& forward, Mask upper, Mask all) {
  Mask out = 0;
  const Mask outside = all & ~upper;
  for (Mask t = upper; t; t &= t - 1) {
    const int x = std::countr_zero(t);
    if (outside & ~forward[x]) out |= bit(x);
  }
  return out;
}

// First k-subset of {0..n-1}, in lexicographic order, accepted by `ok`.
template <typename Accept>
std::optional<Mask> first_subset(int n, int k, Accept ok) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    if (ok(m)) return m;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest-then-least S meeting the bisector of every pair: all pairs when
// `total`, otherwise only pairs outside S.
EquidimResult scan(const Graph& g, bool total, const Budget& budget) {
  const int n = g.order();
  require_order(n, budget.scan_order, total ? "total equalizer scan"
                                            : "equalizer scan");
  const std::vector<Mask> bis = bisector_masks(g);
  auto accept = [&](Mask s) {
    for (int u = 0; u < n; ++u) {
      if (!total && (s & bit(u))) continue;
      for (int v = u + 1; v < n; ++v) {
        if (!total && (s & bit(v))) continue;
        if ((bis[u * n + v] & s) == 0) return false;
      }
    }
    return true;
  };
  for (int k = 0; k <= n; ++k) {
    if (const auto s = first_subset(n, k, accept)) {
      EquidimResult r;
      r.value = k;
      r.witness = VertexSet::from_mask(n, *s);
      return r;
    }
  }
  EquidimResult r;
  r.infinite = true;
  r.witness = VertexSet(n);
  return r;
}

VertexSet lift(int n, int copy_order, Mask upper, Mask lower) {
  VertexSet s(n + n * copy_order);
  for (int i = 0; i < n; ++i) {
    if (lower & bit(i)) s.insert(i);
    if (upper & bit(i)) {
      for (int j = 0; j < copy_order; ++j) s.insert(n + i * copy_order + j);
    }
  }
  return s;
}

}  // namespace

bool is_distance_equalizer(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  require_connected(g, "distance equalizer check");
  const int n = g.order();
  const DistanceMatrix& d = g.distances();
  const std::vector<int> members = s.elements();
  for (int u = 0; u < n; ++u) {
    if (s.contains(u)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (s.contains(v)) continue;
      const bool met = std::any_of(members.begin(), members.end(), [&](int w) {
        return d.at(w, u) == d.at(w, v);
      });
      if (!met) return false;
    }
  }
  return true;
}

EquidimResult xi_bruteforce(const Graph& g, const Budget& budget) {
  require_connected(g, "equidistant dimension");
  return scan(g, false, budget);
}

EquidimResult xi_total(const Graph& g, const Budget& budget) {
  require_connected(g, "total equidistant dimension");
  if (empty_bisector_graph(g).graph().edge_count() > 0) {
    EquidimResult r;
    r.infinite = true;
    r.witness = VertexSet(g.order());
    return r;
  }
  return scan(g, true, budget);
}

bool forward_equalized(const Graph& g, const ForwardPair& pair) {
  require_universe(g, pair.x);
  require_universe(g, pair.y);
  if ((pair.x | pair.y) != VertexSet::full(g.order())) {
    throw PreconditionError("forward pair must cover every vertex");
  }
  const DistanceMatrix& d = g.distances();
  const int n = g.order();
  for (int u : (pair.x - pair.y).elements()) {
    for (int v : (pair.y - pair.x).elements()) {
      bool met = false;
      for (int w = 0; w < n && !met; ++w) met = d.at(w, u) == d.at(w, v) + 1;
      if (!met) return false;
    }
  }
  return true;
}

VertexSet mandatory_set(const Graph& g, const VertexSet& upper) {
  require_universe(g, upper);
  require_connected(g, "mandatory set");
  if (g.order() > 64) {
    throw BudgetExceeded("exact search out of budget: order above 64");
  }
  const Mask m = mandatory_mask(forward_masks(g), upper.to_mask(),
                                full_mask(g.order()));
  return VertexSet::from_mask(g.order(), m);
}

EquidimResult xi_corona_structured(const Graph& g, int copy_order,
                                   const Budget& budget) {
  if (copy_order < 1) {
    throw PreconditionError("the corona factor needs at least one vertex");
  }
  require_connected(g, "corona equidistant dimension");
  const int n = g.order();
  EquidimResult best;
  best.copy_order = copy_order;
  if (n == 1) {
    best.value = 1;
    best.decomposition = Decomposition{VertexSet(1), VertexSet(1, {0})};
    best.witness = lift(1, copy_order, 0, 1);
    return best;
  }
  const Graph ghat = empty_bisector_graph(g).graph();
  const CoverSolver solver(ghat, budget);
  const std::vector<Mask> forward = forward_masks(g);
  const Mask all = full_mask(n);

  long long incumbent = -1;
  Mask best_upper = 0;
  Mask best_lower = all;
  CoverStream covers(ghat, n, budget);
  while (const auto upper = covers.next_mask()) {
    const long long size = count(*upper);
    const long long floor = size * copy_order + (n - size);
    if (incumbent >= 0 && floor >= incumbent) break;
    const Mask both = solver.lex_min_cover(
        *upper, mandatory_mask(forward, *upper, all));
    const long long cost = floor + count(both);
    if (incumbent < 0 || cost < incumbent) {
      incumbent = cost;
      best_upper = *upper;
      best_lower = (all & ~*upper) | both;
    }
  }
  best.value = static_cast<int>(incumbent);
  best.decomposition = Decomposition{VertexSet::from_mask(n, best_upper),
                                     VertexSet::from_mask(n, best_lower)};
  best.witness = lift(n, copy_order, best_upper, best_lower);
  return best;
}

EquidimResult xi_corona_oracle(const Graph& g, const Graph& h,
                               const Budget& budget) {
  require_connected(g, "corona equidistant dimension");
  const CoronaGraph c = corona(g, h);
  require_order(c.product().order(), budget.scan_order, "explicit corona scan");
  EquidimResult r = xi_bruteforce(c.product(), budget);
  r.copy_order = h.order();
  r.decomposition = Decomposition{c.upper_projection(r.witness),
                                  c.lower_projection(r.witness)};
  return r;
}

BetaStarResult beta_star(const Graph& g, const Budget& budget) {
  require_connected(g, "beta star");
  const int n = g.order();
  const Graph ghat = empty_bisector_graph(g).graph();
  const CoverSolver solver(ghat, budget);
  const std::vector<Mask> forward = forward_masks(g);
  const Mask all = full_mask(n);

  int best = n + 1;
  Mask best_upper = all;
  Mask best_both = 0;
  CoverStream covers(ghat, n, budget);
  while (const auto upper = covers.next_mask()) {
    const Mask both = solver.lex_min_cover(
        *upper, mandatory_mask(forward, *upper, all));
    if (count(both) < best) {
      best = count(both);
      best_upper = *upper;
      best_both = both;
      if (best == 0) break;
    }
  }
  BetaStarResult r;
  r.value = best;
  r.intersection = VertexSet::from_mask(n, best_both);
  r.pair = ForwardPair{VertexSet::from_mask(n, best_upper),
                       VertexSet::from_mask(n, (all & ~best_upper) | best_both)};
  return r;
}

ThresholdResult k_threshold(const Graph& g, const Budget& budget) {
  require_connected(g, "linearity threshold");
  const Graph ghat = empty_bisector_graph(g).graph();
  ThresholdResult r;
  r.beta = vertex_cover_number(ghat, budget).value;
  r.alpha = ghat.order() - r.beta;
  r.slope = r.beta;
  try {
    r.beta_star = beta_star(g, budget).value;
  } catch (const BudgetExceeded&) {
    r.beta_star.reset();
  }
  r.used_beta_star = r.beta_star.has_value();
  r.threshold = r.used_beta_star
                    ? std::min(r.alpha, r.beta - *r.beta_star + 1)
                    : r.alpha;
  const int probe = r.threshold + 1;
  r.k = xi_corona_structured(g, probe, budget).value - r.slope * probe;
  r.within_bounds = r.alpha + r.beta_star.value_or(0) <= r.k &&
                    r.k <= g.order();
  return r;
}

}  // namespace equidim
