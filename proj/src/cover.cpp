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

#include "equidim/cover.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

constexpr Mask bit(int v) { return Mask{1} << v; }
int low(Mask m) { return std::countr_zero(m); }
int count(Mask m) { return std::popcount(m); }

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

class Search {
 public:
  explicit Search(const std::vector<Mask>& adj) : adj_(adj) {}

  int run(Mask alive) {
    best_ = count(alive);
    descend(alive, 0);
    return best_;
  }

 private:
  // Exhaustive reductions; returns vertices taken into the cover.
  int reduce(Mask& alive) const {
    int taken = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        const int v = low(rest);
        if (!(alive & bit(v))) continue;
        const Mask nb = adj_[v] & alive;
        const int d = count(nb);
        if (d == 0) {
          alive &= ~bit(v);
          changed = true;
        } else if (d == 1) {
          alive &= ~(bit(v) | nb);
          ++taken;
          changed = true;
        } else {
          const Mask closed = nb | bit(v);
          for (Mask t = nb; t; t &= t - 1) {
            const int u = low(t);
            if ((((adj_[u] & alive) | bit(u)) & ~closed) == 0) {
              alive &= ~bit(v);
              ++taken;
              changed = true;
              break;
            }
          }
        }
      }
    }
    return taken;
  }

  int matching_bound(Mask alive) const {
    int size = 0;
    while (alive) {
      const int v = low(alive);
      alive &= ~bit(v);
      const Mask nb = adj_[v] & alive;
      if (nb) {
        alive &= ~bit(low(nb));
        ++size;
      }
    }
    return size;
  }

  int cycle_cost(Mask alive) const {
    int cost = 0;
    while (alive) {
      Mask comp = bit(low(alive));
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask t = frontier; t; t &= t - 1) next |= adj_[low(t)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      cost += (count(comp) + 1) / 2;
      alive &= ~comp;
    }
    return cost;
  }

  void descend(Mask alive, int taken) {
    taken += reduce(alive);
    if (taken >= best_) return;
    if (alive == 0) {
      best_ = taken;
      return;
    }
    int pick = -1;
    int max_degree = -1;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = low(rest);
      const int d = count(adj_[v] & alive);
      if (d > max_degree) {
        max_degree = d;
        pick = v;
      }
    }
    if (max_degree <= 2) {
      best_ = std::min(best_, taken + cycle_cost(alive));
      return;
    }
    if (taken + matching_bound(alive) >= best_) return;
    const Mask nb = adj_[pick] & alive;
    descend(alive & ~bit(pick), taken + 1);
    descend(alive & ~(bit(pick) | nb), taken + count(nb));
  }

  const std::vector<Mask>& adj_;
  int best_ = 0;
};

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (const auto& [u, v] : g.edges()) {
    if (!s.contains(u) && !s.contains(v)) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (const auto& [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const std::vector<int> members = s.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

CoverSolver::CoverSolver(const Graph& g, const Budget& budget) {
  require_order(g.order(), budget.exact_order, "vertex cover");
  adjacency_ = masks_of(g);
}

Mask CoverSolver::all() const {
  return order() == 64 ? ~Mask{0} : bit(order()) - 1;
}

int CoverSolver::unconstrained(Mask alive) const {
  return Search(adjacency_).run(alive);
}

std::optional<int> CoverSolver::min_size(Mask alive, Mask in, Mask out) const {
  in &= alive;
  out &= alive;
  if (in & out) return std::nullopt;
  Mask forced = in;
  for (Mask t = out; t; t &= t - 1) {
    const Mask nb = adjacency_[low(t)] & alive;
    if (nb & out) return std::nullopt;
    forced |= nb;
  }
  return count(forced) + unconstrained(alive & ~forced & ~out);
}

Mask CoverSolver::lex_min_cover(Mask alive, Mask in) const {
  const std::optional<int> target = min_size(alive, in);
  if (!target) throw PreconditionError("no cover contains the forced set");
  Mask out = 0;
  for (Mask rest = alive & ~in; rest; rest &= rest - 1) {
    const int v = low(rest);
    bool forced = false;
    for (Mask t = out; t; t &= t - 1) forced |= (adjacency_[low(t)] >> v) & 1;
    if (forced || min_size(alive, in | bit(v), out) == target) {
      in |= bit(v);
    } else {
      out |= bit(v);
    }
  }
  return in;
}

Mask CoverSolver::lex_min_independent_set(Mask alive) const {
  const int target = unconstrained(alive);
  Mask in = 0;
  Mask out = 0;
  for (Mask rest = alive; rest; rest &= rest - 1) {
    const int v = low(rest);
    if ((adjacency_[v] & out) == 0 && min_size(alive, in, out | bit(v)) == target) {
      out |= bit(v);
    } else {
      in |= bit(v);
    }
  }
  return out;
}

CoverResult vertex_cover_number(const Graph& g, const Budget& budget) {
  const CoverSolver solver(g, budget);
  const Mask cover = solver.lex_min_cover(solver.all());
  return {count(cover), VertexSet::from_mask(g.order(), cover)};
}

CoverResult independence_number(const Graph& g, const Budget& budget) {
  const CoverResult beta = vertex_cover_number(g, budget);
  return {g.order() - beta.value, beta.witness.complement()};
}

CoverResult clique_number(const Graph& g, const Budget& budget) {
  const CoverSolver solver(complement(g), budget);
  const Mask clique = solver.lex_min_independent_set(solver.all());
  return {count(clique), VertexSet::from_mask(g.order(), clique)};
}

CoverResult min_cover_containing(const Graph& g, const VertexSet& forced,
                                 const VertexSet& restrict_to,
                                 const Budget& budget) {
  if (forced.universe() != g.order() || restrict_to.universe() != g.order()) {
    throw PreconditionError("vertex set does not match the graph order");
  }
  if (!forced.is_subset_of(restrict_to)) {
    throw PreconditionError("forced vertices must lie in the restriction");
  }
  const CoverSolver solver(g, budget);
  const Mask cover =
      solver.lex_min_cover(restrict_to.to_mask(), forced.to_mask());
  return {count(cover), VertexSet::from_mask(g.order(), cover)};
}

CoverStream::CoverStream(const Graph& g, int max_size, const Budget& budget)
    : n_(g.order()),
      max_size_(std::min(max_size, g.order())),
      max_covers_(budget.max_covers) {
  require_order(n_, budget.exact_order, "cover enumeration");
  later_neighbors_.assign(n_, 0);
  for (int v = 0; v < n_; ++v) {
    for (int w : g.neighbors(v)) {
      if (w > v) later_neighbors_[v] |= bit(w);
    }
  }
}

std::optional<Mask> CoverStream::next_mask() {
  while (true) {
    if (stack_.empty()) {
      if (size_ >= max_size_) return std::nullopt;
      ++size_;
      stack_.push_back({0, 0, 0, 0, 0});
    }
    Frame& top = stack_.back();
    const int k = size_;
    if (top.state == 0 && top.pos == n_) {
      const Frame leaf = top;
      stack_.pop_back();
      if (leaf.count == k) {
        if (++produced_ > max_covers_) {
          throw BudgetExceeded("exact search out of budget: more than " +
                               std::to_string(max_covers_) + " covers visited");
        }
        return leaf.chosen;
      }
      continue;
    }
    const int slack = k - top.count;
    if (top.state == 0 &&
        (n_ - top.pos < slack || count(top.forced & ~top.chosen) > slack)) {
      stack_.pop_back();
      continue;
    }
    if (top.state == 0) {
      top.state = 1;
      if (top.count < k) {
        const Frame child{top.pos + 1, top.chosen | bit(top.pos), top.forced,
                          top.count + 1, 0};
        stack_.push_back(child);
      }
      continue;
    }
    if (top.state == 1) {
      top.state = 2;
      if (!(top.forced & bit(top.pos))) {
        const Frame child{top.pos + 1, top.chosen,
                          top.forced | later_neighbors_[top.pos], top.count, 0};
        stack_.push_back(child);
      }
      continue;
    }
    stack_.pop_back();
  }
}

std::optional<VertexSet> CoverStream::next() {
  const std::optional<Mask> m = next_mask();
  if (!m) return std::nullopt;
  return VertexSet::from_mask(n_, *m);
}

std::vector<VertexSet> enumerate_vertex_covers(const Graph& g, int max_size,
                                               const Budget& budget) {
  CoverStream stream(g, max_size, budget);
  std::vector<VertexSet> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace equidim
