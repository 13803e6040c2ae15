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

#ifndef EQUIDIM_COVER_HPP_
#define EQUIDIM_COVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "equidim/budget.hpp"
#include "equidim/graph.hpp"
#include "equidim/vertex_set.hpp"

namespace equidim {

// Bit i = vertex i. Exact solvers cap the order at kMaxExactOrder, so one
// word is always enough.
using Mask = std::uint64_t;

struct CoverResult {
  int value = 0;
  VertexSet witness;
};

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// Exact minimum vertex cover machinery over one fixed graph.
//
// Values come from a branch-and-bound on a maximum-degree vertex (in / out),
// after exhaustive reduction by isolated vertices, pendant vertices and
// neighbourhood dominance, with a greedy-matching lower bound and a closed
// form once only cycles remain. Witnesses are rebuilt vertex by vertex in
// increasing order, so they are lexicographically extremal among optimal
// solutions.
class CoverSolver {
 public:
  // Throws BudgetExceeded when the order is above budget.exact_order.
  explicit CoverSolver(const Graph& g, const Budget& budget = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  Mask all() const;

  // Minimum |C| over covers C of g[alive] with in ⊆ C and C ∩ out = ∅, or
  // nullopt when no such cover exists. `in` and `out` must lie in `alive`.
  std::optional<int> min_size(Mask alive, Mask in = 0, Mask out = 0) const;

  // Lexicographically smallest minimum cover of g[alive] containing `in`.
  Mask lex_min_cover(Mask alive, Mask in = 0) const;

  // Lexicographically smallest maximum independent set of g[alive].
  Mask lex_min_independent_set(Mask alive) const;

 private:
  int unconstrained(Mask alive) const;

  std::vector<Mask> adjacency_;
};

// β(g): exact, witness = lexicographically smallest minimum cover.
CoverResult vertex_cover_number(const Graph& g, const Budget& budget = {});

// α(g) = n - β(g) (Gallai); witness = complement of the β witness.
CoverResult independence_number(const Graph& g, const Budget& budget = {});

// ω(g) as α of the complement; witness = lexicographically smallest maximum
// clique.
CoverResult clique_number(const Graph& g, const Budget& budget = {});

// Minimum cover of g[restrict_to] among those containing `forced`. Equals
// |forced| + β of what remains once forced vertices and their edges are gone.
// Requires forced ⊆ restrict_to.
CoverResult min_cover_containing(const Graph& g, const VertexSet& forced,
                                 const VertexSet& restrict_to,
                                 const Budget& budget = {});

// Lazy stream of every vertex cover of size <= max_size, each exactly once,
// by nondecreasing size and lexicographically within a size.
//
// Each size class is a depth-first walk over vertices 0..n-1 trying
// "include" before "exclude"; excluding v forces every later neighbour in,
// so dead branches are cut as soon as the forced vertices overflow the size.
class CoverStream {
 public:
  CoverStream(const Graph& g, int max_size, const Budget& budget = {});

  std::optional<Mask> next_mask();
  std::optional<VertexSet> next();

  // Covers yielded so far. Throws BudgetExceeded past budget.max_covers.
  std::uint64_t produced() const { return produced_; }

 private:
  struct Frame {
    int pos;
    Mask chosen;
    Mask forced;
    int count;
    int state;  // 0: try include, 1: try exclude, 2: exhausted
  };

  int n_;
  int max_size_;
  std::uint64_t max_covers_;
  int size_ = -1;
  std::vector<Mask> later_neighbors_;
  std::vector<Frame> stack_;
  std::uint64_t produced_ = 0;
};

// Collects a CoverStream.
std::vector<VertexSet> enumerate_vertex_covers(const Graph& g, int max_size,
                                               const Budget& budget = {});

}  // namespace equidim

#endif  // EQUIDIM_COVER_HPP_
