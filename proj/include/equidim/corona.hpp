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

#ifndef EQUIDIM_CORONA_HPP_
#define EQUIDIM_CORONA_HPP_

#include "equidim/graph.hpp"
#include "equidim/vertex_set.hpp"

namespace equidim {

// Where a product vertex comes from: base vertex i of G, or vertex j of the
// copy H_i hanging off base vertex i.
struct VertexKind {
  enum class Tag { kBase, kCopy };
  Tag tag = Tag::kBase;
  int base = 0;
  int copy_vertex = -1;  // -1 for base vertices

  bool is_base() const { return tag == Tag::kBase; }
  friend bool operator==(const VertexKind&, const VertexKind&) = default;
};

// The corona product G ⊙ H with its vertex bookkeeping.
//
// Layout: base vertex i keeps index i; vertex j of copy H_i sits at
// n(G) + i * n(H) + j. The map is pure arithmetic in both directions.
class CoronaGraph {
 public:
  CoronaGraph(Graph base, Graph copy);

  const Graph& base() const { return base_; }
  const Graph& copy() const { return copy_; }
  const Graph& product() const { return product_; }

  int base_order() const { return base_.order(); }
  int copy_order() const { return copy_.order(); }

  VertexKind kind(int product_vertex) const;
  int base_vertex(int i) const { return i; }
  int copy_vertex(int i, int j) const {
    return base_order() + i * copy_order() + j;
  }

  // U(S): base vertices whose copy meets S.
  VertexSet upper_projection(const VertexSet& s) const;
  // L(S) = S ∩ V(G).
  VertexSet lower_projection(const VertexSet& s) const;
  // S = (∪_{v_i ∈ U} V(H_i)) ∪ L, as a product vertex set.
  VertexSet lift(const VertexSet& upper, const VertexSet& lower) const;

 private:
  Graph base_;
  Graph copy_;
  Graph product_;
};

CoronaGraph corona(const Graph& g, const Graph& h);

}  // namespace equidim

#endif  // EQUIDIM_CORONA_HPP_
