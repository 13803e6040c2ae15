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

#ifndef EQUIDIM_VERTEX_SET_HPP_
#define EQUIDIM_VERTEX_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace equidim {

// A subset of {0, ..., universe-1}, stored as a packed bitset.
//
// Binary set operations require both operands to share the same universe.
// Ordering between sets of equal cardinality is lexicographic on the sorted
// element sequence, which for equal-size sets reduces to "the smallest element
// of the symmetric difference belongs to the smaller set".
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);
  // Bit i of `mask` is vertex i. Requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;
  bool contains(int v) const;

  void insert(int v);
  void erase(int v);

  std::vector<int> elements() const;
  // Requires universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  void check_vertex(int v) const;
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of the sorted element sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

// Cardinality first, then lexicographic: the tie-break order used by every
// exact solver in the library.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace equidim

#endif  // EQUIDIM_VERTEX_SET_HPP_
