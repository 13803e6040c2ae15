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

#include "equidim/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw PreconditionError("negative vertex-set universe");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > kWordBits) {
    throw PreconditionError("from_mask needs a universe of at most 64");
  }
  if (universe < kWordBits && (mask >> universe) != 0) {
    throw PreconditionError("mask has bits outside the universe");
  }
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(int v) const {
  check_vertex(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(int v) {
  check_vertex(v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > kWordBits) {
    throw PreconditionError("to_mask needs a universe of at most 64");
  }
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % kWordBits)) - 1;
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void VertexSet::check_vertex(int v) const {
  if (v < 0 || v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw PreconditionError("vertex sets over different universes");
  }
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const std::vector<int> ea = a.elements();
  const std::vector<int> eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end());
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace equidim
