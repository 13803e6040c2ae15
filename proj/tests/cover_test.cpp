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

#include <gtest/gtest.h>

#include <set>

#include "equidim/bisector.hpp"
#include "equidim/cover.hpp"
#include "equidim/errors.hpp"
#include "equidim/families.hpp"
#include "equidim/random_graphs.hpp"
#include "oracles.hpp"

namespace equidim {
namespace {

Graph make(Family f, std::vector<int> p = {}) { return generate({f, std::move(p)}); }

Graph fish_hat() { return empty_bisector_graph(make(Family::kFish)).graph(); }

VertexSet labelled(const Graph& g, std::initializer_list<Label> labels) {
  VertexSet s(g.order());
  for (Label l : labels) s.insert(*g.vertex_of(l));
  return s;
}

// Random graphs without the connectivity requirement, like Ĝ.
std::vector<Graph> loose_graphs(std::uint64_t seed, int count, int max_order) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % max_order);
    const double p = 0.1 + 0.2 * (i % 4);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

TEST(CoverTest, Predicates) {
  const Graph k22 = make(Family::kCompleteBipartite, {2, 2});
  EXPECT_TRUE(is_vertex_cover(k22, VertexSet(4, {0, 1})));
  EXPECT_TRUE(is_vertex_cover(k22, VertexSet(4, {2, 3})));
  EXPECT_FALSE(is_vertex_cover(make(Family::kCycle, {4}), VertexSet(4, {0})));
  EXPECT_TRUE(is_vertex_cover(fish_hat(), labelled(fish_hat(), {4})));
  EXPECT_TRUE(is_independent_set(k22, VertexSet(4, {0, 1})));
  EXPECT_TRUE(is_clique(make(Family::kComplete, {4}), VertexSet(4, {0, 2, 3})));
}

TEST(CoverTest, PaperExamples) {
  const Graph fh = fish_hat();
  const CoverResult beta = vertex_cover_number(fh);
  EXPECT_EQ(beta.value, 1);
  EXPECT_EQ(beta.witness, labelled(fh, {4}));
  EXPECT_EQ(independence_number(fh).value, 5);
  EXPECT_EQ(vertex_cover_number(
                empty_bisector_graph(make(Family::kChordedPath)).graph()).value,
            4);
  const Graph k5n1_hat = empty_bisector_graph(make(Family::kK5CoronaN1)).graph();
  EXPECT_EQ(vertex_cover_number(k5n1_hat).value, 5);
  EXPECT_EQ(independence_number(k5n1_hat).value, 5);
  EXPECT_EQ(independence_number(
                empty_bisector_graph(make(Family::kNonlinear)).graph()).value,
            5);
  EXPECT_EQ(independence_number(make(Family::kComplete, {3})).value, 1);
}

TEST(CoverTest, CliqueNumber) {
  EXPECT_EQ(clique_number(make(Family::kK5CoronaN1)).value, 5);
  EXPECT_EQ(clique_number(make(Family::kCycle, {5})).value, 2);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(clique_number(make(Family::kComplete, {n})).value, n);
  }
}

TEST(CoverTest, MatchesSubsetScanWithLexWitness) {
  for (const Graph& g : loose_graphs(5, 150, 16)) {
    const std::uint64_t want = oracle::min_cover(g);
    const CoverResult got = vertex_cover_number(g);
    ASSERT_EQ(got.value, std::popcount(want));
    EXPECT_EQ(got.witness.to_mask(), want);
    const CoverResult alpha = independence_number(g);
    EXPECT_EQ(alpha.value + got.value, g.order());
    EXPECT_TRUE(is_independent_set(g, alpha.witness));
    const CoverResult omega = clique_number(g);
    EXPECT_EQ(omega.value, oracle::clique_number(g));
    EXPECT_TRUE(is_clique(g, omega.witness));
    EXPECT_EQ(omega.witness.size(), omega.value);
  }
}

TEST(CoverTest, LargerSparseGraphs) {
  // Beyond the oracle's reach: check optimality by local certificates.
  for (const Graph& g : loose_graphs(9, 20, 28)) {
    const CoverResult r = vertex_cover_number(g);
    EXPECT_TRUE(is_vertex_cover(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.value);
    // Removing any witness vertex breaks the cover (witness is minimal).
    for (int v : r.witness.elements()) {
      VertexSet smaller = r.witness;
      smaller.erase(v);
      EXPECT_FALSE(is_vertex_cover(g, smaller));
    }
  }
}

TEST(CoverTest, MinCoverContaining) {
  const Graph k3 = make(Family::kComplete, {3});
  EXPECT_EQ(min_cover_containing(k3, VertexSet(3, {0}), VertexSet::full(3)).value, 2);
  const Graph fh = fish_hat();
  EXPECT_EQ(min_cover_containing(fh, VertexSet(6), labelled(fh, {4, 5, 6})).value, 1);
  const VertexSet all = VertexSet::full(6);
  EXPECT_EQ(min_cover_containing(fh, all, all).value, 6);
  EXPECT_THROW(min_cover_containing(fh, all, VertexSet(6, {0})), PreconditionError);
}

TEST(CoverTest, MinCoverContainingMatchesScan) {
  Rng rng(17);
  for (const Graph& g : loose_graphs(21, 80, 12)) {
    const int n = g.order();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t restrict_to = rng() & full;
    const std::uint64_t forced = rng() & restrict_to;
    // Scan: covers of g[restrict_to] inside restrict_to containing forced.
    const std::uint64_t want = oracle::least(n, [&](std::uint64_t s) {
      if ((s & ~restrict_to) || (s & forced) != forced) return false;
      for (const auto& [u, v] : g.edges()) {
        if ((restrict_to >> u & 1) && (restrict_to >> v & 1) && !(s >> u & 1) &&
            !(s >> v & 1)) {
          return false;
        }
      }
      return true;
    });
    const CoverResult got =
        min_cover_containing(g, VertexSet::from_mask(n, forced),
                             VertexSet::from_mask(n, restrict_to));
    EXPECT_EQ(got.witness.to_mask(), want);
  }
}

TEST(CoverStreamTest, Examples) {
  const auto fish_covers = enumerate_vertex_covers(fish_hat(), 1);
  ASSERT_EQ(fish_covers.size(), 1u);
  EXPECT_EQ(fish_covers[0], labelled(fish_hat(), {4}));
  const auto empty = enumerate_vertex_covers(make(Family::kEmpty, {3}), 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
  const auto c4 = enumerate_vertex_covers(make(Family::kCycle, {4}), 2);
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(c4[0], VertexSet(4, {0, 2}));
  EXPECT_EQ(c4[1], VertexSet(4, {1, 3}));
}

TEST(CoverStreamTest, MatchesScanInOrder) {
  for (const Graph& g : loose_graphs(33, 60, 11)) {
    const int n = g.order();
    std::vector<std::uint64_t> want;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (oracle::covers(g, s)) want.push_back(s);
    }
    std::sort(want.begin(), want.end(), [](std::uint64_t a, std::uint64_t b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return oracle::lex_before(a, b);
    });
    std::vector<std::uint64_t> got;
    for (const VertexSet& s : enumerate_vertex_covers(g, n)) got.push_back(s.to_mask());
    EXPECT_EQ(got, want);
  }
}

TEST(CoverStreamTest, UpwardClosed) {
  for (const Graph& g : loose_graphs(41, 30, 9)) {
    const int n = g.order();
    const auto covers = enumerate_vertex_covers(g, n);
    std::set<std::uint64_t> seen;
    for (const auto& c : covers) seen.insert(c.to_mask());
    for (std::uint64_t c : seen) {
      for (int v = 0; v < n; ++v) EXPECT_TRUE(seen.count(c | (std::uint64_t{1} << v)));
    }
  }
}

TEST(CoverStreamTest, BudgetOnVisitedCovers) {
  Budget b;
  b.max_covers = 3;
  CoverStream stream(make(Family::kEmpty, {4}), 4, b);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(stream.next().has_value());
  EXPECT_THROW(stream.next(), BudgetExceeded);
}

TEST(CoverTest, OrderCap) {
  const Graph big = make(Family::kEmpty, {kMaxExactOrder + 1});
  EXPECT_THROW(vertex_cover_number(big), BudgetExceeded);
  try {
    vertex_cover_number(big);
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("exact search out of budget"),
              std::string::npos);
  }
  EXPECT_THROW(vertex_cover_number(make(Family::kPath, {6}), Budget::capped(5)),
               BudgetExceeded);
  EXPECT_EQ(vertex_cover_number(make(Family::kEmpty, {kMaxExactOrder})).value, 0);
}

}  // namespace
}  // namespace equidim
