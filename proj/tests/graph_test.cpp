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

#include <sstream>

#include "equidim/corona.hpp"
#include "equidim/errors.hpp"
#include "equidim/families.hpp"
#include "equidim/graph.hpp"
#include "equidim/graph_io.hpp"
#include "equidim/random_graphs.hpp"
#include "equidim/vertex_set.hpp"
#include "oracles.hpp"

namespace equidim {
namespace {

Graph path(int n) { return generate({Family::kPath, {n}}); }
Graph cycle(int n) { return generate({Family::kCycle, {n}}); }

TEST(VertexSetTest, BasicOperations) {
  VertexSet a(70, {1, 5, 69});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(69));
  EXPECT_FALSE(a.contains(2));
  a.erase(5);
  EXPECT_EQ(a.elements(), (std::vector<int>{1, 69}));
  EXPECT_EQ(a.complement().size(), 68);
  VertexSet b(70, {1, 2});
  EXPECT_EQ((a | b).elements(), (std::vector<int>{1, 2, 69}));
  EXPECT_EQ((a & b).elements(), (std::vector<int>{1}));
  EXPECT_EQ((a - b).elements(), (std::vector<int>{69}));
  EXPECT_TRUE(VertexSet(70, {1}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
}

TEST(VertexSetTest, MisuseIsRejected) {
  EXPECT_THROW(VertexSet(3, {3}), PreconditionError);
  EXPECT_THROW(VertexSet(3) | VertexSet(4), PreconditionError);
  EXPECT_THROW(VertexSet::from_mask(2, 0b100), PreconditionError);
}

TEST(VertexSetTest, LexOrderUsesSmallestDifference) {
  EXPECT_TRUE(lex_less(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
  EXPECT_FALSE(lex_less(VertexSet(5, {1, 2}), VertexSet(5, {0, 4})));
  EXPECT_TRUE(size_lex_less(VertexSet(5, {4}), VertexSet(5, {0, 1})));
  EXPECT_FALSE(lex_less(VertexSet(5, {1}), VertexSet(5, {1})));
}

TEST(GraphTest, ConstructionValidates) {
  const std::vector<Edge> loop = {{0, 0}};
  const std::vector<Edge> far = {{0, 3}};
  EXPECT_THROW(Graph(0, std::vector<Edge>{}), PreconditionError);
  EXPECT_THROW(Graph(2, loop), PreconditionError);
  EXPECT_THROW(Graph(3, far), PreconditionError);
}

TEST(GraphTest, DuplicateEdgesCollapse) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}, {1, 2}};
  const Graph g(3, edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(GraphTest, DistancesMatchFloydWarshall) {
  for (const Graph& g : random_corpus(7, 30)) {
    const oracle::Matrix want = oracle::floyd(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        EXPECT_EQ(static_cast<long long>(g.distance(u, v)), want[u][v]);
      }
    }
  }
}

TEST(GraphTest, DisconnectedDistancesAreUnreachable) {
  const std::vector<Edge> edges = {{0, 1}};
  const Graph g(3, edges);
  EXPECT_FALSE(is_connected(g));
  EXPECT_FALSE(g.distances().finite(0, 2));
  EXPECT_THROW(degree_profile(g), PreconditionError);
}

TEST(GraphTest, DegreeProfileOfPath) {
  const DegreeProfile p = degree_profile(path(5));
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.min_degree, 1);
  EXPECT_EQ(p.diameter, 4);
  EXPECT_EQ(p.radius, 2);
  EXPECT_EQ(p.eccentricity, (std::vector<int>{4, 3, 2, 3, 4}));
}

TEST(GraphTest, JoinComplementAndProduct) {
  const Graph w = join(Graph(1, std::vector<Edge>{}), cycle(4));
  EXPECT_EQ(w, generate({Family::kWheel, {5}}));
  EXPECT_EQ(w.edge_count(), 8u);
  EXPECT_EQ(complement(generate({Family::kComplete, {4}})).edge_count(), 0u);
  const Graph grid = cartesian_product(path(2), path(3));
  EXPECT_EQ(grid.order(), 6);
  EXPECT_EQ(grid.edge_count(), 7u);
  EXPECT_TRUE(grid.adjacent(0 * 3 + 1, 1 * 3 + 1));
}

TEST(GraphTest, InducedSubgraphKeepsLabels) {
  const Graph fish = generate({Family::kFish, {}});
  const Graph sub = induced_subgraph(fish, VertexSet(6, {2, 4, 5}));
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.edge_count(), 3u);  // triangle 3-5-6
  EXPECT_EQ(sub.label(0), 3);
}

TEST(GraphTest, TwoColoring) {
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  const auto c = two_coloring(path(4));
  ASSERT_TRUE(c.has_value());
  EXPECT_NE((*c)[0], (*c)[1]);
  EXPECT_EQ((*c)[0], (*c)[2]);
}

TEST(CoronaTest, LayoutAndDistances) {
  const Graph g = cycle(3);
  const Graph h = path(2);
  const CoronaGraph c = corona(g, h);
  EXPECT_EQ(c.product().order(), 9);
  EXPECT_EQ(c.copy_vertex(1, 0), 5);
  EXPECT_TRUE(c.kind(0).is_base());
  EXPECT_EQ(c.kind(5).base, 1);
  EXPECT_EQ(c.kind(5).copy_vertex, 0);
  const oracle::Matrix want = oracle::corona_distances(g, h);
  for (int x = 0; x < 9; ++x) {
    for (int y = 0; y < 9; ++y) {
      EXPECT_EQ(static_cast<long long>(c.product().distance(x, y)), want[x][y]);
    }
  }
}

TEST(CoronaTest, ProjectionsAndLift) {
  const CoronaGraph c = corona(path(3), path(2));
  const VertexSet s(9, {0, 5, 6});
  EXPECT_EQ(c.lower_projection(s).elements(), (std::vector<int>{0}));
  EXPECT_EQ(c.upper_projection(s).elements(), (std::vector<int>{1}));
  const VertexSet lifted = c.lift(VertexSet(3, {2}), VertexSet(3, {0, 1}));
  EXPECT_EQ(lifted.elements(), (std::vector<int>{0, 1, 7, 8}));
}

TEST(GraphIoTest, RoundTripKeepsLabels) {
  const Graph fish = generate({Family::kFish, {}});
  const Graph back = parse_edge_list(format_edge_list(fish));
  EXPECT_EQ(back, fish);
  EXPECT_EQ(std::vector<Label>(back.labels().begin(), back.labels().end()),
            std::vector<Label>(fish.labels().begin(), fish.labels().end()));
}

TEST(GraphIoTest, LabelConventions) {
  const Graph zero = parse_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_EQ(zero.label(0), 0);
  const Graph one = parse_edge_list("# comment\n\n3 2\n1 2  # trailing\n2 3\n");
  EXPECT_EQ(one.label(0), 1);
  EXPECT_TRUE(one.adjacent(0, 1));
  const Graph sparse = parse_edge_list("3 2\n10 20\n20 30\n");
  EXPECT_EQ(sparse.vertex_of(30), 2);
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 2\n1 2\n2 x\n"), 3);
  EXPECT_EQ(line_of("3 1\n1 1\n"), 2);
  EXPECT_EQ(line_of("3\n"), 1);
  EXPECT_EQ(line_of("3 2\n1 2\n"), 1);
  EXPECT_EQ(line_of("3 2\n1 2\n7 9\n"), 3);
  EXPECT_EQ(line_of("3 2\n1 2\n2 9\n"), -1);
  EXPECT_EQ(line_of(""), 0);
}

TEST(GraphIoTest, DotOutput) {
  std::ostringstream out;
  write_dot(out, path(2), "P");
  EXPECT_NE(out.str().find("graph P"), std::string::npos);
  EXPECT_NE(out.str().find("0 -- 1"), std::string::npos);
}

}  // namespace
}  // namespace equidim
