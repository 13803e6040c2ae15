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

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Graph container: distances come from Floyd-Warshall,
// corona distances from the closed form over the factors, and every
// optimum from a plain scan over all 2^n subsets.

#ifndef EQUIDIM_TESTS_ORACLES_HPP_
#define EQUIDIM_TESTS_ORACLES_HPP_

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "equidim/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;
inline constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

inline Matrix floyd(const equidim::Graph& g) {
  const int n = g.order();
  Matrix d(n, std::vector<long long>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Distances of G ⊙ H from the factors alone. Base vertex i is i; vertex b
// of the copy on i is n + i * m + b.
inline Matrix corona_distances(const equidim::Graph& g, const equidim::Graph& h) {
  const Matrix dg = floyd(g);
  const int n = g.order();
  const int m = h.order();
  const int total = n + n * m;
  auto base = [&](int x) { return x < n ? x : (x - n) / m; };
  auto inner = [&](int x) { return (x - n) % m; };
  Matrix d(total, std::vector<long long>(total, 0));
  for (int x = 0; x < total; ++x) {
    for (int y = 0; y < total; ++y) {
      if (x == y) continue;
      const bool cx = x >= n;
      const bool cy = y >= n;
      const long long between = dg[base(x)][base(y)];
      if (!cx && !cy) {
        d[x][y] = between;
      } else if (cx != cy) {
        d[x][y] = between + 1;
      } else if (base(x) != base(y)) {
        d[x][y] = between + 2;
      } else {
        d[x][y] = h.adjacent(inner(x), inner(y)) ? 1 : 2;
      }
    }
  }
  return d;
}

inline bool equalizes(const Matrix& d, std::uint64_t s, bool total) {
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!total && ((s >> u & 1) || (s >> v & 1))) continue;
      bool met = false;
      for (int w = 0; w < n && !met; ++w) {
        met = (s >> w & 1) && d[w][u] == d[w][v];
      }
      if (!met) return false;
    }
  }
  return true;
}

// Minimum equalizer size over a distance matrix; -1 when none exists.
inline int min_equalizer(const Matrix& d, bool total = false) {
  const int n = static_cast<int>(d.size());
  int best = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (best >= 0 && size >= best) continue;
    if (equalizes(d, s, total)) best = size;
  }
  return best;
}

inline int xi(const equidim::Graph& g) { return min_equalizer(floyd(g)); }

inline int xi_corona(const equidim::Graph& g, const equidim::Graph& h) {
  return min_equalizer(corona_distances(g, h));
}

// Edges {u, v} with no w at equal distance.
inline std::vector<std::vector<bool>> empty_bisector(const equidim::Graph& g) {
  const Matrix d = floyd(g);
  const int n = g.order();
  std::vector<std::vector<bool>> e(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool any = false;
      for (int w = 0; w < n; ++w) any = any || d[w][u] == d[w][v];
      e[u][v] = !any;
    }
  }
  return e;
}

inline bool covers(const equidim::Graph& g, std::uint64_t s) {
  for (const auto& [u, v] : g.edges()) {
    if (!(s >> u & 1) && !(s >> v & 1)) return false;
  }
  return true;
}

inline bool covers(const std::vector<std::vector<bool>>& adj, std::uint64_t s) {
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v] && !(s >> u & 1) && !(s >> v & 1)) return false;
    }
  }
  return true;
}

// Lexicographic order on equal-size sets: the smaller symmetric-difference
// minimum wins.
inline bool lex_before(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff && (a & (diff & -diff));
}

// Least-size, then lexicographically least, subset satisfying `ok`.
template <typename Ok>
std::uint64_t least(int n, Ok ok) {
  bool found = false;
  std::uint64_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!ok(s)) continue;
    if (!found || std::popcount(s) < std::popcount(best) ||
        (std::popcount(s) == std::popcount(best) && lex_before(s, best))) {
      best = s;
      found = true;
    }
  }
  return best;
}

inline std::uint64_t min_cover(const equidim::Graph& g) {
  return least(g.order(), [&](std::uint64_t s) { return covers(g, s); });
}

inline int clique_number(const equidim::Graph& g) {
  int best = 0;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      for (int v = u + 1; v < n && clique; ++v) {
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline bool forward(const Matrix& d, std::uint64_t x, std::uint64_t y) {
  const int n = static_cast<int>(d.size());
  for (int u = 0; u < n; ++u) {
    if (!(x >> u & 1) || (y >> u & 1)) continue;
    for (int v = 0; v < n; ++v) {
      if (!(y >> v & 1) || (x >> v & 1)) continue;
      bool met = false;
      for (int w = 0; w < n && !met; ++w) met = d[w][u] == d[w][v] + 1;
      if (!met) return false;
    }
  }
  return true;
}

// min |X ∩ Y| over forward-equalized pairs of covers of Ĝ with X ∪ Y = V.
inline int beta_star(const equidim::Graph& g) {
  const Matrix d = floyd(g);
  const auto ghat = empty_bisector(g);
  const int n = g.order();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  int best = n + 1;
  for (std::uint64_t x = 0; x <= all; ++x) {
    if (!covers(ghat, x)) continue;
    for (std::uint64_t y = 0; y <= all; ++y) {
      if ((x | y) != all || !covers(ghat, y)) continue;
      if (std::popcount(x & y) < best && forward(d, x, y)) {
        best = std::popcount(x & y);
      }
    }
  }
  return best;
}

}  // namespace oracle

#endif  // EQUIDIM_TESTS_ORACLES_HPP_
