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

#include "equidim/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "equidim/errors.hpp"

namespace equidim {

namespace {

struct RawEdge {
  Label u;
  Label v;
  int line;
};

// Splits a line into integer tokens; false if there is a non-integer token.
bool tokenize(const std::string& line, std::vector<Label>& out) {
  out.clear();
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(token, &used));
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<Label> tokens;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  int header_line = 0;
  std::vector<RawEdge> raw;

  while (std::getline(in, line)) {
    ++line_no;
    if (!tokenize(line, tokens)) {
      throw ParseError("expected integers, got '" + line + "'", line_no);
    }
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 2) throw ParseError("header must be 'n m'", line_no);
      n = tokens[0];
      m = tokens[1];
      header_line = line_no;
      if (n < 1) throw ParseError("graph order must be at least 1", line_no);
      if (m < 0) throw ParseError("edge count must be nonnegative", line_no);
      continue;
    }
    if (tokens.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
    if (tokens[0] == tokens[1]) {
      throw ParseError("self-loop on label " + std::to_string(tokens[0]),
                       line_no);
    }
    raw.push_back({tokens[0], tokens[1], line_no});
  }
  if (n < 0) throw ParseError("missing 'n m' header", 0);
  if (static_cast<long long>(raw.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) +
                         " edges but found " + std::to_string(raw.size()),
                     header_line);
  }

  Label lo = 0;
  Label hi = 0;
  std::map<Label, int> distinct;
  for (const RawEdge& e : raw) {
    for (Label l : {e.u, e.v}) distinct.emplace(l, e.line);
  }
  if (!distinct.empty()) {
    lo = distinct.begin()->first;
    hi = distinct.rbegin()->first;
  }

  const int order = static_cast<int>(n);
  std::vector<Label> labels(order);
  std::map<Label, int> index;
  if (distinct.empty() || (lo >= 0 && hi <= n - 1)) {
    for (int i = 0; i < order; ++i) labels[i] = i;
  } else if (lo >= 1 && hi <= n) {
    for (int i = 0; i < order; ++i) labels[i] = i + 1;
  } else {
    if (static_cast<long long>(distinct.size()) != n) {
      // Blame the first edge line holding a label outside both ranges.
      Label label = raw.front().u;
      int where = raw.front().line;
      for (const RawEdge& e : raw) {
        auto out_of_range = [n](Label l) { return l < 0 || l > n; };
        if (out_of_range(e.u) || out_of_range(e.v)) {
          label = out_of_range(e.u) ? e.u : e.v;
          where = e.line;
          break;
        }
      }
      throw ParseError("label " + std::to_string(label) +
                           " does not fit 0.." + std::to_string(n - 1) +
                           " or 1.." + std::to_string(n) + ", and the " +
                           std::to_string(distinct.size()) +
                           " distinct labels do not number n",
                       where);
    }
    int i = 0;
    for (const auto& [label, where] : distinct) labels[i++] = label;
  }
  for (int i = 0; i < order; ++i) index[labels[i]] = i;

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) {
      throw ParseError("label outside the vertex range", e.line);
    }
    edges.emplace_back(iu->second, iv->second);
  }
  return Graph(order, edges, std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << g.label(v) << ";\n";
  for (const auto& [u, v] : g.edges()) {
    out << "  " << g.label(u) << " -- " << g.label(v) << ";\n";
  }
  out << "}\n";
}

}  // namespace equidim
