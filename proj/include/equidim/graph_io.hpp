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

#ifndef EQUIDIM_GRAPH_IO_HPP_
#define EQUIDIM_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "equidim/graph.hpp"

namespace equidim {

// Edge-list text format:
//
//   # comment
//   n m
//   u v        (m lines, integer labels)
//
// Blank lines and everything after '#' are ignored. Labels are mapped to
// internal indices as follows:
//   * every label in [0, n-1]  -> identity (0-indexed file);
//   * else every label in [1, n] -> label - 1 (1-indexed file);
//   * else the distinct labels must number exactly n and are assigned
//     indices in ascending order.
// The parsed graph remembers the labels, so writing it back reproduces the
// user's numbering. Throws ParseError carrying the offending line.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Reads `path`, or standard input when path is "-".
Graph load_edge_list(const std::string& path);

// Writes "n m" then one "u v" line per edge (u < v by index, sorted), using
// vertex labels.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

// Graphviz rendering; no layout hints.
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");

}  // namespace equidim

#endif  // EQUIDIM_GRAPH_IO_HPP_
