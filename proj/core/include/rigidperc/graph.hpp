// Copyright 2026 The rigidperc Authors
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

#ifndef RIGIDPERC_GRAPH_HPP_
#define RIGIDPERC_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rigidperc/rng.hpp"

namespace rigidperc {

using Vertex = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge normalized(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Edges are kept in insertion order; equality compares edge sets, so two
// graphs built from the same edges in a different order compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Validates every edge. Throws SelfLoopError, VertexRangeError or
  // DuplicateEdgeError.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Edge> sorted_edges() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const noexcept;

  // Throws SelfLoopError, VertexRangeError or DuplicateEdgeError; the graph
  // is unchanged on error.
  void add_edge(Vertex u, Vertex v);

  // Copy of this graph with one more edge.
  Graph with_edge(Vertex u, Vertex v) const;

  // Appends an isolated vertex and returns its label.
  Vertex add_vertex();

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_new_edge(Vertex u, Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Erdos-Renyi G(n, p). Every one of the n(n-1)/2 pairs is included
// independently with probability p. Uses geometric skips between included
// pairs, so the cost is O(n + m). Throws InvalidArgument unless 0 <= p <= 1.
Graph sample_gnp(std::size_t n, double p, RngSeed seed);

// G(n, p) where pair {u, v} is included iff U(seed, u, v) < p for a uniform
// keyed only by (seed, u, v). Samples for different p under one seed are
// therefore nested. O(n^2).
Graph sample_gnp_coupled(std::size_t n, double p, RngSeed seed);

// The shared uniform used by sample_gnp_coupled.
double coupled_edge_uniform(RngSeed seed, Vertex u, Vertex v) noexcept;

std::uint64_t count_triangles(const Graph& g);

// Text interchange format: header "n m", then m lines "u v" with u < v,
// sorted lexicographically, every line newline-terminated.
void write_edge_list(const Graph& g, std::ostream& out);

// Accepts the format above; endpoint order within a line and blank lines are
// tolerated. Throws ParseError on malformed or missing lines, and
// VertexRangeError, SelfLoopError or DuplicateEdgeError (message prefixed with
// the line number) on bad edges.
Graph read_edge_list(std::istream& in);

}  // namespace rigidperc

#endif  // RIGIDPERC_GRAPH_HPP_
