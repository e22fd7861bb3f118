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

#include "rigidperc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "rigidperc/errors.hpp"

namespace rigidperc {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw VertexRangeError("edge (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ") outside [0, " +
                             std::to_string(vertex_count) + ")");
    }
    sorted.push_back(Edge::normalized(e.u, e.v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->u) +
                             ", " + std::to_string(dup->v) + ")");
  }
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    const Edge n = Edge::normalized(e.u, e.v);
    g.edges_.push_back(n);
    g.adjacency_[n.u].push_back(n.v);
    g.adjacency_[n.v].push_back(n.u);
  }
  return g;
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                               : adjacency_[v];
  const Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

void Graph::check_new_edge(Vertex u, Vertex v) const {
  if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) {
    throw VertexRangeError("edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") outside [0, " +
                           std::to_string(vertex_count()) + ")");
  }
  if (has_edge(u, v)) {
    throw DuplicateEdgeError("duplicate edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_new_edge(u, v);
  edges_.push_back(Edge::normalized(u, v));
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph copy = *this;
  copy.add_edge(u, v);
  return copy;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() &&
         a.edge_count() == b.edge_count() &&
         a.sorted_edges() == b.sorted_edges();
}

Graph sample_gnp(std::size_t n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  if (n >= 2 && p > 0.0) {
    if (p >= 1.0) {
      edges.reserve(n * (n - 1) / 2);
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
      }
    } else {
      // Pairs are visited in the order (0,1), (0,2), (1,2), (0,3), ...; the
      // gap to the next included pair is geometric with parameter p.
      Rng rng(seed);
      const double log_q = std::log1p(-p);
      const double pair_count = 0.5 * static_cast<double>(n) *
                                static_cast<double>(n - 1);
      edges.reserve(static_cast<std::size_t>(pair_count * p * 1.1) + 16);
      std::uint64_t v = 1;
      std::int64_t w = -1;
      while (v < n) {
        const double skip = std::floor(std::log(rng.uniform_open_low()) / log_q);
        if (skip >= pair_count) break;
        w += 1 + static_cast<std::int64_t>(skip);
        while (w >= static_cast<std::int64_t>(v) && v < n) {
          w -= static_cast<std::int64_t>(v);
          ++v;
        }
        if (v < n) {
          edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

double coupled_edge_uniform(RngSeed seed, Vertex u, Vertex v) noexcept {
  const Edge e = Edge::normalized(u, v);
  return bits_to_unit(derive_seed(seed, e.u, e.v).value);
}

Graph sample_gnp_coupled(std::size_t n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  const RngSeed keyed = derive_seed(seed, 0x636f75706c6564ULL);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coupled_edge_uniform(keyed, u, v) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t count_triangles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Orient each edge toward the endpoint of higher (degree, label) rank so
  // every triangle is counted once from its lowest-ranked vertex.
  auto ranks_below = [&g](Vertex a, Vertex b) {
    const std::size_t da = g.degree(a);
    const std::size_t db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::vector<Vertex>> forward(n);
  for (const Edge& e : g.edges()) {
    if (ranks_below(e.u, e.v)) {
      forward[e.u].push_back(e.v);
    } else {
      forward[e.v].push_back(e.u);
    }
  }
  std::vector<std::uint8_t> mark(n, 0);
  std::uint64_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : forward[v]) mark[w] = 1;
    for (Vertex w : forward[v]) {
      for (Vertex x : forward[w]) count += mark[x];
    }
    for (Vertex w : forward[v]) mark[w] = 0;
  }
  return count;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.sorted_edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {

// Parses whitespace-separated unsigned integers; false on any other content.
bool parse_fields(std::string_view line, std::vector<std::uint64_t>& fields) {
  fields.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(),
                                     value);
    if (ec != std::errc{}) return false;
    const auto next = static_cast<std::size_t>(ptr - line.data());
    if (next < line.size() && line[next] != ' ' && line[next] != '\t' &&
        line[next] != '\r') {
      return false;
    }
    fields.push_back(value);
    i = next;
  }
  return true;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;

  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_blank(line)) return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError(line_no, "missing header");
  if (!parse_fields(line, fields) || fields.size() != 2) {
    throw ParseError(line_no, "header must be \"n m\"");
  }
  const std::uint64_t n = fields[0];
  const std::uint64_t m = fields[1];
  if (n > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line_no, "vertex count too large");
  }
  if (n >= 2 ? m > n * (n - 1) / 2 : m > 0) {
    throw ParseError(line_no, "edge count exceeds n(n-1)/2");
  }

  Graph g(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_content_line()) {
      throw ParseError(line_no, "expected " + std::to_string(m) +
                                    " edge lines, found " + std::to_string(i));
    }
    if (!parse_fields(line, fields) || fields.size() != 2) {
      throw ParseError(line_no, "edge line must be \"u v\"");
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (fields[0] >= n || fields[1] >= n) {
      throw VertexRangeError(where + "endpoint outside [0, " +
                             std::to_string(n) + ")");
    }
    const auto u = static_cast<Vertex>(fields[0]);
    const auto v = static_cast<Vertex>(fields[1]);
    try {
      g.add_edge(u, v);
    } catch (const SelfLoopError& e) {
      throw SelfLoopError(where + e.what());
    } catch (const DuplicateEdgeError& e) {
      throw DuplicateEdgeError(where + e.what());
    }
  }
  if (next_content_line()) {
    throw ParseError(line_no, "trailing content after " + std::to_string(m) +
                                  " edge lines");
  }
  return g;
}

}  // namespace rigidperc
