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

#ifndef RIGIDPERC_TESTS_TEST_GRAPHS_HPP_
#define RIGIDPERC_TESTS_TEST_GRAPHS_HPP_

#include <cstdint>
#include <vector>

#include "rigidperc/graph.hpp"

// Small named graphs and brute-force helpers shared by the test suites.
namespace rigidperc::testing_graphs {

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph triangle() { return complete(3); }

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph k4_minus_edge() {
  return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Graph two_disjoint_triangles() {
  return Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// Two triangles joined by two disjoint edges: flexible, with four rigid
// components (both triangles and both connecting edges).
inline Graph two_triangles_two_bridges() {
  Graph g = two_disjoint_triangles();
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  return g;
}

inline Graph triangles_sharing_vertex() {
  return Graph::from_edges(
      5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph triangle_plus_hinged_vertex() {
  return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

// Graph on n vertices whose edges are the set bits of `code` over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_pair_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (code >> bit & 1) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::uint64_t brute_triangles(const Graph& g) {
  std::uint64_t count = 0;
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        count += g.has_edge(a, c) && g.has_edge(b, c) ? 1 : 0;
      }
    }
  }
  return count;
}

}  // namespace rigidperc::testing_graphs

#endif  // RIGIDPERC_TESTS_TEST_GRAPHS_HPP_
