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

#ifndef RIGIDPERC_PEBBLE_GAME_HPP_
#define RIGIDPERC_PEBBLE_GAME_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rigidperc/graph.hpp"
#include "rigidperc/rng.hpp"

namespace rigidperc {

struct RigidComponent {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
  bool trivial = false;          // exactly one edge

  std::size_t span() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  friend bool operator==(const RigidComponent&, const RigidComponent&) = default;
};

// Partition of a graph's edges into rigid components, sorted by vertex list.
// Isolated vertices belong to no component.
struct RigidDecomposition {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<RigidComponent> components;

  friend bool operator==(const RigidDecomposition&,
                         const RigidDecomposition&) = default;
};

// Incremental (2,3)-pebble game with rigid-component maintenance.
//
// Every vertex owns two pebbles. An accepted edge is oriented away from the
// endpoint that paid a pebble for it, so for every vertex
//   out_degree(v) + pebbles(v) == 2
// and the accepted edge set is (2,3)-sparse. An edge whose endpoints already
// share a component is redundant and is recorded without being oriented.
//
// Components are the maximal tight vertex sets of the accepted edges. After
// each acceptance the maximal tight set around the new edge is the set of
// vertices that cannot reach a free pebble other than the three sitting on
// its endpoints; components with two or more vertices inside it are absorbed.
class PebbleGame {
 public:
  enum class Outcome { kAccepted, kRedundant };

  explicit PebbleGame(std::size_t vertex_count);

  // Throws SelfLoopError or VertexRangeError. Duplicate edges are not
  // detected here; they come out redundant.
  Outcome insert(Vertex u, Vertex v);

  std::size_t vertex_count() const noexcept { return out_degree_.size(); }
  int pebbles(Vertex v) const { return 2 - out_degree_.at(v); }
  std::size_t free_pebbles() const noexcept { return free_pebbles_; }
  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_.at(v).data(), out_degree_.at(v)};
  }

  const std::vector<Edge>& accepted_edges() const noexcept { return accepted_; }
  const std::vector<Edge>& redundant_edges() const noexcept { return redundant_; }

  bool share_component(Vertex u, Vertex v) const;

  // Live components as sorted vertex lists, in creation order.
  std::vector<std::vector<Vertex>> component_vertex_sets() const;

  // Assigns every edge processed so far to the unique component containing
  // both endpoints.
  RigidDecomposition decomposition() const;

  // Pebble bookkeeping and orientation consistency; intended for tests.
  bool invariants_hold() const;

 private:
  enum class Mark : std::uint8_t { kNone, kInBlock, kReachesFree };

  bool gather_pebble(Vertex target, Vertex blocked);
  void reverse_path(std::span<const Vertex> path);
  void add_out(Vertex from, Vertex to);
  void remove_out(Vertex from, Vertex to);
  void grow_component(Vertex u, Vertex v);
  bool classify(Vertex start, Vertex u, Vertex v, std::vector<Vertex>& block);

  std::vector<std::array<Vertex, 2>> out_;
  std::vector<std::uint8_t> out_degree_;
  std::size_t free_pebbles_ = 0;

  std::vector<Edge> accepted_;
  std::vector<Edge> redundant_;
  std::vector<std::vector<Vertex>> accepted_adjacency_;

  std::vector<std::vector<Vertex>> components_;
  std::vector<std::uint8_t> component_alive_;
  std::vector<std::vector<std::uint32_t>> vertex_components_;

  // Scratch space reused across searches; entries are valid when the stamp
  // matches the current epoch.
  std::vector<std::uint32_t> visit_stamp_;
  std::uint32_t visit_epoch_ = 0;
  std::vector<std::uint32_t> mark_stamp_;
  std::vector<Mark> mark_;
  std::uint32_t mark_epoch_ = 0;
  std::vector<Vertex> parent_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> path_;
  std::vector<Vertex> visited_;
  std::vector<std::uint32_t> component_hits_;
};

// True iff every induced subgraph on n' >= 2 vertices has at most 2n' - 3
// edges.
bool is_sparse_23(const Graph& g);

// Sparse with exactly 2n - 3 edges (Laman). Throws InvalidArgument if n < 2.
bool is_tight_23(const Graph& g);

// Contains a spanning Laman subgraph. Throws InvalidArgument if n < 2.
bool is_rigid(const Graph& g);

// Unique decomposition into inclusion-maximal rigid induced subgraphs.
RigidDecomposition rigid_components(const Graph& g);

// Same decomposition, processing edges in the given order.
RigidDecomposition rigid_components(const Graph& g,
                                    std::span<const Edge> insertion_order);

// Henneberg I move: new vertex n joined to u and v. Throws InvalidArgument
// unless g is Laman and u, v are distinct existing vertices.
Graph henneberg1_extend(const Graph& g, Vertex u, Vertex v);

// Laman graph on n >= 2 vertices grown from a single edge by random
// Henneberg I moves.
Graph random_laman_graph(std::size_t n, RngSeed seed);

std::size_t largest_component_size(const RigidDecomposition& d) noexcept;

}  // namespace rigidperc

#endif  // RIGIDPERC_PEBBLE_GAME_HPP_
