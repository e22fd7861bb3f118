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

#include "rigidperc/pebble_game.hpp"

#include <algorithm>
#include <string>

#include "rigidperc/errors.hpp"

namespace rigidperc {

namespace {

constexpr std::uint32_t kNoComponent = 0xffffffffu;

// Out-neighbors in ascending label order.
std::array<Vertex, 2> ordered(const std::array<Vertex, 2>& out,
                              std::uint8_t degree) {
  if (degree == 2 && out[1] < out[0]) return {out[1], out[0]};
  return out;
}

}  // namespace

PebbleGame::PebbleGame(std::size_t vertex_count)
    : out_(vertex_count),
      out_degree_(vertex_count, 0),
      free_pebbles_(2 * vertex_count),
      accepted_adjacency_(vertex_count),
      vertex_components_(vertex_count),
      visit_stamp_(vertex_count, 0),
      mark_stamp_(vertex_count, 0),
      mark_(vertex_count, Mark::kNone),
      parent_(vertex_count, 0) {}

void PebbleGame::add_out(Vertex from, Vertex to) {
  out_[from][out_degree_[from]++] = to;
  --free_pebbles_;
}

void PebbleGame::remove_out(Vertex from, Vertex to) {
  auto& out = out_[from];
  if (out[0] == to) out[0] = out[1];
  --out_degree_[from];
  ++free_pebbles_;
}

// path[0] is the vertex receiving the pebble, path.back() the vertex giving
// it up. Each edge along the path is flipped.
void PebbleGame::reverse_path(std::span<const Vertex> path) {
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    add_out(path[i + 1], path[i]);
    remove_out(path[i], path[i + 1]);
  }
}

bool PebbleGame::gather_pebble(Vertex target, Vertex blocked) {
  if (++visit_epoch_ == 0) {
    std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
    visit_epoch_ = 1;
  }
  visit_stamp_[target] = visit_epoch_;
  visit_stamp_[blocked] = visit_epoch_;
  stack_.clear();
  stack_.push_back(target);
  while (!stack_.empty()) {
    const Vertex x = stack_.back();
    stack_.pop_back();
    const auto next = ordered(out_[x], out_degree_[x]);
    for (std::uint8_t i = 0; i < out_degree_[x]; ++i) {
      const Vertex y = next[i];
      if (visit_stamp_[y] == visit_epoch_) continue;
      visit_stamp_[y] = visit_epoch_;
      parent_[y] = x;
      if (out_degree_[y] < 2) {
        path_.clear();
        for (Vertex z = y; z != target; z = parent_[z]) path_.push_back(z);
        path_.push_back(target);
        std::reverse(path_.begin(), path_.end());
        reverse_path(path_);
        return true;
      }
      stack_.push_back(y);
    }
  }
  return false;
}

bool PebbleGame::share_component(Vertex u, Vertex v) const {
  const auto& a = vertex_components_.at(u);
  const auto& b = vertex_components_.at(v);
  for (std::uint32_t c : a) {
    if (std::find(b.begin(), b.end(), c) != b.end()) return true;
  }
  return false;
}

PebbleGame::Outcome PebbleGame::insert(Vertex u, Vertex v) {
  if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) {
    throw VertexRangeError("edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") outside [0, " +
                           std::to_string(vertex_count()) + ")");
  }
  if (share_component(u, v)) {
    redundant_.push_back(Edge::normalized(u, v));
    return Outcome::kRedundant;
  }
  // Outside a common component four pebbles are always reachable; the
  // fallback keeps the accepted set sparse regardless.
  while (pebbles(u) < 2) {
    if (!gather_pebble(u, v)) {
      redundant_.push_back(Edge::normalized(u, v));
      return Outcome::kRedundant;
    }
  }
  while (pebbles(v) < 2) {
    if (!gather_pebble(v, u)) {
      redundant_.push_back(Edge::normalized(u, v));
      return Outcome::kRedundant;
    }
  }
  add_out(u, v);
  accepted_.push_back(Edge::normalized(u, v));
  accepted_adjacency_[u].push_back(v);
  accepted_adjacency_[v].push_back(u);
  grow_component(u, v);
  return Outcome::kAccepted;
}

// Decides whether `start` can reach a free pebble other than those on u and
// v. If it cannot, every vertex it reaches is marked kInBlock and appended
// to `block`. If it can, the pebble is slid back to `start` so that later
// searches stop there immediately.
bool PebbleGame::classify(Vertex start, Vertex u, Vertex v,
                          std::vector<Vertex>& block) {
  auto marked = [this](Vertex x, Mark m) {
    return mark_stamp_[x] == mark_epoch_ && mark_[x] == m;
  };
  auto set_mark = [this](Vertex x, Mark m) {
    mark_stamp_[x] = mark_epoch_;
    mark_[x] = m;
  };

  if (out_degree_[start] < 2) {
    set_mark(start, Mark::kReachesFree);
    return false;
  }
  if (++visit_epoch_ == 0) {
    std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
    visit_epoch_ = 1;
  }
  visit_stamp_[start] = visit_epoch_;
  visited_.clear();
  visited_.push_back(start);
  stack_.clear();
  stack_.push_back(start);
  while (!stack_.empty()) {
    const Vertex x = stack_.back();
    stack_.pop_back();
    const auto next = ordered(out_[x], out_degree_[x]);
    for (std::uint8_t i = 0; i < out_degree_[x]; ++i) {
      const Vertex y = next[i];
      if (marked(y, Mark::kInBlock) || visit_stamp_[y] == visit_epoch_) {
        continue;
      }
      parent_[y] = x;
      const bool has_pebble = out_degree_[y] < 2 && y != u && y != v;
      if (has_pebble || marked(y, Mark::kReachesFree)) {
        path_.clear();
        for (Vertex z = y; z != start; z = parent_[z]) path_.push_back(z);
        path_.push_back(start);
        std::reverse(path_.begin(), path_.end());
        if (has_pebble) reverse_path(path_);
        for (Vertex z : path_) set_mark(z, Mark::kReachesFree);
        return false;
      }
      visit_stamp_[y] = visit_epoch_;
      visited_.push_back(y);
      stack_.push_back(y);
    }
  }
  for (Vertex z : visited_) {
    set_mark(z, Mark::kInBlock);
    block.push_back(z);
  }
  return true;
}

void PebbleGame::grow_component(Vertex u, Vertex v) {
  if (++mark_epoch_ == 0) {
    std::fill(mark_stamp_.begin(), mark_stamp_.end(), 0);
    mark_epoch_ = 1;
  }
  mark_stamp_[u] = mark_epoch_;
  mark_[u] = Mark::kInBlock;
  mark_stamp_[v] = mark_epoch_;
  mark_[v] = Mark::kInBlock;

  // Every block vertex reaches u or v through block vertices, so walking
  // accepted edges backwards from the block finds all of it.
  std::vector<Vertex> block{u, v};
  for (std::size_t i = 0; i < block.size(); ++i) {
    const Vertex x = block[i];
    for (Vertex y : accepted_adjacency_[x]) {
      if (mark_stamp_[y] == mark_epoch_) continue;
      const auto out = out_neighbors(y);
      if (std::find(out.begin(), out.end(), x) == out.end()) continue;
      classify(y, u, v, block);
    }
  }
  std::sort(block.begin(), block.end());

  // Old components meeting the block in two or more vertices lie inside it.
  if (component_hits_.size() < components_.size()) {
    component_hits_.resize(components_.size(), 0);
  }
  std::vector<std::uint32_t> touched;
  for (Vertex x : block) {
    for (std::uint32_t c : vertex_components_[x]) {
      if (component_hits_[c]++ == 0) touched.push_back(c);
    }
  }
  for (std::uint32_t c : touched) {
    if (component_hits_[c] >= 2) component_alive_[c] = 0;
    component_hits_[c] = 0;
  }
  const auto id = static_cast<std::uint32_t>(components_.size());
  for (Vertex x : block) {
    auto& list = vertex_components_[x];
    std::erase_if(list, [this](std::uint32_t c) { return !component_alive_[c]; });
    list.push_back(id);
  }
  components_.push_back(std::move(block));
  component_alive_.push_back(1);
}

std::vector<std::vector<Vertex>> PebbleGame::component_vertex_sets() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (component_alive_[c]) out.push_back(components_[c]);
  }
  return out;
}

RigidDecomposition PebbleGame::decomposition() const {
  RigidDecomposition d;
  d.vertex_count = vertex_count();
  d.edge_count = accepted_.size() + redundant_.size();

  std::vector<std::uint32_t> slot(components_.size(), kNoComponent);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (!component_alive_[c]) continue;
    slot[c] = static_cast<std::uint32_t>(d.components.size());
    RigidComponent rc;
    rc.vertices = components_[c];
    d.components.push_back(std::move(rc));
  }
  auto assign = [&](const Edge& e) {
    const auto& a = vertex_components_[e.u];
    const auto& b = vertex_components_[e.v];
    for (std::uint32_t c : a) {
      if (std::find(b.begin(), b.end(), c) != b.end()) {
        d.components[slot[c]].edges.push_back(e);
        return;
      }
    }
    throw Error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                ") lies in no component");
  };
  for (const Edge& e : accepted_) assign(e);
  for (const Edge& e : redundant_) assign(e);
  for (auto& rc : d.components) {
    std::sort(rc.edges.begin(), rc.edges.end());
    rc.trivial = rc.edges.size() == 1;
  }
  std::sort(d.components.begin(), d.components.end(),
            [](const RigidComponent& x, const RigidComponent& y) {
              return x.vertices < y.vertices;
            });
  return d;
}

bool PebbleGame::invariants_hold() const {
  const std::size_t n = vertex_count();
  std::size_t pebble_total = 0;
  std::vector<Edge> oriented;
  for (Vertex x = 0; x < n; ++x) {
    if (out_degree_[x] > 2) return false;
    pebble_total += 2 - out_degree_[x];
    for (Vertex y : out_neighbors(x)) oriented.push_back(Edge::normalized(x, y));
  }
  if (pebble_total != free_pebbles_) return false;
  if (pebble_total + accepted_.size() != 2 * n) return false;
  if (n >= 2 && accepted_.size() > 2 * n - 3) return false;
  std::sort(oriented.begin(), oriented.end());
  std::vector<Edge> accepted = accepted_;
  std::sort(accepted.begin(), accepted.end());
  return oriented == accepted;
}

namespace {

PebbleGame play(const Graph& g) {
  PebbleGame game(g.vertex_count());
  for (const Edge& e : g.edges()) game.insert(e.u, e.v);
  return game;
}

void require_two_vertices(const Graph& g, const char* what) {
  if (g.vertex_count() < 2) {
    throw InvalidArgument(std::string(what) + " needs at least 2 vertices");
  }
}

}  // namespace

bool is_sparse_23(const Graph& g) { return play(g).redundant_edges().empty(); }

bool is_tight_23(const Graph& g) {
  require_two_vertices(g, "is_tight_23");
  if (g.edge_count() != 2 * g.vertex_count() - 3) return false;
  return is_sparse_23(g);
}

bool is_rigid(const Graph& g) {
  require_two_vertices(g, "is_rigid");
  return play(g).accepted_edges().size() == 2 * g.vertex_count() - 3;
}

RigidDecomposition rigid_components(const Graph& g) {
  return play(g).decomposition();
}

RigidDecomposition rigid_components(const Graph& g,
                                    std::span<const Edge> insertion_order) {
  std::vector<Edge> order(insertion_order.begin(), insertion_order.end());
  for (Edge& e : order) e = Edge::normalized(e.u, e.v);
  std::vector<Edge> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.sorted_edges()) {
    throw InvalidArgument("insertion order is not a permutation of the edges");
  }
  PebbleGame game(g.vertex_count());
  for (const Edge& e : order) game.insert(e.u, e.v);
  return game.decomposition();
}

Graph henneberg1_extend(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("Henneberg I needs two distinct anchors");
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw VertexRangeError("Henneberg I anchor outside the graph");
  }
  if (!is_tight_23(g)) throw InvalidArgument("Henneberg I needs a Laman graph");
  Graph out = g;
  const Vertex w = out.add_vertex();
  out.add_edge(u, w);
  out.add_edge(v, w);
  return out;
}

Graph random_laman_graph(std::size_t n, RngSeed seed) {
  if (n < 2) throw InvalidArgument("a Laman graph needs at least 2 vertices");
  Rng rng(seed);
  Graph g(n);
  g.add_edge(0, 1);
  for (Vertex w = 2; w < n; ++w) {
    const auto a = static_cast<Vertex>(rng.below(w));
    auto b = static_cast<Vertex>(rng.below(w - 1));
    if (b >= a) ++b;
    g.add_edge(a, w);
    g.add_edge(b, w);
  }
  return g;
}

std::size_t largest_component_size(const RigidDecomposition& d) noexcept {
  std::size_t best = 0;
  for (const auto& c : d.components) best = std::max(best, c.span());
  return best;
}

}  // namespace rigidperc
