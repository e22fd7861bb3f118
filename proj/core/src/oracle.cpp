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

#include "rigidperc/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rigidperc/errors.hpp"

namespace rigidperc::oracle {

namespace {

using Mask = std::uint32_t;

void require_at_most(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw OracleLimitError(std::string(what) + ": n = " +
                           std::to_string(g.vertex_count()) +
                           " exceeds the enumeration cap of " +
                           std::to_string(cap));
  }
}

std::vector<Mask> adjacency_masks(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : edges) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

int induced_edges(const std::vector<Mask>& adj, Mask subset) {
  int twice = 0;
  for (Mask rest = subset; rest != 0; rest &= rest - 1) {
    twice += std::popcount(adj[std::countr_zero(rest)] & subset);
  }
  return twice / 2;
}

bool masks_sparse(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k >= 2 && induced_edges(adj, s) > 2 * k - 3) return false;
  }
  return true;
}

// Size of a maximal (2,3)-sparse subset of `edges`, built greedily. Adding
// edge ab can only overload vertex sets containing both a and b, so only
// those are rechecked.
std::size_t greedy_sparse_rank(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Mask> adj(n, 0);
  std::size_t rank = 0;
  const Mask all = (Mask{1} << n) - 1;
  for (const Edge& e : edges) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
    const Mask ends = (Mask{1} << e.u) | (Mask{1} << e.v);
    const Mask others = all & ~ends;
    bool ok = true;
    // Walk every subset of `others`.
    for (Mask t = others;; t = (t - 1) & others) {
      const Mask s = t | ends;
      if (induced_edges(adj, s) > 2 * std::popcount(s) - 3) {
        ok = false;
        break;
      }
      if (t == 0) break;
    }
    if (ok) {
      ++rank;
    } else {
      adj[e.u] &= ~(Mask{1} << e.v);
      adj[e.v] &= ~(Mask{1} << e.u);
    }
  }
  return rank;
}

// Edges of the subgraph induced by `subset`, relabeled to 0..|subset|-1.
std::vector<Edge> induced_relabeled(const Graph& g, Mask subset) {
  std::vector<Vertex> label(g.vertex_count(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (subset >> v & 1) label[v] = next++;
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((subset >> e.u & 1) && (subset >> e.v & 1)) {
      out.push_back({label[e.u], label[e.v]});
    }
  }
  return out;
}

std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask != 0; mask &= mask - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  }
  return out;
}

}  // namespace

bool brute_is_sparse(const Graph& g) {
  require_at_most(g, kMaxSparsityVertices, "brute_is_sparse");
  return masks_sparse(adjacency_masks(g.vertex_count(), g.edges()));
}

bool brute_is_rigid(const Graph& g) {
  require_at_most(g, kMaxRigidityVertices, "brute_is_rigid");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidArgument("brute_is_rigid needs at least 2 vertices");
  if (g.edge_count() < 2 * n - 3) return false;
  return greedy_sparse_rank(n, g.edges()) == 2 * n - 3;
}

bool brute_is_rigid_by_subsets(const Graph& g) {
  require_at_most(g, kMaxRigidityVertices, "brute_is_rigid_by_subsets");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n < 2) {
    throw InvalidArgument("brute_is_rigid_by_subsets needs at least 2 vertices");
  }
  if (m > 20) throw OracleLimitError("brute_is_rigid_by_subsets: m > 20");
  const std::size_t r = 2 * n - 3;
  if (m < r) return false;
  const auto& edges = g.edges();
  // Gosper's hack over r-element subsets of the m edges.
  for (Mask pick = (Mask{1} << r) - 1; pick < (Mask{1} << m);) {
    std::vector<Edge> chosen;
    for (Mask rest = pick; rest != 0; rest &= rest - 1) {
      chosen.push_back(edges[std::countr_zero(rest)]);
    }
    if (masks_sparse(adjacency_masks(n, chosen))) return true;
    if (pick == 0) break;
    const Mask low = pick & (0 - pick);
    const Mask ripple = pick + low;
    pick = (((ripple ^ pick) >> 2) / low) | ripple;
  }
  return false;
}

Verdict brute_components(const Graph& g) {
  require_at_most(g, kMaxRigidityVertices, "brute_components");
  const std::size_t n = g.vertex_count();
  Verdict verdict;
  verdict.method = Method::kEnumeration;
  if (n < 2) return verdict;

  const auto adj = adjacency_masks(n, g.edges());
  verdict.is_sparse = masks_sparse(adj);
  verdict.is_tight = verdict.is_sparse && g.edge_count() == 2 * n - 3;
  verdict.is_rigid = brute_is_rigid(g);

  std::vector<Mask> rigid_sets;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < 2 || induced_edges(adj, s) < 2 * k - 3) continue;
    if (greedy_sparse_rank(static_cast<std::size_t>(k),
                           induced_relabeled(g, s)) ==
        static_cast<std::size_t>(2 * k - 3)) {
      rigid_sets.push_back(s);
    }
  }
  std::sort(rigid_sets.begin(), rigid_sets.end(), [](Mask a, Mask b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<Mask> maximal;
  for (Mask s : rigid_sets) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [s](Mask big) { return (s & ~big) == 0; });
    if (!covered) maximal.push_back(s);
  }
  for (Mask s : maximal) verdict.components.push_back(members(s));
  std::sort(verdict.components.begin(), verdict.components.end());
  return verdict;
}

std::size_t rigidity_matrix_rank(const Graph& g, RngSeed seed) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m == 0) return 0;
  Rng rng(seed);
  Eigen::MatrixX2d position(static_cast<Eigen::Index>(n), 2);
  for (Eigen::Index i = 0; i < position.rows(); ++i) {
    position(i, 0) = rng.uniform();
    position(i, 1) = rng.uniform();
  }
  Eigen::MatrixXd rigidity = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(2 * n));
  for (std::size_t row = 0; row < m; ++row) {
    const Edge& e = g.edges()[row];
    const Eigen::RowVector2d d = position.row(e.u) - position.row(e.v);
    const auto r = static_cast<Eigen::Index>(row);
    rigidity.block<1, 2>(r, 2 * static_cast<Eigen::Index>(e.u)) = d;
    rigidity.block<1, 2>(r, 2 * static_cast<Eigen::Index>(e.v)) = -d;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(rigidity);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = kRankRelativeTolerance * sigma(0);
  return static_cast<std::size_t>((sigma.array() > cutoff).count());
}

bool rank_is_rigid(const Graph& g, int attempts, RngSeed seed) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidArgument("rank_is_rigid needs at least 2 vertices");
  if (attempts < 1) throw InvalidArgument("rank_is_rigid needs attempts >= 1");
  if (g.edge_count() < 2 * n - 3) return false;
  for (int i = 0; i < attempts; ++i) {
    if (rigidity_matrix_rank(g, derive_seed(seed, i)) == 2 * n - 3) return true;
  }
  return false;
}

std::vector<std::vector<Vertex>> density_scan(const Graph& g, double a,
                                              std::size_t max_size) {
  if (max_size > kMaxDensityScanSize) {
    throw OracleLimitError("density_scan: max_size exceeds " +
                           std::to_string(kMaxDensityScanSize));
  }
  const std::size_t n = g.vertex_count();
  if (n > kMaxDensityScanVertices) {
    throw OracleLimitError("density_scan: n exceeds " +
                           std::to_string(kMaxDensityScanVertices));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::vector<Vertex>> found;
  const std::size_t top = std::min(max_size, n);
  // Depth-first over increasing vertex sequences, tracking induced edges.
  struct Frame {
    std::uint64_t set;
    Vertex next;
    int edges;
  };
  for (std::size_t size = 2; size <= top; ++size) {
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      const auto have = static_cast<std::size_t>(std::popcount(f.set));
      if (have == size) {
        if (f.edges >= a * static_cast<double>(size)) {
          found.push_back(members(f.set));
        }
        continue;
      }
      // Push in reverse so lower labels are expanded first.
      for (Vertex v = static_cast<Vertex>(n - (size - have)) + 1; v-- > f.next;) {
        stack.push_back({f.set | std::uint64_t{1} << v, v + 1,
                         f.edges + std::popcount(adj[v] & f.set)});
      }
    }
  }
  return found;
}

}  // namespace rigidperc::oracle
