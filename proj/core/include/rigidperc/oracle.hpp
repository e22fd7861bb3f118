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

#ifndef RIGIDPERC_ORACLE_HPP_
#define RIGIDPERC_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "rigidperc/graph.hpp"
#include "rigidperc/rng.hpp"

// Ground-truth checks that share no code with the pebble game: exhaustive
// subset enumeration for tiny graphs and a numerical rigidity-matrix rank
// test for larger ones.
namespace rigidperc::oracle {

inline constexpr std::size_t kMaxSparsityVertices = 20;
inline constexpr std::size_t kMaxRigidityVertices = 8;
inline constexpr std::size_t kMaxDensityScanSize = 20;
inline constexpr std::size_t kMaxDensityScanVertices = 64;
inline constexpr double kRankRelativeTolerance = 1e-8;

enum class Method { kEnumeration, kMatrixRank };

struct Verdict {
  bool is_sparse = false;
  bool is_tight = false;
  bool is_rigid = false;
  // Sorted vertex lists of the inclusion-maximal rigid induced subgraphs,
  // sorted lexicographically.
  std::vector<std::vector<Vertex>> components;
  Method method = Method::kEnumeration;
};

// Checks every vertex subset of size >= 2. Throws OracleLimitError for
// n > kMaxSparsityVertices.
bool brute_is_sparse(const Graph& g);

// Greedy basis of the (2,3)-sparsity matroid, each step certified by subset
// enumeration; rigid iff the basis has 2n - 3 edges. Since all maximal
// sparse edge sets have equal size this is the same as asking whether some
// (2n-3)-subset of E is sparse. Throws OracleLimitError for
// n > kMaxRigidityVertices and InvalidArgument for n < 2.
bool brute_is_rigid(const Graph& g);

// The literal definition: tries every (2n-3)-subset of E. Exponential in m;
// only for cross-checking brute_is_rigid on very small graphs (m <= 20).
bool brute_is_rigid_by_subsets(const Graph& g);

// Inclusion-maximal vertex sets whose induced subgraph is rigid, found by
// enumerating all vertex subsets. Throws OracleLimitError for
// n > kMaxRigidityVertices.
Verdict brute_components(const Graph& g);

// Numerical rank of the m x 2n rigidity matrix at coordinates drawn
// uniformly from [0,1]^2. Singular values below kRankRelativeTolerance times
// the largest count as zero.
std::size_t rigidity_matrix_rank(const Graph& g, RngSeed seed);

// True iff any of `attempts` independent draws reaches rank 2n - 3. Errors
// are one-sided: a rigid graph can be reported flexible only if every draw
// is degenerate. Throws InvalidArgument for n < 2 or attempts < 1.
bool rank_is_rigid(const Graph& g, int attempts, RngSeed seed);

// Every vertex subset S with 2 <= |S| <= max_size spanning at least
// a * |S| edges, ordered by size then lexicographically. Throws
// OracleLimitError if max_size > kMaxDensityScanSize or
// n > kMaxDensityScanVertices.
std::vector<std::vector<Vertex>> density_scan(const Graph& g, double a,
                                              std::size_t max_size);

}  // namespace rigidperc::oracle

#endif  // RIGIDPERC_ORACLE_HPP_
