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

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "rigidperc/errors.hpp"
#include "rigidperc/rng.hpp"
#include "test_graphs.hpp"

namespace rigidperc {
namespace {

TEST(GraphTest, NewGraphHasNoEdges) {
  Graph empty(0);
  EXPECT_EQ(empty.vertex_count(), 0u);
  EXPECT_EQ(empty.edge_count(), 0u);

  Graph five(5);
  EXPECT_EQ(five.vertex_count(), 5u);
  EXPECT_EQ(five.edge_count(), 0u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(five.degree(v), 0u);
}

TEST(GraphTest, TriangleFromNewGraph) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(GraphTest, AddEdgeErrorsAreDistinct) {
  Graph tri = testing_graphs::triangle();
  EXPECT_THROW(tri.add_edge(0, 1), DuplicateEdgeError);
  EXPECT_THROW(tri.add_edge(1, 0), DuplicateEdgeError);
  EXPECT_THROW(tri.add_edge(2, 2), SelfLoopError);
  EXPECT_THROW(tri.add_edge(0, 3), VertexRangeError);
  EXPECT_EQ(tri.edge_count(), 3u);
}

TEST(GraphTest, PathExtension) {
  Graph g(3);
  g.add_edge(0, 1);
  const Graph path = g.with_edge(1, 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(path.edge_count(), 2u);
  EXPECT_TRUE(path.has_edge(0, 1));
  EXPECT_TRUE(path.has_edge(1, 2));
}

TEST(GraphTest, EqualityIgnoresInsertionOrder) {
  const Graph a = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}, {1, 2}});
  const Graph b = Graph::from_edges(4, std::vector<Edge>{{3, 2}, {1, 0}, {2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Graph::from_edges(5, a.edges()));
}

TEST(GraphTest, FromEdgesValidates) {
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}),
               DuplicateEdgeError);
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), SelfLoopError);
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), VertexRangeError);
}

TEST(SampleGnpTest, ExtremeProbabilities) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(sample_gnp(10, 0.0, RngSeed{s}).edge_count(), 0u);
    EXPECT_EQ(sample_gnp(10, 1.0, RngSeed{s}).edge_count(), 45u);
    EXPECT_EQ(sample_gnp_coupled(10, 0.0, RngSeed{s}).edge_count(), 0u);
    EXPECT_EQ(sample_gnp_coupled(10, 1.0, RngSeed{s}).edge_count(), 45u);
  }
}

TEST(SampleGnpTest, RejectsBadProbability) {
  EXPECT_THROW(sample_gnp(10, -0.1, RngSeed{1}), InvalidArgument);
  EXPECT_THROW(sample_gnp(10, 1.5, RngSeed{1}), InvalidArgument);
  EXPECT_THROW(sample_gnp(10, std::nan(""), RngSeed{1}), InvalidArgument);
}

TEST(SampleGnpTest, DeterministicPerSeed) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph a = sample_gnp(300, 4.5 / 300, RngSeed{s});
    const Graph b = sample_gnp(300, 4.5 / 300, RngSeed{s});
    EXPECT_EQ(a.sorted_edges(), b.sorted_edges());
  }
  EXPECT_NE(sample_gnp(300, 0.02, RngSeed{1}).sorted_edges(),
            sample_gnp(300, 0.02, RngSeed{2}).sorted_edges());
}

// Mean of Binomial(C(1000, 2), 4.5/1000) is 499500 * 0.0045 = 2247.75; the
// mean of 200 draws has standard deviation sqrt(N p (1-p) / 200).
TEST(SampleGnpTest, EdgeCountMatchesBinomialMean) {
  const std::size_t n = 1000;
  const double p = 4.5 / 1000.0;
  const double pairs = 499500.0;
  double total = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    total += static_cast<double>(sample_gnp(n, p, RngSeed{s}).edge_count());
  }
  const double mean = total / 200.0;
  const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / 200.0);
  EXPECT_NEAR(mean, 2247.75, 3.0 * sd_of_mean);
}

// Each pair should be included with probability p; check the marginal of a
// few specific pairs, including the first and last in the skip order.
TEST(SampleGnpTest, PairMarginals) {
  const std::size_t n = 30;
  const double p = 0.1;
  const int draws = 20000;
  int first = 0, last = 0, middle = 0;
  for (int s = 0; s < draws; ++s) {
    const Graph g = sample_gnp(n, p, RngSeed{static_cast<std::uint64_t>(s)});
    first += g.has_edge(0, 1);
    last += g.has_edge(28, 29);
    middle += g.has_edge(7, 19);
  }
  const double sd = std::sqrt(p * (1 - p) / draws);
  EXPECT_NEAR(first / double(draws), p, 4 * sd);
  EXPECT_NEAR(last / double(draws), p, 4 * sd);
  EXPECT_NEAR(middle / double(draws), p, 4 * sd);
}

TEST(SampleGnpTest, CoupledSamplesAreNested) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph lo = sample_gnp_coupled(200, 2.0 / 200, RngSeed{s});
    const Graph hi = sample_gnp_coupled(200, 4.5 / 200, RngSeed{s});
    for (const Edge& e : lo.edges()) EXPECT_TRUE(hi.has_edge(e.u, e.v));
    EXPECT_LE(lo.edge_count(), hi.edge_count());
  }
}

TEST(CountTrianglesTest, SmallCases) {
  EXPECT_EQ(count_triangles(testing_graphs::triangle()), 1u);
  EXPECT_EQ(count_triangles(testing_graphs::complete(4)), 4u);
  EXPECT_EQ(count_triangles(testing_graphs::two_disjoint_triangles()), 2u);
  EXPECT_EQ(count_triangles(testing_graphs::complete(6)), 20u);
  EXPECT_EQ(count_triangles(Graph(7)), 0u);
}

TEST(CountTrianglesTest, AgreesWithTripleEnumeration) {
  Rng rng(RngSeed{99});
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(48);
    const double p = 0.05 + 0.5 * rng.uniform();
    const Graph g = sample_gnp(n, p, RngSeed{rng.next()});
    EXPECT_EQ(count_triangles(g), testing_graphs::brute_triangles(g))
        << "n=" << n << " p=" << p;
  }
}

TEST(EdgeListTest, TriangleFormat) {
  std::ostringstream out;
  write_edge_list(testing_graphs::triangle(), out);
  EXPECT_EQ(out.str(), "3 3\n0 1\n0 2\n1 2\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in), testing_graphs::triangle());
}

TEST(EdgeListTest, EmptyGraph) {
  std::ostringstream out;
  write_edge_list(Graph(4), out);
  EXPECT_EQ(out.str(), "4 0\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in), Graph(4));
}

TEST(EdgeListTest, ReadErrors) {
  auto read = [](const char* text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_THROW(read("5 1\n0 7\n"), VertexRangeError);
  EXPECT_THROW(read("3 2\n0 1\n1 0\n"), DuplicateEdgeError);
  EXPECT_THROW(read("3 1\n1 1\n"), SelfLoopError);
  EXPECT_THROW(read(""), ParseError);
  EXPECT_THROW(read("3\n"), ParseError);
  EXPECT_THROW(read("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(read("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(read("3 1\n0 1 2\n"), ParseError);
  EXPECT_THROW(read("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(read("3 4\n"), ParseError);
  EXPECT_THROW(read("3 -1\n"), ParseError);
}

TEST(EdgeListTest, ParseErrorCarriesLine) {
  std::istringstream in("4 2\n0 1\n\n2 q\n");
  try {
    read_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(EdgeListTest, RoundTripRandomGraphs) {
  Rng rng(RngSeed{2024});
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.below(60);
    const Graph g = sample_gnp(n, rng.uniform(), RngSeed{rng.next()});
    std::stringstream buffer;
    write_edge_list(g, buffer);
    EXPECT_EQ(read_edge_list(buffer), g);
  }
}

}  // namespace
}  // namespace rigidperc
