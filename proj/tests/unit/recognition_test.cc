// Copyright 2026 The lgk Authors
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

#include "lgk/recognition.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lgk/edge_list_io.h"
#include "lgk/errors.h"
#include "oracles.h"

namespace lgk {
namespace {

CliquePartitionWitness witness(std::vector<std::vector<Vertex>> cliques) {
  CliquePartitionWitness w;
  for (auto& c : cliques) w.cliques.emplace_back(std::move(c));
  return w;
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::from_edges(n, e);
}

const Graph kClaw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
const Graph kC4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kP3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
const Graph kK5MinusEdge = delete_edges(complete(5), EdgeSet{{3, 4}});

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Recognize, ClawIsNotLine) { EXPECT_FALSE(recognize(kClaw)); }

TEST(Recognize, K5MinusEdgeIsNotLine) { EXPECT_FALSE(recognize(kK5MinusEdge)); }

TEST(Recognize, TriangleGetsOneCliqueAndThreeSingletons) {
  auto w = recognize(complete(3));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, witness({{0}, {0, 1, 2}, {1}, {2}}));
}

TEST(Recognize, FourCycleGetsItsEdges) {
  auto w = recognize(kC4);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, witness({{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Recognize, IsolatedVertexCarriesTwoSingletons) {
  auto w = recognize(Graph(1));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, witness({{0}, {0}}));
  auto empty = recognize(Graph(0));
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->cliques.empty());
}

TEST(Recognize, OctahedronIsLineGraphOfK4) {
  // K_{2,2,2}: non-adjacent pairs {0,1}, {2,3}, {4,5}.
  Graph g = delete_edges(complete(6), EdgeSet{{0, 1}, {2, 3}, {4, 5}});
  auto w = recognize(g);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_witness(g, *w));
  EXPECT_EQ(w->cliques.size(), 4u);
  for (const VertexSet& c : w->cliques) EXPECT_EQ(c.size(), 3u);
}

TEST(Recognize, AgreesWithKrauszOnRandomGraphs) {
  std::mt19937_64 rng(2026);
  int line = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t n = 1 + rng() % 9;
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph g = testing::random_graph(n, p, rng);
    auto w = recognize(g);
    ASSERT_EQ(w.has_value(), testing::krausz_is_line_graph(g)) << format_edge_list(g);
    if (w) {
      ++line;
      ASSERT_TRUE(validate_witness(g, *w)) << validate_witness(g, *w).detail;
    }
  }
  EXPECT_GT(line, 300);
}

TEST(Recognize, DeterministicAndCanonical) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Graph h = testing::random_graph(12, 0.3, rng);
    Graph g = line_graph_of(h).graph;
    auto a = recognize(g);
    auto b = recognize(g);
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, *b);
    CliquePartitionWitness sorted = *a;
    sorted.canonicalize();
    EXPECT_EQ(sorted, *a);
  }
}

TEST(Recognize, HereditaryRejection) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(6, 0.5, rng);
    if (recognize(g)) continue;
    // Add two vertices with random neighborhoods; G stays induced.
    std::vector<Edge> edges = g.edges();
    for (Vertex extra : {Vertex{6}, Vertex{7}}) {
      for (Vertex v = 0; v < extra; ++v) {
        if (rng() % 2) edges.push_back({v, extra});
      }
    }
    EXPECT_FALSE(recognize(Graph::from_edges(8, edges)));
  }
}

TEST(RecognizeTraced, FailurePrefixIsTight) {
  std::mt19937_64 rng(4);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(10, 0.35, rng);
    auto traced = detail::recognize_traced(g);
    auto* f = std::get_if<detail::RecognitionFailure>(&traced);
    if (f == nullptr) continue;
    ++failures;
    ASSERT_FALSE(f->prefix.empty());
    EXPECT_EQ(f->prefix.back(), f->culprit);
    std::vector<Vertex> before(f->prefix.begin(), f->prefix.end() - 1);
    EXPECT_TRUE(is_line_graph(induced_subgraph(g, VertexSet(before)).graph));
    EXPECT_FALSE(is_line_graph(induced_subgraph(g, VertexSet(f->prefix)).graph));
  }
  EXPECT_GT(failures, 50);
}

TEST(ValidateWitness, AcceptsTriangleWitness) {
  EXPECT_TRUE(validate_witness(complete(3), witness({{0, 1, 2}, {0}, {1}, {2}})));
}

TEST(ValidateWitness, SingleCliqueLeavesVerticesShort) {
  auto check = validate_witness(complete(3), witness({{0, 1, 2}}));
  EXPECT_EQ(check.violation, WitnessViolation::kWrongMembershipCount);
}

TEST(ValidateWitness, UncoveredCycleEdges) {
  auto check = validate_witness(kC4, witness({{0, 1}, {2, 3}}));
  EXPECT_EQ(check.violation, WitnessViolation::kEdgeUncovered);
}

TEST(ValidateWitness, OtherViolations) {
  EXPECT_EQ(validate_witness(kP3, witness({{0, 5}})).violation,
            WitnessViolation::kVertexOutOfRange);
  EXPECT_EQ(validate_witness(kP3, witness({{0, 1, 2}, {0}, {2}})).violation,
            WitnessViolation::kNotAClique);
  EXPECT_EQ(validate_witness(complete(3), witness({{0, 1, 2}, {0, 1}, {2}})).violation,
            WitnessViolation::kEdgeCoveredTwice);
  EXPECT_EQ(validate_witness(Graph(2), witness({{0, 1}})).violation,
            WitnessViolation::kNotAClique);
  EXPECT_FALSE(validate_witness(kP3, witness({{0, 1}, {1, 2}, {0}, {2}, {2}})));
}

TEST(ValidateWitness, SharedPairShowsUpAsDoubleCover) {
  // Two cliques sharing u and v both contain the edge uv, and coverage is
  // checked before overlap.
  auto check = validate_witness(complete(3), witness({{0, 1, 2}, {0, 1}, {2}}));
  EXPECT_EQ(check.violation, WitnessViolation::kEdgeCoveredTwice);
  EXPECT_FALSE(check.detail.empty());
}

TEST(RootGraph, PathOfThreeComesFromPathOfFour) {
  auto w = witness({{0, 1}, {1, 2}, {0}, {2}});
  RootGraph r = root_graph(kP3, w);
  EXPECT_EQ(r.root.num_vertices(), 4u);
  EXPECT_EQ(r.root.num_edges(), 3u);
  EXPECT_EQ(sorted_degrees(r.root), (std::vector<std::size_t>{1, 1, 2, 2}));
  EXPECT_EQ(connected_components(r.root).size(), 1u);
  EXPECT_TRUE(check_correspondence(kP3, r));
}

TEST(RootGraph, TriangleComesFromClaw) {
  RootGraph r = root_graph(complete(3), witness({{0, 1, 2}, {0}, {1}, {2}}));
  EXPECT_EQ(sorted_degrees(r.root), (std::vector<std::size_t>{1, 1, 1, 3}));
  EXPECT_TRUE(check_correspondence(complete(3), r));
}

TEST(RootGraph, K4ComesFromStarWithFourLeaves) {
  auto w = recognize(complete(4));
  ASSERT_TRUE(w);
  RootGraph r = root_graph(complete(4), *w);
  EXPECT_EQ(sorted_degrees(r.root), (std::vector<std::size_t>{1, 1, 1, 1, 4}));
  EXPECT_EQ(line_graph_of(r.root).graph, complete(4));
}

TEST(RootGraph, RejectsInvalidWitness) {
  EXPECT_THROW(root_graph(kC4, witness({{0, 1}, {2, 3}})), InvalidWitness);
}

TEST(RootGraph, RoundTripOnRandomRoots) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Graph h = testing::random_graph(5 + rng() % 30, 0.2, rng);
    Graph g = line_graph_of(h).graph;
    auto w = recognize(g);
    ASSERT_TRUE(w);
    RootGraph r = root_graph(g, *w);
    EXPECT_TRUE(check_correspondence(g, r));
    EXPECT_EQ(r.root.num_edges(), g.num_vertices());
  }
}

TEST(RootGraph, CorrespondenceCatchesMismatch) {
  RootGraph r = root_graph(kP3, witness({{0, 1}, {1, 2}, {0}, {2}}));
  EXPECT_FALSE(check_correspondence(complete(3), r));
}

TEST(OddTriangles, Examples) {
  EXPECT_FALSE(recognize_via_odd_triangles(kClaw));
  EXPECT_FALSE(recognize_via_odd_triangles(kK5MinusEdge));
  EXPECT_TRUE(recognize_via_odd_triangles(complete(5)));
  EXPECT_TRUE(recognize_via_odd_triangles(Graph(0)));
}

TEST(OddTriangles, LineGraphsOfRandomRootsPass) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph h = testing::random_graph(5 + rng() % 26, 0.15, rng);
    EXPECT_TRUE(recognize_via_odd_triangles(line_graph_of(h).graph));
  }
}

TEST(WitnessJson, RoundTrip) {
  auto w = witness({{0}, {0, 1, 2}, {1}, {2}});
  EXPECT_EQ(witness_to_json(w), R"({"cliques":[[0],[0,1,2],[1],[2]]})");
  EXPECT_EQ(witness_from_json(witness_to_json(w)), w);
}

TEST(WitnessJson, RejectsBadSchema) {
  EXPECT_THROW(witness_from_json("{}"), MalformedInput);
  EXPECT_THROW(witness_from_json(R"({"cliques":[[-1]]})"), MalformedInput);
  EXPECT_THROW(witness_from_json(R"({"cliques":[["a"]]})"), MalformedInput);
  EXPECT_THROW(witness_from_json("not json"), MalformedInput);
}

TEST(CliqueMemberships, ListsBothCliques) {
  auto m = clique_memberships(witness({{0}, {0, 1, 2}, {1}, {2}}), 3);
  EXPECT_EQ(m[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(m[2], (std::vector<std::size_t>{1, 3}));
}

}  // namespace
}  // namespace lgk
