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

#ifndef LGK_FORBIDDEN_PATTERNS_H_
#define LGK_FORBIDDEN_PATTERNS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lgk/graph.h"

namespace lgk {

// One of Beineke's nine minimal non-line graphs.
struct Pattern {
  int id = 0;           // 1..9, 1 is the claw
  std::string name;     // from the comment line of the data file
  Graph graph;
};

// The nine patterns, parsed once from the edge lists under core/data/patterns
// (compiled into the library).
const std::vector<Pattern>& beineke_patterns();

// Brute-force isomorphism over all vertex bijections; meant for graphs with at
// most eight vertices.
bool isomorphic_small(const Graph& a, const Graph& b);

// Id of the pattern g is isomorphic to, if any.
std::optional<int> match_pattern(const Graph& g);

// A vertex set W with |W| <= 6 such that G[W] is a minimal non-line graph,
// or nullopt when g is a line graph.
//
// Search space: the prefix of the failing component at which the
// incremental recognizer got stuck, cut to the radius-5 ball around the
// culprit. Every minimal non-line graph there contains the culprit and is
// connected with at most six vertices. That set is then shrunk by deleting
// blocks of vertices in ascending id order, halving the block size down to
// single vertices, keeping each deletion that leaves a non-line graph.
// Deterministic, and O(log n) recognitions.
std::optional<VertexSet> find_forbidden_subgraph(const Graph& g);

// Vertex set S such that G - (S \ {v}) is a line graph for every v in S,
// with the packed forbidden subgraphs that produced it.
struct Modulator {
  VertexSet vertices;
  std::vector<VertexSet> packing;  // pairwise edge-disjoint forbidden subgraphs
};

// More than k edge-disjoint forbidden subgraphs were packed; each needs its
// own deleted edge, so (G, k) is a NO-instance.
struct TooManyPacked {
  std::vector<VertexSet> packing;
};

// Greedy packing. Each round looks for a forbidden subgraph with at most one
// vertex in the current S, trying G - S first and then G - (S \ {v}) for v in
// ascending order, and adds its vertices to S. Stops when no such subgraph
// exists or the packing exceeds k.
std::variant<Modulator, TooManyPacked> build_modulator(const Graph& g, std::size_t k);

}  // namespace lgk

#endif  // LGK_FORBIDDEN_PATTERNS_H_
