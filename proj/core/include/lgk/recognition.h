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

// Line-graph recognition through clique partition witnesses.
//
// A clique partition witness of G is a multiset of vertex sets such that
//   - every set is a clique of G,
//   - two distinct sets share at most one vertex,
//   - every vertex lies in exactly two sets (counting multiplicity), and
//   - every edge lies in exactly one set.
// G is a line graph exactly when such a witness exists. The witness is the
// root graph in disguise: one root vertex per set, one root edge per vertex
// of G joining its two sets. Isolated vertices carry two copies of their
// singleton, vertices with a single non-trivial set carry one singleton.

#ifndef LGK_RECOGNITION_H_
#define LGK_RECOGNITION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lgk/graph.h"

namespace lgk {

struct CliquePartitionWitness {
  std::vector<VertexSet> cliques;

  // Sorts the cliques lexicographically. Every witness this library
  // produces is already canonical.
  void canonicalize();

  friend bool operator==(const CliquePartitionWitness&,
                         const CliquePartitionWitness&) = default;
};

// For each vertex of a graph of order n, the indices of the cliques
// containing it, ascending.
std::vector<std::vector<std::size_t>> clique_memberships(
    const CliquePartitionWitness& w, std::size_t n);

// Returns a canonical witness, or nullopt if g is not a line graph.
//
// Each connected component is grown one vertex at a time in BFS order from
// its smallest vertex. Every witness of the grown prefix is tracked: a new
// vertex joins two disjoint existing cliques, or one clique plus a fresh
// singleton, and must be adjacent to exactly the union. Whitney's theorem
// keeps the number of live witnesses at one once a component has more than
// six vertices; smaller components keep all of them and the
// lexicographically smallest survives. Runs in O(n + m) for components that
// leave the small regime.
std::optional<CliquePartitionWitness> recognize(const Graph& g);

inline bool is_line_graph(const Graph& g) { return recognize(g).has_value(); }

enum class WitnessViolation {
  kNone,
  kVertexOutOfRange,
  kNotAClique,
  kEdgeUncovered,
  kEdgeCoveredTwice,
  kCliquesOverlap,
  kWrongMembershipCount,
};

struct WitnessCheck {
  WitnessViolation violation = WitnessViolation::kNone;
  std::string detail;

  bool ok() const { return violation == WitnessViolation::kNone; }
  explicit operator bool() const { return ok(); }
};

// Checks the witness conditions in the order range, completeness, edge
// coverage, pairwise overlap, membership count, and reports the first one
// that fails.
WitnessCheck validate_witness(const Graph& g, const CliquePartitionWitness& w);

struct RootGraph {
  Graph root;                          // one vertex per witness clique, by index
  std::vector<Edge> vertex_to_edge;    // root edge for each vertex of G
};

// Throws InvalidWitness if validate_witness rejects (g, w).
RootGraph root_graph(const Graph& g, const CliquePartitionWitness& w);

// u ~ v in g exactly when their root edges share an endpoint, checked
// directly through the correspondence.
bool check_correspondence(const Graph& g, const RootGraph& r);

// Independent recognizer: claw-free, and any two odd triangles sharing an
// edge induce K4. A triangle is odd when some other vertex sees an odd number
// of its corners. Polynomial but much slower than recognize().
bool recognize_via_odd_triangles(const Graph& g);

// {"cliques": [[v, ...], ...]}, cliques sorted.
std::string witness_to_json(const CliquePartitionWitness& w);
// Throws MalformedInput on schema violations. Does not validate against a graph.
CliquePartitionWitness witness_from_json(std::string_view text);

namespace detail {

// Where the incremental recognizer gave up: the vertices added so far in
// the failing component (in insertion order, culprit last). The prefix
// without the culprit induces a line graph, the full prefix does not.
struct RecognitionFailure {
  std::vector<Vertex> prefix;
  Vertex culprit = 0;
};

std::variant<CliquePartitionWitness, RecognitionFailure> recognize_traced(
    const Graph& g);

}  // namespace detail

}  // namespace lgk

#endif  // LGK_RECOGNITION_H_
