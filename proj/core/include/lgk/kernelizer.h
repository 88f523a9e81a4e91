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

// Polynomial kernel for Line-Graph Edge Deletion: given (G, k), decide
// whether deleting at most k edges can turn G into a line graph.
//
// Pipeline:
//   1. Pack edge-disjoint forbidden subgraphs into a modulator S (|S| <= 6k).
//   2. Take a clique partition witness C of G - S.
//   3. Anchor every v in S to at most two cliques of C plus at most six
//      residual neighbors; the cliques touched this way form level 1.
//   4. Level d + 1 holds the unleveled cliques meeting a small clique
//      (fewer than k + 7 vertices) of level d. Everything else is at level
//      infinity.
//   5. Trim vertices outside every leveled clique, delete the edges of cliques
//      at level >= 5 (and the isolated vertices this leaves), and finally keep
//      only k + 7 vertices of every clique at level <= 4.
//
// The result has at most 6k + (k + 7) * sum_{d=1..4} 84k (k + 6)^(d-1)
// vertices. The parameter k is never changed.

#ifndef LGK_KERNELIZER_H_
#define LGK_KERNELIZER_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgk/forbidden_patterns.h"
#include "lgk/graph.h"
#include "lgk/recognition.h"

namespace lgk {

// Level of a clique that no level reaches.
inline constexpr int kUnleveled = std::numeric_limits<int>::max();

// Witness of G - S with clique members given as vertices of G. Empty
// optional when G - S is not a line graph.
std::optional<CliquePartitionWitness> witness_of_remainder(const Graph& g,
                                                           const VertexSet& s);

struct Anchors {
  std::optional<std::size_t> first;   // index into the witness of G - S
  std::optional<std::size_t> second;
  VertexSet residual;                 // other neighbors outside S, at most 6
};

// Requires G - (S \ {v}) to be a line graph. Throws InternalInvariantError if
// an anchor clique is missing from `witness` or the residual exceeds six.
Anchors anchor_cliques(Vertex v, const Graph& g, const VertexSet& s,
                       const CliquePartitionWitness& witness);

struct LevelStructure {
  VertexSet modulator;
  CliquePartitionWitness witness;  // of G - S, vertices of G
  std::size_t threshold = 0;       // k + 7
  std::vector<int> level;          // per clique, 1-based, or kUnleveled
  std::vector<Anchors> anchors;    // parallel to modulator
  std::vector<std::size_t> level_sizes;  // level_sizes[d - 1] = |L_d|

  bool is_small(std::size_t clique) const {
    return witness.cliques[clique].size() < threshold;
  }
};

// Upper bound 14 |S| (k + 6)^(d - 1) on the number of cliques at level d,
// saturating at the maximum of uint64.
std::uint64_t level_size_bound(std::size_t s_size, std::size_t k, int d);

// Computes anchors and levels. Checks at runtime that every level respects
// level_size_bound and that any vertex of a clique beyond level 2 with a
// neighbor in S lies in a large clique; throws InternalInvariantError if not.
LevelStructure build_levels(const Graph& g, const VertexSet& s,
                            CliquePartitionWitness witness, std::size_t k);

// A graph together with S, a witness of graph - S and the level of each
// witness clique, as the reduction rules pass it along.
struct ReductionState {
  Graph graph;
  std::vector<Vertex> origin;       // vertex of `graph` -> vertex of the input
  VertexSet modulator;
  CliquePartitionWitness witness;   // of graph - modulator
  std::vector<int> level;           // parallel to witness.cliques
  std::size_t k = 0;
};

ReductionState initial_state(const Graph& g, const LevelStructure& levels, std::size_t k);

// Rule 1: drop every vertex outside S that lies in no leveled clique.
// Unleveled cliques shrink to their surviving vertices.
ReductionState rr1_trim_unleveled(const ReductionState& in);

// Rule 2: delete the edges inside cliques at level >= 5 (unleveled included),
// then isolated vertices. Far cliques leave the witness; a vertex that also
// sits in a nearer clique gets a singleton in their place.
ReductionState rr2_cut_far_edges(const ReductionState& in);

// Rule 3: mark min(|C|, k + 7) lowest vertices of every clique at level <= 4,
// unmark redundant ones in ascending order, and keep only S and the marks.
// Throws InternalInvariantError if a non-singleton clique sits beyond level 4.
ReductionState rr3_mark_and_shrink(const ReductionState& in);

// 6k + (k + 7) * sum_{d=1..4} 14 * 6k * (k + 6)^(d - 1), saturating.
std::uint64_t kernel_vertex_bound(std::size_t k);

// Same bound with the actual |S| in place of 6k.
std::uint64_t kernel_vertex_bound(std::size_t s_size, std::size_t k);

enum class Verdict { kReduced, kYes, kNo };

struct KernelStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t s_size = 0;
  std::size_t packed = 0;
  std::vector<std::size_t> level_sizes;
  std::size_t unleveled = 0;
  std::size_t removed_vertices[3] = {0, 0, 0};
  std::size_t removed_edges[3] = {0, 0, 0};
  std::size_t kernel_n = 0;
  std::size_t kernel_m = 0;
  std::uint64_t bound = 0;  // kernel_vertex_bound(k)
  std::vector<std::pair<std::string, double>> stage_ms;
};

struct KernelOutcome {
  Verdict verdict = Verdict::kReduced;
  Graph kernel;                 // meaningful for kReduced only
  std::vector<Vertex> origin;   // kernel vertex -> input vertex
  std::size_t k = 0;
  KernelStats stats;
};

// Intermediate results, for callers that want to inspect or test each rule.
struct PipelineStages {
  Modulator modulator;
  LevelStructure levels;
  ReductionState start;
  ReductionState after_rr1;
  ReductionState after_rr2;
  ReductionState after_rr3;
};

// Line graphs yield kYes, a packing of more than k forbidden subgraphs kNo,
// anything else the reduced instance. Throws InternalInvariantError when a
// runtime check fails, including the kernel size bound.
KernelOutcome kernelize(const Graph& g, std::size_t k, PipelineStages* stages = nullptr);

const char* verdict_name(Verdict v);

// {"verdict": ..., "n", "m", "k", "s_size", "levels": [...],
//  "removed": {"rr1", "rr2", "rr3"}, "kernel_n", "kernel_m", "bound", ...}
// "removed" counts vertices; edge removals and timings ride along under
// "removed_edges" and "stage_ms".
std::string kernel_stats_to_json(const KernelOutcome& outcome);

}  // namespace lgk

#endif  // LGK_KERNELIZER_H_
