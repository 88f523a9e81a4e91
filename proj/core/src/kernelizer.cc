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

#include "lgk/kernelizer.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "json.hpp"
#include "lgk/errors.h"

namespace lgk {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr Vertex kDropped = std::numeric_limits<Vertex>::max();
constexpr int kFarLevel = 5;
constexpr int kLastKeptLevel = 4;
constexpr std::size_t kMaxResidual = 6;
constexpr std::size_t kAnchorMinSize = 5;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::vector<Vertex> without(const VertexSet& s, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex x : s) {
    if (x != v) out.push_back(x);
  }
  return out;
}

// Keeps the vertices flagged in `keep`; witness cliques shrink to their
// surviving members and vanish when empty, levels travel with them.
ReductionState restrict_state(const ReductionState& in, const std::vector<bool>& keep) {
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < in.graph.num_vertices(); ++v) {
    if (keep[v]) kept.push_back(v);
  }
  Subgraph sub = induced_subgraph(in.graph, VertexSet(kept));
  std::vector<Vertex> new_id(in.graph.num_vertices(), kDropped);
  for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<Vertex>(i);

  ReductionState out;
  out.graph = std::move(sub.graph);
  out.k = in.k;
  out.origin.reserve(kept.size());
  for (Vertex v : kept) out.origin.push_back(in.origin[v]);

  std::vector<Vertex> s;
  for (Vertex v : in.modulator) {
    if (keep[v]) s.push_back(new_id[v]);
  }
  out.modulator = VertexSet(std::move(s));

  for (std::size_t c = 0; c < in.witness.cliques.size(); ++c) {
    std::vector<Vertex> members;
    for (Vertex v : in.witness.cliques[c]) {
      if (keep[v]) members.push_back(new_id[v]);
    }
    if (members.empty()) continue;
    out.witness.cliques.emplace_back(std::move(members));
    out.level.push_back(in.level[c]);
  }
  return out;
}

class StageTimer {
 public:
  explicit StageTimer(KernelStats& stats) : stats_(stats) {}
  void lap(const char* stage) {
    auto now = std::chrono::steady_clock::now();
    stats_.stage_ms.emplace_back(
        stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  KernelStats& stats_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::optional<CliquePartitionWitness> witness_of_remainder(const Graph& g,
                                                           const VertexSet& s) {
  Subgraph sub = remove_vertices(g, s);
  auto local = recognize(sub.graph);
  if (!local) return std::nullopt;
  CliquePartitionWitness w;
  for (const VertexSet& c : local->cliques) {
    std::vector<Vertex> members;
    for (Vertex v : c) members.push_back(sub.to_parent[v]);
    w.cliques.emplace_back(std::move(members));
  }
  w.canonicalize();
  return w;
}

Anchors anchor_cliques(Vertex v, const Graph& g, const VertexSet& s,
                       const CliquePartitionWitness& witness) {
  Subgraph sub = remove_vertices(g, VertexSet(without(s, v)));
  auto local = recognize(sub.graph);
  if (!local) {
    throw InternalInvariantError("G - (S \\ {" + std::to_string(v) +
                                 "}) is not a line graph");
  }
  const auto& parent = sub.to_parent;
  const Vertex local_v = static_cast<Vertex>(
      std::lower_bound(parent.begin(), parent.end(), v) - parent.begin());
  const auto members = clique_memberships(witness, g.num_vertices());

  Anchors anchors;
  std::vector<bool> covered(g.num_vertices(), false);
  for (const VertexSet& c : local->cliques) {
    if (!c.contains(local_v) || c.size() < kAnchorMinSize) continue;
    std::vector<Vertex> rest;
    for (Vertex u : c) {
      if (u != local_v) rest.push_back(parent[u]);
    }
    VertexSet target(std::move(rest));
    std::optional<std::size_t> id;
    for (std::size_t candidate : members[target[0]]) {
      if (witness.cliques[candidate] == target) id = candidate;
    }
    if (!id) {
      throw InternalInvariantError("anchor clique of " + std::to_string(v) +
                                   " is not a clique of the witness of G - S");
    }
    (anchors.first ? anchors.second : anchors.first) = id;
    for (Vertex u : target) covered[u] = true;
  }

  std::vector<Vertex> residual;
  for (Vertex u : g.neighbors(v)) {
    if (!s.contains(u) && !covered[u]) residual.push_back(u);
  }
  if (residual.size() > kMaxResidual) {
    throw InternalInvariantError("vertex " + std::to_string(v) + " has " +
                                 std::to_string(residual.size()) +
                                 " residual neighbors outside its anchor cliques");
  }
  anchors.residual = VertexSet(std::move(residual));
  return anchors;
}

std::uint64_t level_size_bound(std::size_t s_size, std::size_t k, int d) {
  std::uint64_t bound = sat_mul(14, s_size);
  for (int i = 1; i < d; ++i) bound = sat_mul(bound, static_cast<std::uint64_t>(k) + 6);
  return bound;
}

LevelStructure build_levels(const Graph& g, const VertexSet& s,
                            CliquePartitionWitness witness, std::size_t k) {
  LevelStructure ls;
  ls.modulator = s;
  ls.witness = std::move(witness);
  ls.threshold = k + 7;
  ls.level.assign(ls.witness.cliques.size(), kUnleveled);
  const auto members = clique_memberships(ls.witness, g.num_vertices());

  std::vector<std::size_t> frontier;
  auto reach = [&](std::size_t c, int d) {
    if (ls.level[c] == kUnleveled) {
      ls.level[c] = d;
      frontier.push_back(c);
    }
  };
  for (Vertex v : s) {
    Anchors a = anchor_cliques(v, g, s, ls.witness);
    if (a.first) reach(*a.first, 1);
    if (a.second) reach(*a.second, 1);
    for (Vertex u : a.residual) {
      for (std::size_t c : members[u]) reach(c, 1);
    }
    ls.anchors.push_back(std::move(a));
  }

  for (int d = 1; !frontier.empty(); ++d) {
    ls.level_sizes.push_back(frontier.size());
    if (frontier.size() > level_size_bound(s.size(), k, d)) {
      throw InternalInvariantError("level " + std::to_string(d) + " holds " +
                                   std::to_string(frontier.size()) +
                                   " cliques, above the 14|S|(k+6)^(d-1) bound");
    }
    std::vector<std::size_t> current;
    current.swap(frontier);
    for (std::size_t c : current) {
      if (!ls.is_small(c)) continue;
      for (Vertex u : ls.witness.cliques[c]) {
        for (std::size_t other : members[u]) reach(other, d + 1);
      }
    }
  }

  // A vertex with a neighbor in S sits in a level-1 clique, so a clique
  // beyond level 2 can only contain it through a large clique.
  std::vector<bool> sees_s(g.num_vertices(), false);
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) sees_s[u] = true;
  }
  for (std::size_t c = 0; c < ls.witness.cliques.size(); ++c) {
    if (ls.level[c] <= 2) continue;
    for (Vertex u : ls.witness.cliques[c]) {
      if (s.contains(u) || !sees_s[u]) continue;
      bool in_large = std::any_of(members[u].begin(), members[u].end(),
                                  [&](std::size_t x) { return !ls.is_small(x); });
      if (!in_large) {
        throw InternalInvariantError("vertex " + std::to_string(u) +
                                     " sees S but lies only in small cliques beyond level 2");
      }
    }
  }
  return ls;
}

ReductionState initial_state(const Graph& g, const LevelStructure& levels, std::size_t k) {
  ReductionState st;
  st.graph = g;
  st.origin.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) st.origin[v] = v;
  st.modulator = levels.modulator;
  st.witness = levels.witness;
  st.level = levels.level;
  st.k = k;
  return st;
}

ReductionState rr1_trim_unleveled(const ReductionState& in) {
  std::vector<bool> keep(in.graph.num_vertices(), false);
  for (Vertex v : in.modulator) keep[v] = true;
  for (std::size_t c = 0; c < in.witness.cliques.size(); ++c) {
    if (in.level[c] == kUnleveled) continue;
    for (Vertex v : in.witness.cliques[c]) keep[v] = true;
  }
  return restrict_state(in, keep);
}

ReductionState rr2_cut_far_edges(const ReductionState& in) {
  const std::size_t n = in.graph.num_vertices();
  auto far = [&](std::size_t c) { return in.level[c] >= kFarLevel; };

  std::vector<Edge> doomed;
  for (std::size_t c = 0; c < in.witness.cliques.size(); ++c) {
    if (!far(c)) continue;
    const VertexSet& clique = in.witness.cliques[c];
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        doomed.push_back(Edge{clique[i], clique[j]});
      }
    }
  }

  ReductionState cut;
  cut.graph = delete_edges(in.graph, EdgeSet(std::move(doomed)));
  cut.origin = in.origin;
  cut.modulator = in.modulator;
  cut.k = in.k;
  for (std::size_t c = 0; c < in.witness.cliques.size(); ++c) {
    if (far(c)) continue;
    cut.witness.cliques.push_back(in.witness.cliques[c]);
    cut.level.push_back(in.level[c]);
  }
  // Vertices between a far and a near clique keep the near one and get a
  // singleton, itself at distance >= 5.
  const auto members = clique_memberships(in.witness, n);
  for (Vertex v = 0; v < n; ++v) {
    if (in.modulator.contains(v)) continue;
    std::size_t far_count = 0;
    std::optional<std::size_t> near;
    for (std::size_t c : members[v]) {
      if (far(c)) {
        ++far_count;
      } else {
        near = c;
      }
    }
    if (far_count == 1 && near) {
      cut.witness.cliques.push_back(VertexSet{v});
      const bool small = in.witness.cliques[*near].size() < in.k + 7;
      cut.level.push_back(small ? kFarLevel : kUnleveled);
    } else if (far_count == 2 && cut.graph.degree(v) != 0) {
      throw InternalInvariantError("vertex " + std::to_string(v) +
                                   " lies only in far cliques but keeps edges");
    }
  }

  std::vector<bool> keep(n);
  for (Vertex v = 0; v < n; ++v) keep[v] = cut.graph.degree(v) != 0;
  return restrict_state(cut, keep);
}

ReductionState rr3_mark_and_shrink(const ReductionState& in) {
  const std::size_t n = in.graph.num_vertices();
  const std::size_t cap = in.k + 7;
  const std::size_t q = in.witness.cliques.size();
  std::vector<std::size_t> need(q, 0);
  for (std::size_t c = 0; c < q; ++c) {
    const std::size_t size = in.witness.cliques[c].size();
    if (in.level[c] > kLastKeptLevel) {
      if (size > 1) {
        throw InternalInvariantError("clique of size " + std::to_string(size) +
                                     " beyond level 4 survived rule 2");
      }
      continue;
    }
    need[c] = std::min(size, cap);
  }

  std::vector<bool> marked(n, false);
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t i = 0; i < need[c]; ++i) marked[in.witness.cliques[c][i]] = true;
  }
  std::vector<std::size_t> hits(q, 0);
  const auto members = clique_memberships(in.witness, n);
  for (Vertex v = 0; v < n; ++v) {
    if (!marked[v]) continue;
    for (std::size_t c : members[v]) ++hits[c];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!marked[v]) continue;
    bool redundant = std::all_of(members[v].begin(), members[v].end(), [&](std::size_t c) {
      return need[c] == 0 || hits[c] > need[c];
    });
    if (!redundant) continue;
    marked[v] = false;
    for (std::size_t c : members[v]) --hits[c];
  }

  std::vector<bool> keep = marked;
  for (Vertex v : in.modulator) keep[v] = true;
  return restrict_state(in, keep);
}

std::uint64_t kernel_vertex_bound(std::size_t s_size, std::size_t k) {
  std::uint64_t cliques = 0;
  for (int d = 1; d <= kLastKeptLevel; ++d) {
    cliques = sat_add(cliques, level_size_bound(s_size, k, d));
  }
  return sat_add(s_size, sat_mul(static_cast<std::uint64_t>(k) + 7, cliques));
}

std::uint64_t kernel_vertex_bound(std::size_t k) {
  return kernel_vertex_bound(static_cast<std::size_t>(sat_mul(6, k)), k);
}

KernelOutcome kernelize(const Graph& g, std::size_t k, PipelineStages* stages) {
  KernelOutcome out;
  out.k = k;
  KernelStats& stats = out.stats;
  stats.n = g.num_vertices();
  stats.m = g.num_edges();
  stats.k = k;
  stats.bound = kernel_vertex_bound(k);
  StageTimer timer(stats);

  const bool line = is_line_graph(g);
  timer.lap("recognize");
  if (line) {
    out.verdict = Verdict::kYes;
    return out;
  }

  auto packed = build_modulator(g, k);
  timer.lap("modulator");
  if (auto* too_many = std::get_if<TooManyPacked>(&packed)) {
    out.verdict = Verdict::kNo;
    stats.packed = too_many->packing.size();
    return out;
  }
  Modulator& modulator = std::get<Modulator>(packed);
  stats.s_size = modulator.vertices.size();
  stats.packed = modulator.packing.size();

  auto witness = witness_of_remainder(g, modulator.vertices);
  if (!witness) throw InternalInvariantError("G - S is not a line graph");
  LevelStructure levels = build_levels(g, modulator.vertices, std::move(*witness), k);
  stats.level_sizes = levels.level_sizes;
  stats.unleveled = static_cast<std::size_t>(
      std::count(levels.level.begin(), levels.level.end(), kUnleveled));
  timer.lap("levels");

  ReductionState s0 = initial_state(g, levels, k);
  ReductionState s1 = rr1_trim_unleveled(s0);
  timer.lap("rr1");
  ReductionState s2 = rr2_cut_far_edges(s1);
  timer.lap("rr2");
  ReductionState s3 = rr3_mark_and_shrink(s2);
  timer.lap("rr3");

  const ReductionState* chain[] = {&s0, &s1, &s2, &s3};
  for (int i = 0; i < 3; ++i) {
    stats.removed_vertices[i] =
        chain[i]->graph.num_vertices() - chain[i + 1]->graph.num_vertices();
    stats.removed_edges[i] = chain[i]->graph.num_edges() - chain[i + 1]->graph.num_edges();
  }
  stats.kernel_n = s3.graph.num_vertices();
  stats.kernel_m = s3.graph.num_edges();
  if (stats.kernel_n > kernel_vertex_bound(stats.s_size, k) || stats.kernel_n > stats.bound) {
    throw InternalInvariantError("kernel has " + std::to_string(stats.kernel_n) +
                                 " vertices, above the bound " +
                                 std::to_string(kernel_vertex_bound(stats.s_size, k)));
  }

  out.verdict = Verdict::kReduced;
  out.kernel = s3.graph;
  out.origin = s3.origin;
  if (stages != nullptr) {
    stages->modulator = std::move(modulator);
    stages->levels = std::move(levels);
    stages->start = std::move(s0);
    stages->after_rr1 = std::move(s1);
    stages->after_rr2 = std::move(s2);
    stages->after_rr3 = std::move(s3);
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kReduced:
      return "reduced";
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
  }
  return "unknown";
}

std::string kernel_stats_to_json(const KernelOutcome& outcome) {
  const KernelStats& s = outcome.stats;
  nlohmann::ordered_json doc;
  doc["verdict"] = verdict_name(outcome.verdict);
  doc["n"] = s.n;
  doc["m"] = s.m;
  doc["k"] = s.k;
  doc["s_size"] = s.s_size;
  doc["packed"] = s.packed;
  doc["levels"] = s.level_sizes;
  doc["unleveled"] = s.unleveled;
  doc["removed"] = {{"rr1", s.removed_vertices[0]},
                    {"rr2", s.removed_vertices[1]},
                    {"rr3", s.removed_vertices[2]}};
  doc["removed_edges"] = {{"rr1", s.removed_edges[0]},
                          {"rr2", s.removed_edges[1]},
                          {"rr3", s.removed_edges[2]}};
  doc["kernel_n"] = s.kernel_n;
  doc["kernel_m"] = s.kernel_m;
  doc["bound"] = s.bound;
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [stage, ms] : s.stage_ms) timings[stage] = ms;
  doc["stage_ms"] = timings;
  return doc.dump();
}

}  // namespace lgk
