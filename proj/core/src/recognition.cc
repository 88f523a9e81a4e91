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

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "lgk/errors.h"

namespace lgk {

namespace {

using CliqueId = std::uint32_t;
constexpr CliqueId kFresh = std::numeric_limits<CliqueId>::max();
constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();

// Witness of a component prefix, on local ids (BFS positions).
struct PartialWitness {
  std::vector<std::vector<Vertex>> cliques;
  std::vector<std::array<CliqueId, 2>> member_of;

  bool in(Vertex v, CliqueId c) const {
    return member_of[v][0] == c || member_of[v][1] == c;
  }

  void add(Vertex v, CliqueId x, CliqueId y) {
    cliques[x].push_back(v);
    if (y == kFresh) {
      y = static_cast<CliqueId>(cliques.size());
      cliques.push_back({v});
    } else {
      cliques[y].push_back(v);
    }
    member_of.push_back({x, y});
  }

  // Sorted list of sorted cliques, optionally through a relabeling.
  std::vector<std::vector<Vertex>> canonical(const std::vector<Vertex>* relabel) const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) {
      std::vector<Vertex> members = c;
      if (relabel != nullptr) {
        for (Vertex& v : members) v = (*relabel)[v];
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct Option {
  CliqueId x;
  CliqueId y;
};

// Ways to attach local vertex v whose earlier neighbors are `nbrs` (all
// flagged with `stamp` in `mark`). v must join clique X containing nbrs[0],
// and either a disjoint clique Y with X + Y = nbrs, or a fresh singleton.
void attach_options(const PartialWitness& pw, std::span<const Vertex> nbrs,
                    const std::vector<std::uint32_t>& mark, std::uint32_t stamp,
                    std::vector<Option>& out) {
  out.clear();
  const Vertex first = nbrs[0];
  for (int side = 0; side < 2; ++side) {
    const CliqueId x = pw.member_of[first][side];
    if (side == 1 && x == pw.member_of[first][0]) break;
    const auto& cx = pw.cliques[x];
    if (cx.size() > nbrs.size()) continue;
    bool inside = std::all_of(cx.begin(), cx.end(),
                              [&](Vertex u) { return mark[u] == stamp; });
    if (!inside) continue;
    const std::size_t rest = nbrs.size() - cx.size();
    if (rest == 0) {
      out.push_back({x, kFresh});
      continue;
    }
    auto outside = std::find_if(nbrs.begin(), nbrs.end(),
                                [&](Vertex u) { return !pw.in(u, x); });
    // rest > 0 guarantees some neighbor is outside X.
    const Vertex second = *outside;
    for (int side2 = 0; side2 < 2; ++side2) {
      const CliqueId y = pw.member_of[second][side2];
      if (side2 == 1 && y == pw.member_of[second][0]) break;
      const auto& cy = pw.cliques[y];
      if (cy.size() != rest) continue;
      bool ok = std::all_of(cy.begin(), cy.end(), [&](Vertex u) {
        return mark[u] == stamp && !pw.in(u, x);
      });
      if (ok) out.push_back({x, y});
    }
  }
}

struct ComponentResult {
  bool ok = false;
  std::vector<std::vector<Vertex>> cliques;  // global ids, canonical
  std::size_t failed_at = 0;                 // BFS position of the culprit
};

ComponentResult recognize_component(const Graph& g, const std::vector<Vertex>& order,
                                    std::vector<Vertex>& local_of) {
  const std::size_t size = order.size();
  for (std::size_t i = 0; i < size; ++i) local_of[order[i]] = static_cast<Vertex>(i);

  std::vector<PartialWitness> live(1);
  live[0].cliques = {{0}, {0}};
  live[0].member_of = {{0, 1}};

  std::vector<std::uint32_t> mark(size, 0);
  std::vector<Vertex> nbrs;
  std::vector<Option> options;
  std::vector<PartialWitness> next;

  ComponentResult result;
  for (std::size_t i = 1; i < size; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    const std::uint32_t stamp = static_cast<std::uint32_t>(i);
    nbrs.clear();
    for (Vertex x : g.neighbors(order[i])) {
      Vertex lx = local_of[x];
      if (lx < v) {
        nbrs.push_back(lx);
        mark[lx] = stamp;
      }
    }
    next.clear();
    for (auto& pw : live) {
      attach_options(pw, nbrs, mark, stamp, options);
      for (std::size_t o = 0; o < options.size(); ++o) {
        if (o + 1 == options.size()) {
          pw.add(v, options[o].x, options[o].y);
          next.push_back(std::move(pw));
        } else {
          PartialWitness copy = pw;
          copy.add(v, options[o].x, options[o].y);
          next.push_back(std::move(copy));
        }
      }
    }
    if (next.empty()) {
      result.failed_at = i;
      for (Vertex u : order) local_of[u] = kUnseen;
      return result;
    }
    if (next.size() > 1) {
      // Drop witnesses that coincide as set systems.
      std::vector<std::pair<std::vector<std::vector<Vertex>>, std::size_t>> keyed;
      for (std::size_t c = 0; c < next.size(); ++c) {
        keyed.emplace_back(next[c].canonical(nullptr), c);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<PartialWitness> unique;
      for (std::size_t c = 0; c < keyed.size(); ++c) {
        if (c > 0 && keyed[c].first == keyed[c - 1].first) continue;
        unique.push_back(std::move(next[keyed[c].second]));
      }
      next = std::move(unique);
    }
    std::swap(live, next);
  }

  for (Vertex u : order) local_of[u] = kUnseen;
  result.ok = true;
  result.cliques = live[0].canonical(&order);
  for (std::size_t c = 1; c < live.size(); ++c) {
    auto alt = live[c].canonical(&order);
    if (alt < result.cliques) result.cliques = std::move(alt);
  }
  return result;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex start, std::vector<bool>& seen) {
  std::vector<Vertex> order{start};
  seen[start] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex x : g.neighbors(order[head])) {
      if (!seen[x]) {
        seen[x] = true;
        order.push_back(x);
      }
    }
  }
  return order;
}

}  // namespace

void CliquePartitionWitness::canonicalize() {
  std::sort(cliques.begin(), cliques.end());
}

std::vector<std::vector<std::size_t>> clique_memberships(
    const CliquePartitionWitness& w, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t c = 0; c < w.cliques.size(); ++c) {
    for (Vertex v : w.cliques[c]) {
      if (v < n) out[v].push_back(c);
    }
  }
  return out;
}

namespace detail {

std::variant<CliquePartitionWitness, RecognitionFailure> recognize_traced(
    const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> local_of(n, kUnseen);
  CliquePartitionWitness witness;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> order = bfs_order(g, s, seen);
    ComponentResult comp = recognize_component(g, order, local_of);
    if (!comp.ok) {
      RecognitionFailure failure;
      failure.culprit = order[comp.failed_at];
      order.resize(comp.failed_at + 1);
      failure.prefix = std::move(order);
      return failure;
    }
    for (auto& c : comp.cliques) witness.cliques.emplace_back(std::move(c));
  }
  witness.canonicalize();
  return witness;
}

}  // namespace detail

std::optional<CliquePartitionWitness> recognize(const Graph& g) {
  auto traced = detail::recognize_traced(g);
  if (auto* w = std::get_if<CliquePartitionWitness>(&traced)) return std::move(*w);
  return std::nullopt;
}

WitnessCheck validate_witness(const Graph& g, const CliquePartitionWitness& w) {
  const std::size_t n = g.num_vertices();
  auto fail = [](WitnessViolation v, std::string detail) {
    return WitnessCheck{v, std::move(detail)};
  };

  for (std::size_t c = 0; c < w.cliques.size(); ++c) {
    for (Vertex v : w.cliques[c]) {
      if (v >= n) {
        return fail(WitnessViolation::kVertexOutOfRange,
                    "clique " + std::to_string(c) + " contains vertex " +
                        std::to_string(v) + " outside the graph");
      }
    }
  }
  for (std::size_t c = 0; c < w.cliques.size(); ++c) {
    if (!is_clique(g, w.cliques[c])) {
      return fail(WitnessViolation::kNotAClique,
                  "set " + std::to_string(c) + " does not induce a complete subgraph");
    }
  }

  const auto members = clique_memberships(w, n);
  std::optional<Edge> uncovered;
  std::optional<Edge> doubled;
  for (const Edge& e : g.edges()) {
    const auto& a = members[e.u];
    const auto& b = members[e.v];
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        ++common, ++i, ++j;
      }
    }
    if (common == 0 && !uncovered) uncovered = e;
    if (common > 1 && !doubled) doubled = e;
  }
  auto edge_str = [](const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
  };
  if (uncovered) {
    return fail(WitnessViolation::kEdgeUncovered,
                "edge " + edge_str(*uncovered) + " lies in no clique");
  }
  if (doubled) {
    return fail(WitnessViolation::kEdgeCoveredTwice,
                "edge " + edge_str(*doubled) + " lies in more than one clique");
  }

  // Already implied by the coverage checks once every set is a clique.
  std::unordered_map<std::uint64_t, Vertex> seen_pair;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = members[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const std::uint64_t key = (static_cast<std::uint64_t>(list[i]) << 32) | list[j];
        auto [it, inserted] = seen_pair.emplace(key, v);
        if (!inserted) {
          return fail(WitnessViolation::kCliquesOverlap,
                      "cliques " + std::to_string(list[i]) + " and " +
                          std::to_string(list[j]) + " share vertices " +
                          std::to_string(it->second) + " and " + std::to_string(v));
        }
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (members[v].size() != 2) {
      return fail(WitnessViolation::kWrongMembershipCount,
                  "vertex " + std::to_string(v) + " lies in " +
                      std::to_string(members[v].size()) + " cliques instead of 2");
    }
  }
  return {};
}

RootGraph root_graph(const Graph& g, const CliquePartitionWitness& w) {
  if (auto check = validate_witness(g, w); !check) {
    throw InvalidWitness("invalid clique partition witness: " + check.detail);
  }
  const auto members = clique_memberships(w, g.num_vertices());
  RootGraph r;
  r.vertex_to_edge.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    r.vertex_to_edge.push_back(Edge::canonical(static_cast<Vertex>(members[v][0]),
                                               static_cast<Vertex>(members[v][1])));
  }
  r.root = Graph::from_edges(w.cliques.size(), r.vertex_to_edge);
  return r;
}

bool check_correspondence(const Graph& g, const RootGraph& r) {
  const std::size_t n = g.num_vertices();
  if (r.vertex_to_edge.size() != n || r.root.num_edges() != n) return false;
  for (const Edge& e : r.vertex_to_edge) {
    if (!r.root.has_edge(e.u, e.v)) return false;
  }
  // Vertices grouped by root endpoint: two G-vertices must be adjacent
  // exactly when they meet at some root vertex.
  std::vector<std::vector<Vertex>> at(r.root.num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    at[r.vertex_to_edge[v].u].push_back(v);
    at[r.vertex_to_edge[v].v].push_back(v);
  }
  std::size_t implied = 0;
  for (const auto& star : at) {
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) {
        if (!g.has_edge(star[i], star[j])) return false;
        ++implied;
      }
    }
  }
  // Distinct root edges meet in at most one root vertex, so `implied`
  // counts every implied adjacency once.
  return implied == g.num_edges();
}

bool recognize_via_odd_triangles(const Graph& g) {
  const std::size_t n = g.num_vertices();

  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c) {
          if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
        }
      }
    }
  }

  // Apexes of odd triangles, keyed by the opposite edge.
  std::unordered_map<std::uint64_t, std::vector<Vertex>> odd_apex;
  auto key = [](Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  };
  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> touched;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.has_edge(a, c)) continue;
        touched.clear();
        for (Vertex corner : {a, b, c}) {
          for (Vertex w : g.neighbors(corner)) {
            if (hits[w]++ == 0) touched.push_back(w);
          }
        }
        bool odd = false;
        for (Vertex w : touched) {
          if (w != a && w != b && w != c && hits[w] % 2 == 1) odd = true;
          hits[w] = 0;
        }
        if (odd) {
          odd_apex[key(a, b)].push_back(c);
          odd_apex[key(a, c)].push_back(b);
          odd_apex[key(b, c)].push_back(a);
        }
      }
    }
  }
  for (const auto& [edge, apexes] : odd_apex) {
    for (std::size_t i = 0; i < apexes.size(); ++i) {
      for (std::size_t j = i + 1; j < apexes.size(); ++j) {
        if (!g.has_edge(apexes[i], apexes[j])) return false;
      }
    }
  }
  return true;
}

std::string witness_to_json(const CliquePartitionWitness& w) {
  CliquePartitionWitness sorted = w;
  sorted.canonicalize();
  nlohmann::json cliques = nlohmann::json::array();
  for (const auto& c : sorted.cliques) cliques.push_back(c.items());
  return nlohmann::json{{"cliques", cliques}}.dump();
}

CliquePartitionWitness witness_from_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("cliques") ||
      !doc["cliques"].is_array()) {
    throw MalformedInput("witness JSON must be an object with a \"cliques\" array");
  }
  CliquePartitionWitness w;
  for (const auto& clique : doc["cliques"]) {
    if (!clique.is_array()) throw MalformedInput("each clique must be an array");
    std::vector<Vertex> members;
    for (const auto& v : clique) {
      if (!v.is_number_unsigned()) {
        throw MalformedInput("clique members must be non-negative integers");
      }
      members.push_back(v.get<Vertex>());
    }
    w.cliques.emplace_back(std::move(members));
  }
  return w;
}

}  // namespace lgk
