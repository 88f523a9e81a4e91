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

#include "lgk/graph.h"

#include <limits>
#include <string>

#include "lgk/errors.h"

namespace lgk {

// Builds CSR arrays from canonical, sorted, unique edges.
struct GraphBuilder {
  static Graph build(std::size_t n, const std::vector<Edge>& edges);
};

Graph GraphBuilder::build(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  auto& offsets = g.offsets_;
  auto& targets = g.targets_;
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(2 * edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Edges sorted by (u, v): for every vertex x, the neighbors smaller than x
  // arrive (as e.u) in ascending order before the larger ones (as e.v of x's
  // own edges, also ascending). Two passes keep each list sorted.
  for (const Edge& e : edges) targets[cursor[e.v]++] = e.u;
  for (const Edge& e : edges) targets[cursor[e.u]++] = e.v;
  return g;
}

namespace {

constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

}  // namespace

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw MalformedInput("edge endpoint out of range: " + std::to_string(e.u) +
                           " " + std::to_string(e.v) + " (n = " +
                           std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw MalformedInput("self-loop at vertex " + std::to_string(e.u));
    }
    canon.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return GraphBuilder::build(n, canon);
}

Graph Graph::from_edge_list(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (const auto& [a, b] : edges) raw.push_back(Edge{a, b});
  return from_edges(n, raw);
}

Graph Graph::from_edge_list(std::size_t n,
                            std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(
                               edges.begin(), edges.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back(Edge{u, v});
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  const std::size_t n = g.num_vertices();
  if (!w.empty() && w.items().back() >= n) {
    throw MalformedInput("vertex " + std::to_string(w.items().back()) +
                         " not in graph of order " + std::to_string(n));
  }
  std::vector<Vertex> to_local(n, kAbsent);
  for (std::size_t i = 0; i < w.size(); ++i) to_local[w[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Vertex x : g.neighbors(w[i])) {
      Vertex j = to_local[x];
      if (j != kAbsent && i < j) edges.push_back(Edge{static_cast<Vertex>(i), j});
    }
  }
  // Already canonical and sorted: i ascends, and neighbor lists are sorted
  // with to_local monotone on w.
  Subgraph sub;
  sub.graph = GraphBuilder::build(w.size(), edges);
  sub.to_parent = w.items();
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& x) {
  std::vector<Vertex> keep;
  keep.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!x.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Graph delete_edges(const Graph& g, const EdgeSet& f) {
  for (const Edge& e : f) {
    if (!g.has_edge(e.u, e.v)) {
      throw MalformedInput("edge " + std::to_string(e.u) + " " +
                           std::to_string(e.v) + " is not in the graph");
    }
  }
  std::vector<Edge> kept;
  kept.reserve(g.num_edges() - f.size());
  for (const Edge& e : g.edges()) {
    if (!f.contains(e)) kept.push_back(e);
  }
  return GraphBuilder::build(g.num_vertices(), kept);
}

bool is_clique(const Graph& g, const VertexSet& w) {
  if (!w.empty() && w.items().back() >= g.num_vertices()) {
    throw MalformedInput("vertex " + std::to_string(w.items().back()) +
                         " not in graph");
  }
  for (Vertex v : w) {
    if (g.degree(v) + 1 < w.size()) return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!g.has_edge(w[i], w[j])) return false;
    }
  }
  return true;
}

LineGraph line_graph_of(const Graph& h) {
  LineGraph lg;
  lg.vertex_to_edge = h.edges();
  const std::size_t nl = lg.vertex_to_edge.size();

  // Edge ids incident to each root vertex, ascending.
  std::vector<std::vector<Vertex>> incident(h.num_vertices());
  for (std::size_t i = 0; i < nl; ++i) {
    incident[lg.vertex_to_edge[i].u].push_back(static_cast<Vertex>(i));
    incident[lg.vertex_to_edge[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        edges.push_back(Edge{star[a], star[b]});
      }
    }
  }
  // Two distinct simple edges share at most one endpoint, so no duplicates.
  std::sort(edges.begin(), edges.end());
  lg.graph = GraphBuilder::build(nl, edges);
  return lg;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex x : g.neighbors(v)) {
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace lgk
