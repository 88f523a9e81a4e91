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

#ifndef LGK_GRAPH_H_
#define LGK_GRAPH_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace lgk {

using Vertex = std::uint32_t;

// Undirected edge in canonical orientation (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Orders the endpoints. Does not reject u == v; callers that accept
  // external data go through Graph::from_edge_list, which does.
  static constexpr Edge canonical(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free collection with logarithmic membership queries.
template <typename T>
class SortedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  SortedSet() = default;
  explicit SortedSet(std::vector<T> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  SortedSet(std::initializer_list<T> items)
      : SortedSet(std::vector<T>(items)) {}

  bool contains(const T& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<T>& items() const { return items_; }

  friend auto operator<=>(const SortedSet&, const SortedSet&) = default;

 private:
  std::vector<T> items_;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}

using VertexSet = SortedSet<Vertex>;
using EdgeSet = SortedSet<Edge>;

// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
// sorted neighbor lists.
class Graph {
 public:
  Graph() : Graph(std::size_t{0}) {}

  // Empty graph on n isolated vertices.
  explicit Graph(std::size_t n);

  // Duplicates and both orientations collapse to one edge. Throws
  // MalformedInput on self-loops and endpoints >= n.
  static Graph from_edge_list(std::size_t n,
                              std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(std::size_t n,
                              std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges in canonical lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend struct GraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Induced subgraph together with the map from its vertices back to the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

// G[W], vertices relabeled 0..|W|-1 in ascending parent-id order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& w);

// G - X: the subgraph induced by the complement of X.
Subgraph remove_vertices(const Graph& g, const VertexSet& x);

// G - F. Throws MalformedInput unless F is a subset of E(G).
Graph delete_edges(const Graph& g, const EdgeSet& f);

bool is_clique(const Graph& g, const VertexSet& w);

struct LineGraph {
  Graph graph;
  std::vector<Edge> vertex_to_edge;  // vertex i of the line graph is this edge
};

// Vertex i corresponds to the i-th edge of h in canonical order.
LineGraph line_graph_of(const Graph& h);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace lgk

#endif  // LGK_GRAPH_H_
