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

#include "lgk/exact_solver.h"

#include <numeric>
#include <string>
#include <vector>

#include "lgk/errors.h"
#include "lgk/forbidden_patterns.h"

namespace lgk {

namespace {

// Edges deleted so far live in `deleted`; `g` is the original graph minus them.
bool branch(const Graph& g, std::size_t budget, std::vector<Edge>& deleted) {
  auto w = find_forbidden_subgraph(g);
  if (!w) return true;
  if (budget == 0) return false;
  const Subgraph sub = induced_subgraph(g, *w);
  for (const Edge& local : sub.graph.edges()) {
    const Edge e{sub.to_parent[local.u], sub.to_parent[local.v]};
    deleted.push_back(e);
    if (branch(delete_edges(g, EdgeSet({e})), budget - 1, deleted)) return true;
    deleted.pop_back();
  }
  return false;
}

Solution certify(const Graph& g, EdgeSet deleted) {
  auto witness = recognize(delete_edges(g, deleted));
  if (!witness) throw InternalInvariantError("solver returned a non-solution");
  return Solution{std::move(deleted), std::move(*witness)};
}

}  // namespace

std::optional<Solution> solve_branching(const Graph& g, std::size_t k) {
  std::vector<Edge> deleted;
  if (!branch(g, k, deleted)) return std::nullopt;
  return certify(g, EdgeSet(std::move(deleted)));
}

std::optional<Solution> solve_bruteforce(const Graph& g, std::size_t k) {
  const std::size_t m = g.num_edges();
  if (m > kBruteforceMaxEdges || k > kBruteforceMaxK) {
    throw InstanceTooLarge("brute force takes m <= " + std::to_string(kBruteforceMaxEdges) +
                           " and k <= " + std::to_string(kBruteforceMaxK) + ", got m = " +
                           std::to_string(m) + ", k = " + std::to_string(k));
  }
  const std::vector<Edge> edges = g.edges();
  std::vector<bool> gone(m);
  std::vector<Edge> kept;
  kept.reserve(m);
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= std::min(k, m); ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (;;) {
      std::fill(gone.begin(), gone.end(), false);
      for (std::size_t i : pick) gone[i] = true;
      kept.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (!gone[i]) kept.push_back(edges[i]);
      }
      if (is_line_graph(Graph::from_edges(g.num_vertices(), kept))) {
        std::vector<Edge> deleted;
        for (std::size_t i : pick) deleted.push_back(edges[i]);
        return certify(g, EdgeSet(std::move(deleted)));
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> min_deletion(const Graph& g, std::size_t cap) {
  for (std::size_t k = 0; k <= cap; ++k) {
    if (solve_branching(g, k)) return k;
  }
  return std::nullopt;
}

}  // namespace lgk
