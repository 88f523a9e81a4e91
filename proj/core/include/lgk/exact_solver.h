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

// Exact oracles for Line-Graph Edge Deletion. Both are exponential in k and
// exist to check the kernel, not to compete with it.

#ifndef LGK_EXACT_SOLVER_H_
#define LGK_EXACT_SOLVER_H_

#include <cstddef>
#include <optional>

#include "lgk/graph.h"
#include "lgk/recognition.h"

namespace lgk {

struct Solution {
  EdgeSet deleted;                       // edges of G
  CliquePartitionWitness certificate;    // of G - deleted
};

// Depth-first branching: find a forbidden subgraph G[W] and try deleting each
// of its edges (canonical order) with budget k - 1. Returns the first
// solution in that order, or nullopt for NO.
std::optional<Solution> solve_branching(const Graph& g, std::size_t k);

// Largest instance solve_bruteforce accepts.
inline constexpr std::size_t kBruteforceMaxEdges = 40;
inline constexpr std::size_t kBruteforceMaxK = 5;

// Tries every edge subset of size 0, 1, ..., k, each size in lexicographic
// order of edge indices (edges in canonical order). Throws InstanceTooLarge
// when m > 40 or k > 5.
std::optional<Solution> solve_bruteforce(const Graph& g, std::size_t k);

// Smallest k <= cap for which solve_branching answers YES.
std::optional<std::size_t> min_deletion(const Graph& g, std::size_t cap);

}  // namespace lgk

#endif  // LGK_EXACT_SOLVER_H_
