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

// Seeded generators for line graphs, planted near-line instances and clique
// chains.
//
// Randomness comes from std::mt19937_64 (the 64-bit Mersenne Twister, whose
// output sequence is fixed by the C++ standard). Draws are converted by hand
// so that output does not depend on the standard library:
//   uniform double in [0, 1):  (x >> 11) * 2^-53
//   uniform integer in [0, b): rejection of x >= 2^64 - (2^64 mod b), then x mod b
// With seed 5489 the 10000th output of the engine is 9981545732273789042.

#ifndef LGK_INSTANCE_GEN_H_
#define LGK_INSTANCE_GEN_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "lgk/graph.h"

namespace lgk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform01();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  std::size_t n = 0;        // root vertices
  double p = 0.0;           // root edge probability
  std::size_t r = 0;        // planted noise edges
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

// G(n, p): pairs u < v visited in lexicographic order, each kept when the next
// uniform double is below p.
Graph random_root(std::size_t n, double p, std::uint64_t seed);

// L(random_root(n, p, seed)) plus r distinct non-edges chosen uniformly
// (Floyd's sampling over non-edge indices, non-edges numbered row by row).
// The second member is r, an upper bound on the optimum. Throws
// GenerationError if r exceeds the number of non-edges.
std::pair<Graph, std::size_t> planted_instance(const GenSpec& spec);

// A claw on 0..3 whose leaf 3 starts a path of `levels` cliques, consecutive
// ones sharing one vertex. The first clique is a triangle; the others have
// 3 or 4 vertices, chosen by the seed (always fewer than k + 7). Throws
// GenerationError when levels == 0.
Graph chain_instance(std::size_t levels, std::size_t k, std::uint64_t seed);

std::string gen_spec_to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(std::string_view text);

}  // namespace lgk

#endif  // LGK_INSTANCE_GEN_H_
