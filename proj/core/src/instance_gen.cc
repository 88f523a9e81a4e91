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

#include "lgk/instance_gen.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "json.hpp"
#include "lgk/errors.h"

namespace lgk {

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // inclusive
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return x % bound;
}

namespace {

Graph root_from(Rng& rng, std::size_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GenerationError("edge probability " + std::to_string(p) + " outside [0, 1]");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.push_back(Edge{u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

// r distinct values from [0, total), sorted.
std::vector<std::uint64_t> floyd_sample(Rng& rng, std::uint64_t total, std::uint64_t r) {
  std::vector<std::uint64_t> picked;
  picked.reserve(r);
  for (std::uint64_t j = total - r; j < total; ++j) {
    std::uint64_t t = rng.below(j + 1);
    // Linear scan keeps the result independent of hashing; r is small.
    bool seen = std::find(picked.begin(), picked.end(), t) != picked.end();
    picked.push_back(seen ? j : t);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

Graph random_root(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return root_from(rng, n, p);
}

std::pair<Graph, std::size_t> planted_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const Graph line = line_graph_of(root_from(rng, spec.n, spec.p)).graph;
  const std::uint64_t n = line.num_vertices();
  const std::uint64_t non_edges = n * (n - (n > 0 ? 1 : 0)) / 2 - line.num_edges();
  if (spec.r > non_edges) {
    throw GenerationError("cannot plant " + std::to_string(spec.r) + " edges: only " +
                          std::to_string(non_edges) + " non-edges");
  }
  const auto picked = floyd_sample(rng, non_edges, spec.r);

  std::vector<Edge> edges = line.edges();
  std::size_t next = 0;
  std::uint64_t row_start = 0;  // index of the first non-edge of row u
  for (Vertex u = 0; u < n && next < picked.size(); ++u) {
    auto nbrs = line.neighbors(u);
    const std::size_t later = static_cast<std::size_t>(
        nbrs.end() - std::upper_bound(nbrs.begin(), nbrs.end(), u));
    const std::uint64_t row_size = (n - 1 - u) - later;
    // Walk v > u, skipping neighbors, until every pick in this row is placed.
    std::uint64_t index = row_start;
    auto nb = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (Vertex v = u + 1; v < n && next < picked.size() && picked[next] < row_start + row_size;
         ++v) {
      if (nb != nbrs.end() && *nb == v) {
        ++nb;
        continue;
      }
      if (picked[next] == index) {
        edges.push_back(Edge{u, v});
        ++next;
      }
      ++index;
    }
    row_start += row_size;
  }
  return {Graph::from_edges(n, edges), spec.r};
}

Graph chain_instance(std::size_t levels, std::size_t k, std::uint64_t seed) {
  if (levels == 0) throw GenerationError("chain_instance needs at least one level");
  Rng rng(seed);
  const std::size_t largest = std::min<std::size_t>(4, k + 6);
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}};
  Vertex joint = 3;
  Vertex next = 4;
  for (std::size_t i = 0; i < levels; ++i) {
    const std::size_t size = i == 0 ? 3 : 3 + rng.below(largest - 2);
    std::vector<Vertex> clique{joint};
    while (clique.size() < size) clique.push_back(next++);
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        edges.push_back(Edge{clique[a], clique[b]});
      }
    }
    joint = clique.back();
  }
  return Graph::from_edges(next, edges);
}

std::string gen_spec_to_json(const GenSpec& spec) {
  nlohmann::ordered_json doc;
  doc["n"] = spec.n;
  doc["p"] = spec.p;
  doc["r"] = spec.r;
  doc["seed"] = spec.seed;
  return doc.dump();
}

GenSpec gen_spec_from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    GenSpec spec;
    spec.n = doc.at("n").get<std::size_t>();
    spec.p = doc.at("p").get<double>();
    spec.r = doc.at("r").get<std::size_t>();
    spec.seed = doc.at("seed").get<std::uint64_t>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad GenSpec JSON: ") + e.what());
  }
}

}  // namespace lgk
