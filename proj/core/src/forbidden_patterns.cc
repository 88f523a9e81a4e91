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

#include "lgk/forbidden_patterns.h"

#include <algorithm>
#include <numeric>
#include <string_view>

#include "lgk/edge_list_io.h"
#include "lgk/errors.h"
#include "lgk/recognition.h"

namespace lgk {

namespace {

// Generated from core/data/patterns/beineke_*.txt.
constexpr std::string_view kPatternText[] = {
#include "beineke_data.inc"
};

constexpr std::size_t kMaxPatternSize = 6;

std::string pattern_name(std::string_view text) {
  if (text.empty() || text[0] != '#') return {};
  std::string_view line = text.substr(0, text.find('\n'));
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return {};
  line.remove_prefix(colon + 1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return std::string(line);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool is_line_on(const Graph& g, const std::vector<Vertex>& w) {
  return is_line_graph(induced_subgraph(g, VertexSet(w)).graph);
}

// Vertices of `within` at distance <= radius from `center` in G[within].
std::vector<Vertex> ball(const Graph& g, const std::vector<Vertex>& within,
                         Vertex center, int radius) {
  std::vector<int> dist(g.num_vertices(), -2);  // -2: not in `within`
  for (Vertex v : within) dist[v] = -1;
  std::vector<Vertex> out{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    Vertex v = out[head];
    if (dist[v] == radius) continue;
    for (Vertex x : g.neighbors(v)) {
      if (dist[x] == -1) {
        dist[x] = dist[v] + 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Pattern>& beineke_patterns() {
  static const std::vector<Pattern> patterns = [] {
    std::vector<Pattern> out;
    int id = 1;
    for (std::string_view text : kPatternText) {
      out.push_back(Pattern{id++, pattern_name(text), parse_edge_list(text)});
    }
    return out;
  }();
  return patterns;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = a.degree(v) == b.degree(perm[v]);
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      ok = b.has_edge(perm[edges[i].u], perm[edges[i].v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<int> match_pattern(const Graph& g) {
  if (g.num_vertices() > kMaxPatternSize) return std::nullopt;
  for (const Pattern& p : beineke_patterns()) {
    if (isomorphic_small(g, p.graph)) return p.id;
  }
  return std::nullopt;
}

std::optional<VertexSet> find_forbidden_subgraph(const Graph& g) {
  auto traced = detail::recognize_traced(g);
  auto* failure = std::get_if<detail::RecognitionFailure>(&traced);
  if (failure == nullptr) return std::nullopt;

  std::vector<Vertex> w = ball(g, failure->prefix, failure->culprit,
                               static_cast<int>(kMaxPatternSize) - 1);
  std::vector<Vertex> candidate;
  for (std::size_t block = std::max<std::size_t>(1, w.size() / 2);;
       block = std::max<std::size_t>(1, block / 2)) {
    for (std::size_t i = 0; i < w.size();) {
      const std::size_t end = std::min(i + block, w.size());
      candidate.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      candidate.insert(candidate.end(), w.begin() + static_cast<std::ptrdiff_t>(end), w.end());
      if (!candidate.empty() && !is_line_on(g, candidate)) {
        w.swap(candidate);
      } else {
        i = end;
      }
    }
    if (block == 1) break;
  }
  // Each survivor failed its single-vertex deletion against a superset of
  // the final W, and induced subgraphs of line graphs are line graphs, so
  // G[W] is a minimal non-line graph.
  if (w.size() > kMaxPatternSize) {
    throw InternalInvariantError("minimal non-line subgraph with " +
                                 std::to_string(w.size()) + " vertices");
  }
  return VertexSet(std::move(w));
}

std::variant<Modulator, TooManyPacked> build_modulator(const Graph& g, std::size_t k) {
  std::vector<Vertex> s;
  std::vector<VertexSet> packing;

  // Forbidden subgraph of G - (S \ {kept}); kept == nullopt removes all of S.
  auto search = [&](std::optional<Vertex> kept) -> std::optional<VertexSet> {
    std::vector<Vertex> removed;
    for (Vertex v : s) {
      if (v != kept) removed.push_back(v);
    }
    Subgraph sub = remove_vertices(g, VertexSet(std::move(removed)));
    auto local = find_forbidden_subgraph(sub.graph);
    if (!local) return std::nullopt;
    std::vector<Vertex> mapped;
    for (Vertex v : *local) mapped.push_back(sub.to_parent[v]);
    return VertexSet(std::move(mapped));
  };

  for (;;) {
    std::optional<VertexSet> found = search(std::nullopt);
    for (std::size_t i = 0; i < s.size() && !found; ++i) found = search(s[i]);
    if (!found) return Modulator{VertexSet(s), std::move(packing)};

    s.insert(s.end(), found->begin(), found->end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    packing.push_back(std::move(*found));
    if (packing.size() > k) return TooManyPacked{std::move(packing)};
  }
}

}  // namespace lgk
