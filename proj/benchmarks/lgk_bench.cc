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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "lgk/forbidden_patterns.h"
#include "lgk/graph.h"
#include "lgk/instance_gen.h"
#include "lgk/kernelizer.h"
#include "lgk/recognition.h"

namespace {

// Line graph of a random root on n vertices.
lgk::Graph line_of_root(std::size_t n, double p, std::uint64_t seed) {
  return lgk::line_graph_of(lgk::random_root(n, p, seed)).graph;
}

void BM_Recognize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lgk::Graph g = line_of_root(n, 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lgk::recognize(g));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_Recognize)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_FindForbidden(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lgk::Graph g = lgk::planted_instance(lgk::GenSpec{n, 0.3, 1, 11}).first;
  for (auto _ : state) benchmark::DoNotOptimize(lgk::find_forbidden_subgraph(g));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_FindForbidden)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_Kernelize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  lgk::Graph g = lgk::planted_instance(lgk::GenSpec{n, 0.3, k, 13}).first;
  for (auto _ : state) benchmark::DoNotOptimize(lgk::kernelize(g, k));
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_Kernelize)
    ->Args({30, 1})
    ->Args({30, 3})
    ->Args({60, 3})
    ->Args({60, 5})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
