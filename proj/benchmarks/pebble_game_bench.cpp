// Copyright 2026 The rigidperc Authors
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

#include "benchmark/benchmark.h"
#include "rigidperc/graph.hpp"
#include "rigidperc/pebble_game.hpp"

namespace {

using namespace rigidperc;

// Decomposition of G(n, c/n); the second argument is 10c.
void BM_RigidComponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double c = static_cast<double>(state.range(1)) / 10.0;
  const Graph g = sample_gnp(n, c / static_cast<double>(n), RngSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(rigid_components(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
// Below c = 4 components stay small and insertion is near linear; above it
// every insertion touches the giant component, so sizes are kept moderate.
BENCHMARK(BM_RigidComponents)
    ->ArgsProduct({{1000, 5000, 20000}, {20}})
    ->ArgsProduct({{1000, 5000}, {40, 45, 60}})
    ->Unit(benchmark::kMillisecond);

void BM_LamanIsRigid(benchmark::State& state) {
  const Graph g = random_laman_graph(static_cast<std::size_t>(state.range(0)), RngSeed{2});
  for (auto _ : state) benchmark::DoNotOptimize(is_rigid(g));
}
BENCHMARK(BM_LamanIsRigid)->Arg(100)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace
