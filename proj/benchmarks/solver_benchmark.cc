// Copyright 2026 The Coarse Utility Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cue/catalog.h"
#include "cue/equilibrium.h"
#include "cue/expression.h"
#include "cue/solver.h"

namespace cue {
namespace {

void BM_ExpressionEvaluate(benchmark::State& state) {
  Expression e = Expression::Parse("s1 * min(1, max(0, (s2 - s1 + 1) / 2))");
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.Evaluate(x, 0.7));
    x += 1e-9;
  }
}
BENCHMARK(BM_ExpressionEvaluate);

void BM_PayoffTable(benchmark::State& state) {
  Game game = Catalog("cournot");
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PayoffTable::Make(game, n));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_PayoffTable)->Arg(41)->Arg(121)->Unit(benchmark::kMicrosecond);

void BM_EnumerateNe(benchmark::State& state) {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 121);
  CoarseGame game(table, {Clustering::AtLeast(0.1), Clustering::None()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateNe(game));
  }
}
BENCHMARK(BM_EnumerateNe)->Unit(benchmark::kMicrosecond);

void BM_ImprovementReachable(benchmark::State& state) {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 121);
  CoarseGame game(table, {Clustering::All(), Clustering::None()});
  Profile anchor = {60, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ImprovementReachable(game, anchor).Profiles());
  }
}
BENCHMARK(BM_ImprovementReachable)->Unit(benchmark::kMicrosecond);

void BM_CheckCue(benchmark::State& state) {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 121);
  ClusteringProfile f = {Clustering::AtLeast(0.12), Clustering::AtLeast(0.12)};
  Profile s = {36, 36};
  for (auto _ : state) {
    // A fresh solver each time so the deviation cache starts cold.
    Solver solver(table);
    benchmark::DoNotOptimize(solver.Check(Concept::kCue, f, s));
  }
}
BENCHMARK(BM_CheckCue)->Unit(benchmark::kMillisecond);

void BM_EnumerateCournot(benchmark::State& state) {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 41);
  for (auto _ : state) {
    Solver solver(table);
    benchmark::DoNotOptimize(EnumerateOutcomes(solver, {Concept::kCue}));
  }
}
BENCHMARK(BM_EnumerateCournot)->Unit(benchmark::kMillisecond);

void BM_EnumerateHotelling(benchmark::State& state) {
  PayoffTable table =
      PayoffTable::Make(Catalog("hotelling"), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Solver solver(table);
    benchmark::DoNotOptimize(EnumerateOutcomes(solver, {Concept::kCue}));
  }
}
BENCHMARK(BM_EnumerateHotelling)->Arg(31)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cue

BENCHMARK_MAIN();
