// Copyright 2026 The eznet Authors.
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

#include "eznet/gaussian.h"
#include "eznet/generators.h"
#include "eznet/network_tests.h"
#include "eznet/rng.h"
#include "eznet/subgraph_stats.h"

namespace eznet {
namespace {

void BM_Densities(benchmark::State& state) {
  const auto n = state.range(0);
  const Graph g = SampleEr(n, 20.0 / static_cast<double>(n), Seed{1});
  for (auto _ : state) benchmark::DoNotOptimize(Densities(g));
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_Densities)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_CountTriangles(benchmark::State& state) {
  const auto n = state.range(0);
  const Graph g = SampleSbm(n, 2, 40.0 / n, 10.0 / n, Seed{2}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(CountTriangles(g));
}
BENCHMARK(BM_CountTriangles)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_EzTestDcbm(benchmark::State& state) {
  const Graph g = SampleEr(state.range(0), 0.01, Seed{3});
  for (auto _ : state) benchmark::DoNotOptimize(EzTestDcbm(g));
}
BENCHMARK(BM_EzTestDcbm)->Arg(2000)->Arg(8000);

void BM_SampleDcbm(benchmark::State& state) {
  const auto n = state.range(0);
  const DcbmParams params{n, 3, 30.0 / n, 10.0 / n,
                          WeightDistribution::ScaledLognormal(0.5)};
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleDcbm(params, DeriveSeed(Seed{4}, i++)));
  }
}
BENCHMARK(BM_SampleDcbm)->Arg(1000)->Arg(10000);

void BM_GaussianMoments(benchmark::State& state) {
  const DcbmParams params{state.range(1), 2, 0.3, 0.1,
                          WeightDistribution::ConstantOne()};
  const GaussianSample s = SampleGaussianDcbm(state.range(0), params, Seed{5});
  for (auto _ : state) benchmark::DoNotOptimize(ComputeGaussianMoments(s.data));
}
BENCHMARK(BM_GaussianMoments)->Args({2000, 100})->Args({2000, 400});

void BM_EzTestGaussian(benchmark::State& state) {
  const DcbmParams params{100, 2, 0.3, 0.1, WeightDistribution::ConstantOne()};
  const GaussianSample s = SampleGaussianDcbm(2000, params, Seed{6});
  for (auto _ : state) benchmark::DoNotOptimize(EzTestGaussian(s.data));
}
BENCHMARK(BM_EzTestGaussian);

}  // namespace
}  // namespace eznet

BENCHMARK_MAIN();
