// Copyright 2026 The fsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "fsl/cross_ratios.hpp"
#include "fsl/dilogarithm.hpp"
#include "fsl/flags.hpp"
#include "fsl/norms.hpp"
#include "fsl/random.hpp"
#include "fsl/reduction.hpp"

namespace fsl {
namespace {

void BM_BlochWigner(benchmark::State& state) {
  Rng rng(1);
  std::vector<Complex> z(256);
  for (Complex& v : z) v = 2.0 * rng.ComplexGaussian();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BlochWigner(z[i++ & 255]));
  }
}
BENCHMARK(BM_BlochWigner);

void BM_CrossRatios(benchmark::State& state) {
  const FormedSpace s = FormedSpace::Make(1, 0, static_cast<int>(state.range(0)));
  Rng rng(2);
  const ConfigTuple t = RandomTuple(s, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeCrossRatios4(t));
  }
}
BENCHMARK(BM_CrossRatios)->Arg(2)->Arg(4)->Arg(8);

void BM_ReduceQuadruple(benchmark::State& state) {
  const FormedSpace s = FormedSpace::Make(1, 0, static_cast<int>(state.range(0)));
  Rng rng(3);
  const ConfigTuple t = RandomTuple(s, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReduceQuadruple(t));
  }
}
BENCHMARK(BM_ReduceQuadruple)->Arg(2)->Arg(4)->Arg(8);

void BM_ReduceQuintuple(benchmark::State& state) {
  const FormedSpace s = FormedSpace::Make(1, 1, 3);
  Rng rng(4);
  const ConfigTuple t = RandomTuple(s, 5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReduceQuintuple(t));
  }
}
BENCHMARK(BM_ReduceQuintuple);

std::vector<AffineFlag> Flags(int n, Rng& rng) {
  std::vector<AffineFlag> f;
  for (int i = 0; i < 5; ++i) f.push_back(RandomFlag(n, rng));
  return f;
}

void BM_GeneralPosition(benchmark::State& state) {
  Rng rng(5);
  const auto f = Flags(static_cast<int>(state.range(0)), rng);
  const std::span<const AffineFlag> four(f.data(), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GeneralPosition(four));
  }
}
BENCHMARK(BM_GeneralPosition)->DenseRange(2, 4);

void BM_Bn(benchmark::State& state) {
  Rng rng(6);
  const auto f = Flags(static_cast<int>(state.range(0)), rng);
  const std::span<const AffineFlag> four(f.data(), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Bn(four));
  }
}
BENCHMARK(BM_Bn)->DenseRange(2, 4);

// Pruned vs full sum over index tuples.
void BM_BnFull(benchmark::State& state) {
  Rng rng(6);
  const auto f = Flags(static_cast<int>(state.range(0)), rng);
  const std::span<const AffineFlag> four(f.data(), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BnFull(four));
  }
}
BENCHMARK(BM_BnFull)->DenseRange(2, 4);

void BM_CocycleResidual(benchmark::State& state) {
  Rng rng(7);
  const auto f = Flags(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CocycleResidual(f));
  }
}
BENCHMARK(BM_CocycleResidual)->DenseRange(2, 4);

void BM_B4Standard(benchmark::State& state) {
  Rng rng(8);
  const Complex a = rng.ComplexGaussian();
  const Complex b = rng.ComplexGaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(B4Standard(a, b));
  }
}
BENCHMARK(BM_B4Standard);

void BM_EstimateSupVolP1(benchmark::State& state) {
  const Objective f = VolP1Objective();
  const Sampler s = VolP1Sampler();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EstimateSup(f, s, static_cast<std::uint64_t>(state.range(0)), 1, "bench", {}, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateSupVolP1)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fsl

BENCHMARK_MAIN();
