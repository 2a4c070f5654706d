// Copyright 2026 The conformal_bm Authors.
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

#include <cstdint>

#include <benchmark/benchmark.h>
#include <boost/random/normal_distribution.hpp>

#include "cbm/random.hpp"
#include "cbm/sampler.hpp"
#include "cbm/series.hpp"

namespace {

using namespace cbm;

void BM_PhiloxWords(benchmark::State& state) {
  PhiloxStream s({0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(s());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxWords);

void BM_PhiloxUniform(benchmark::State& state) {
  PhiloxStream s({0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(s.uniform());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxUniform);

template <class Real>
void BM_ZigguratNormal(benchmark::State& state) {
  PhiloxStream s({0, 0});
  boost::random::normal_distribution<Real> normal;
  for (auto _ : state) benchmark::DoNotOptimize(normal(s));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_TEMPLATE(BM_ZigguratNormal, float);
BENCHMARK_TEMPLATE(BM_ZigguratNormal, double);

void BM_ExitTime1d(benchmark::State& state) {
  const double dt = 1.0 / static_cast<double>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_exit_time_1d(kPi / 4.0, 0.0, dt, {0, i++}));
}
BENCHMARK(BM_ExitTime1d)->Arg(1000)->Arg(10000);

void BM_ExitDiskExact(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_exit_disk(ComplexPoint(0.5, 0.0), {0, i++}));
}
BENCHMARK(BM_ExitDiskExact);

void BM_OddSquareSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odd_square_sum(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OddSquareSum)->RangeMultiplier(10)->Range(1000, 10'000'000)->Complexity(benchmark::oN);

void BM_ReflectionBracketed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reflection_series_bracketed(0.5, 1e-6));
}
BENCHMARK(BM_ReflectionBracketed);

void BM_CoeffExtract(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_extract(ConformalMap::ArcTan(), 201, 0.99, q));
}
BENCHMARK(BM_CoeffExtract)->Arg(1024)->Arg(4096);

void BM_SinhProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sinh_product(1.0, n));
}
BENCHMARK(BM_SinhProduct)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
