// Copyright 2026 The primelab Authors
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

#include <cmath>
#include <complex>

#include "primelab/chebyshev.hpp"
#include "primelab/counting.hpp"
#include "primelab/logint.hpp"
#include "primelab/mertens.hpp"

namespace {

void BM_PiSieve(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(primelab::pi(x));
}
BENCHMARK(BM_PiSieve)->RangeMultiplier(10)->Range(1000000, 100000000)->Unit(benchmark::kMillisecond);

void BM_PiSieveWorkers(benchmark::State& state) {
  const primelab::Exec exec{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(primelab::pi(100000000, exec));
}
BENCHMARK(BM_PiSieveWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PiLegendre(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(primelab::pi_legendre(x));
}
BENCHMARK(BM_PiLegendre)->RangeMultiplier(10)->Range(1000000, 100000000)->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primelab::psi(10000000));
}
BENCHMARK(BM_Psi)->Unit(benchmark::kMillisecond);

void BM_Mertens(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primelab::mertens(10000000));
}
BENCHMARK(BM_Mertens)->Unit(benchmark::kMillisecond);

// One argument per evaluation region: series, continued fraction, asymptotic.
void BM_Ei(benchmark::State& state) {
  static const std::complex<double> points[] = {{3.0, 4.0}, {-12.0, 15.0}, {20.0, 400.0}};
  const auto z = points[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(primelab::ei(z));
}
BENCHMARK(BM_Ei)->DenseRange(0, 2);

void BM_LiQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primelab::li_quadrature(1e8));
}
BENCHMARK(BM_LiQuadrature);

}  // namespace

BENCHMARK_MAIN();
