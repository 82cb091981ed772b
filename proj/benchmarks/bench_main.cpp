// Copyright 2026 The qprog Authors
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

#include "qprog/circuit.hpp"
#include "qprog/matrixcore.hpp"
#include "qprog/mosim.hpp"
#include "qprog/processor.hpp"

namespace {

void BM_HaarUnitary(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(qprog::haar_unitary(d, seed++));
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(16)->Arg(64);

void BM_CircuitUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = qprog::random_brickwork(n, n, 2, qprog::Geometry::line, 7);
  for (auto _ : state) benchmark::DoNotOptimize(qprog::circuit_unitary(c));
}
BENCHMARK(BM_CircuitUnitary)->DenseRange(4, 10, 2);

void BM_DiamondDistance(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto u = qprog::haar_unitary(d, 1);
  const auto v = qprog::haar_unitary(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qprog::diamond_distance_unitary(u, v));
}
BENCHMARK(BM_DiamondDistance)->Arg(2)->Arg(4)->Arg(64);

void BM_QubitDiamondClosedForm(benchmark::State& state) {
  const auto u = qprog::haar_unitary(2, 1);
  const auto v = qprog::haar_unitary(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qprog::qubit_diamond_distance(u, v));
}
BENCHMARK(BM_QubitDiamondClosedForm);

void BM_NetNearest(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  const auto net = qprog::build_net_u2(eps, 0);
  std::uint64_t seed = 3;
  for (auto _ : state) {
    state.PauseTiming();
    const auto u = qprog::haar_unitary(2, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(net.nearest(u));
  }
  state.counters["net_size"] = static_cast<double>(net.size());
}
BENCHMARK(BM_NetNearest)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_EstimateP(benchmark::State& state) {
  const auto u = qprog::haar_unitary(2, 5);
  const qprog::ProbeConfig cfg{static_cast<int>(state.range(0)), {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qprog::estimate_p(u, cfg, 1000, qprog::UnitaryEnsemble::haar, 9));
  }
}
BENCHMARK(BM_EstimateP)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
