// Copyright 2026 The stosszahl Authors
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

#include <vector>

#include "stosszahl/linalg.hpp"
#include "stosszahl/master_equation.hpp"
#include "stosszahl/measurement.hpp"
#include "stosszahl/quantum_state.hpp"
#include "stosszahl/transactional_gas.hpp"

namespace {

using namespace stosszahl;

CMatrix hermitian(Index d) {
  Rng rng = make_rng(static_cast<std::uint64_t>(d));
  CMatrix a(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) a(i, j) = Complex(uniform_unit(rng) - 0.5, uniform_unit(rng) - 0.5);
  return a + a.adjoint();
}

void BM_EigHermitian(benchmark::State& state) {
  const CMatrix a = hermitian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(a));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_Expm(benchmark::State& state) {
  const auto n = state.range(0);
  RMatrix rates = RMatrix::Constant(n, n, 0.7);
  rates.diagonal().setZero();
  const auto m = master::build_master_operator(master::RateMatrix(rates));
  for (auto _ : state) benchmark::DoNotOptimize(expm(m.matrix() * 3.0));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(16)->Arg(51);

void BM_Process1(benchmark::State& state) {
  const auto d = state.range(0);
  const DensityMatrix rho = DensityMatrix::maximally_mixed(d);
  const auto basis = MeasurementBasis::eigenbasis(Observable(hermitian(d)));
  for (auto _ : state) benchmark::DoNotOptimize(process1(rho, basis));
}
BENCHMARK(BM_Process1)->Arg(2)->Arg(8)->Arg(32);

void BM_CollapseSample(benchmark::State& state) {
  std::vector<double> w(static_cast<std::size_t>(state.range(0)), 1.0);
  Rng rng = make_rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(collapse_sample(w, rng));
}
BENCHMARK(BM_CollapseSample)->Arg(2)->Arg(50)->Arg(1000);

void BM_GasRun(benchmark::State& state) {
  gas::GasConfig c;
  c.molecules = static_cast<std::size_t>(state.range(0));
  c.initial_excited = c.molecules / 2;
  c.t_max = 50.0;
  std::uint64_t seed = 0;
  std::size_t events = 0;
  for (auto _ : state) {
    c.seed = seed++;
    const auto r = gas::run(c);
    events += r.ledger.size();
  }
  state.counters["events/s"] = benchmark::Counter(static_cast<double>(events),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GasRun)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
