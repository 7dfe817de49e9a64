// Copyright 2026 The toeplitz-fh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tfh/kernels.hpp"
#include "tfh/spectra.hpp"
#include "tfh/symbols.hpp"
#include "tfh/toeplitz.hpp"

namespace {

using namespace tfh;

void BM_Levinson(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto table = fourier_of_symbol(SymbolSpec::one(0.25), N);
  for (auto _ : state) {
    ToeplitzSystem sys(table, N);
    benchmark::DoNotOptimize(sys.predictor().gamma.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_Levinson)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_ToeplitzSolve(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto sys = build_toeplitz(SymbolSpec::one(0.25), N);
  GsSolver solver(sys.predictor());
  std::vector<cplx> rhs(std::size_t(N) + 1, cplx(1.0, 0.0));
  for (auto _ : state) {
    auto x = solver.apply(rhs);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_ToeplitzSolve)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_Matvec(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto sys = build_toeplitz(SymbolSpec::one(0.25), N);
  std::vector<cplx> x(std::size_t(N) + 1, cplx(1.0, 0.0));
  for (auto _ : state) {
    auto y = matvec(sys, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_Matvec)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_LambdaMin(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto sys = build_toeplitz(SymbolSpec::one(0.3), N);
  (void)sys.predictor();
  for (auto _ : state) {
    auto est = lambda_min_toeplitz(sys, 1e-10);
    benchmark::DoNotOptimize(est.value);
  }
}
BENCHMARK(BM_LambdaMin)->Arg(512)->Arg(2048);

void BM_EvalG(benchmark::State& state) {
  const GKernel g(0.3);
  double x = 0.3, y = 0.61;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(x, y));
    y = (y == 0.61) ? 0.3005 : 0.61;  // alternate far and near diagonal
  }
}
BENCHMARK(BM_EvalG);

void BM_NystromAssembly(benchmark::State& state) {
  const int M = int(state.range(0));
  for (auto _ : state) {
    auto k = nystrom_G(0.3, M, 1.0);
    benchmark::DoNotOptimize(k.entries.data().data());
  }
}
BENCHMARK(BM_NystromAssembly)->Arg(100)->Arg(250);

}  // namespace

BENCHMARK_MAIN();
