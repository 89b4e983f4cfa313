// Copyright 2026 The fdp-edgeworth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "fdp/accountant.h"
#include "fdp/distributions.h"

namespace fdp {
namespace {

// Laplace pairs with theta = 3 / sqrt(n), the family used in the Laplace
// scaling tables.
DistributionPair LaplaceFor(int64_t n) {
  return *DistributionPair::Laplace(3.0 / std::sqrt(static_cast<double>(n)));
}

void BM_LaplaceCurve(benchmark::State& state, Method method) {
  const int64_t n = state.range(0);
  const DistributionPair pair = LaplaceFor(n);
  for (auto _ : state) {
    auto curve = ComposeIid(pair, n, method);
    if (!curve.ok()) {
      state.SkipWithError(std::string(curve.status().message()).c_str());
      break;
    }
    benchmark::DoNotOptimize(curve->betas().data());
  }
}

void BM_SgdCurve(benchmark::State& state, Method method) {
  const int64_t n = state.range(0);
  const double p = 0.5 * std::pow(static_cast<double>(n), -0.25);
  for (auto _ : state) {
    auto curve = SgdPrivacy(n, p, 1.0, method);
    if (!curve.ok()) {
      state.SkipWithError(std::string(curve.status().message()).c_str());
      break;
    }
    benchmark::DoNotOptimize(curve->betas().data());
  }
}

BENCHMARK_CAPTURE(BM_LaplaceCurve, clt, Method::kClt)
    ->Arg(2)->Arg(10)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LaplaceCurve, edgeworth, Method::kEdgeworth)
    ->Arg(2)->Arg(10)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LaplaceCurve, exact, Method::kExact)
    ->Arg(2)->Arg(10)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_SgdCurve, clt, Method::kClt)
    ->Arg(1)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SgdCurve, edgeworth, Method::kEdgeworth)
    ->Arg(1)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SgdCurve, exact, Method::kExact)
    ->Arg(1)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fdp

BENCHMARK_MAIN();
