// Copyright 2026 The ci-mirror Authors.
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

#include "cimirror/bps.hpp"
#include "cimirror/suites.hpp"

using namespace cimirror;

namespace {

void BM_GwQuintic(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HyperContext ctx(MultiDegree({5}), D);
    benchmark::DoNotOptimize(gw_series(ctx));
  }
}

void BM_BpsAllThreefolds(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const auto kernel = find_kernel("gv3");
  for (auto _ : state) {
    for (const auto& md : enumerate_cy(3)) {
      HyperContext ctx(md, D);
      benchmark::DoNotOptimize(bps_genus1(ctx, *kernel));
    }
  }
}

void BM_GwSextic5fold(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HyperContext ctx(MultiDegree({7}), D);
    benchmark::DoNotOptimize(gw_series(ctx));
  }
}

void BM_IdentitySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identities_suite(MultiDegree({2, 2, 2, 2}), 12));
}

}  // namespace

BENCHMARK(BM_GwQuintic)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BpsAllThreefolds)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GwSextic5fold)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
