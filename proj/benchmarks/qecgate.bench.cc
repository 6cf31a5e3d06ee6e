// Copyright 2026 The qecgate Authors
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

#include "qecgate/gate.h"
#include "qecgate/linalg.h"
#include "qecgate/planner.h"
#include "qecgate/simulator.h"
#include "qecgate/states.h"

using namespace qecgate;

static void BM_svd2x2(benchmark::State &state) {
    ComplexMatrix m{{{0.3, 0.1}, {-0.2, 0.5}}, {{0.7, -0.4}, {0.1, 0.2}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd2x2(m));
    }
}
BENCHMARK(BM_svd2x2);

static void BM_schmidt_decompose(benchmark::State &state) {
    ComplexVector psi{{0.1, 0.3}, {-0.4, 0.2}, {0.5, -0.1}, {0.3, 0.5916079783099616}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmidt_decompose(psi));
    }
}
BENCHMARK(BM_schmidt_decompose);

static void BM_build_gate(benchmark::State &state) {
    GateParams p(0.2, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_gate(p));
    }
}
BENCHMARK(BM_build_gate);

static void BM_apply_postselect(benchmark::State &state) {
    ComplexMatrix g = build_gate(GateParams(0.2, 0.3));
    ComplexVector psi = schmidt_form(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_postselect(g, psi));
    }
}
BENCHMARK(BM_apply_postselect);

static void BM_make_plan(benchmark::State &state) {
    GateParams p = GateParams::from_step(1 + 1.0 / static_cast<double>(state.range(0)), 0.6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_plan(0.1, p));
    }
}
BENCHMARK(BM_make_plan)->Arg(1)->Arg(100)->Arg(10000);

static void BM_run_monte_carlo(benchmark::State &state) {
    GateParams p(0.2, 0.3);
    auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_monte_carlo(0.1, p, StepMode::kNearest, 100000, 7, threads));
    }
}
BENCHMARK(BM_run_monte_carlo)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
