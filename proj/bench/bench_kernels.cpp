/*
 * Copyright 2026 The closed-frechet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
// Serial vs OpenMP free-space construction, and the full decision for scale.
#include <benchmark/benchmark.h>

#include "closedfrechet/cli.hpp"
#include "closedfrechet/decision.hpp"

namespace {

using namespace cfrechet;

void BM_FreeSpaceSerial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Curve x = cli::perturbed_circle(n, 1);
    const Curve y = cli::perturbed_circle(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_free_space(x, y, 0.15));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}

void BM_FreeSpaceParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Curve x = cli::perturbed_circle(n, 1);
    const Curve y = cli::perturbed_circle(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_free_space_parallel(x, y, 0.15));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}

void BM_Decide(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Curve x = cli::perturbed_circle(n, 1);
    const Curve y = cli::perturbed_circle(n, 2);
    DecideOptions opts;
    opts.parallel_build = state.range(1) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(x, y, 0.15, opts));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}

} // namespace

BENCHMARK(BM_FreeSpaceSerial)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN);
BENCHMARK(BM_FreeSpaceParallel)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN)->UseRealTime();
BENCHMARK(BM_Decide)->ArgsProduct({{64, 256, 1024}, {0, 1}})->UseRealTime();

BENCHMARK_MAIN();
