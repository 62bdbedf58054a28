// Copyright 2026 The qagents Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qagents/kernels.hpp"
#include "qagents/recursion.hpp"
#include "qagents/statevec.hpp"

namespace {

using namespace qagents;

std::vector<complex_t> random_amplitudes(std::size_t n) {
    std::mt19937_64 rng(7);
    const auto psi = random_state(n, rng);
    return {psi.amplitudes().begin(), psi.amplitudes().end()};
}

const Matrix2 kRotation{complex_t{0.6, 0.0}, complex_t{0.0, -0.8},
                        complex_t{0.0, -0.8}, complex_t{0.6, 0.0}};
const Matrix2 kFlip{0.0, 1.0, 1.0, 0.0};

template <auto Kernel> void BM_Single(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : state) {
        Kernel(amps, n, n / 2, kRotation);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations());
}

template <auto Kernel> void BM_Controlled(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : state) {
        Kernel(amps, n, 0, n - 1, kFlip);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations());
}

template <auto Kernel> void BM_Expectation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto amps = random_amplitudes(n);
    std::vector<Lambda> ops(n, Lambda::Identity);
    ops[0] = Lambda::L2;
    ops[n - 1] = Lambda::L3;
    const auto masks = kernels::string_masks(OperatorString(ops));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(amps, masks));
    }
}

void BM_Recursion(benchmark::State &state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        RecursionState r(20, 1.0);
        r.advance_to(steps);
        benchmark::DoNotOptimize(r.current());
    }
}

} // namespace

BENCHMARK(BM_Single<kernels::serial::apply_single>)->Name("single/serial")->DenseRange(12, 21, 3);
BENCHMARK(BM_Single<kernels::omp::apply_single>)->Name("single/omp")->DenseRange(12, 21, 3);
BENCHMARK(BM_Controlled<kernels::serial::apply_controlled_on_zero>)
    ->Name("controlled/serial")->DenseRange(12, 21, 3);
BENCHMARK(BM_Controlled<kernels::omp::apply_controlled_on_zero>)
    ->Name("controlled/omp")->DenseRange(12, 21, 3);
BENCHMARK(BM_Expectation<kernels::serial::expectation>)->Name("expectation/serial")->DenseRange(12, 21, 3);
BENCHMARK(BM_Expectation<kernels::omp::expectation>)->Name("expectation/omp")->DenseRange(12, 21, 3);
BENCHMARK(BM_Recursion)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
