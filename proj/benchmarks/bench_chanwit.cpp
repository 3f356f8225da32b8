// Copyright 2026 The chanwit Authors
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

#include "benchmark/benchmark.h"
#include "chanwit/protocol.hpp"
#include "chanwit/robustness.hpp"
#include "chanwit/witness.hpp"

using namespace chanwit;

static void BM_beta_sru_cnot(benchmark::State &state) {
    auto u = gate_matrix(GateName::CNOT);
    BetaOptions options{.restarts = static_cast<std::size_t>(state.range(0)), .seed = 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_sru(u, options));
    }
}
BENCHMARK(BM_beta_sru_cnot)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_pauli_decompose(benchmark::State &state) {
    auto w = build_witness(GateName::CZ, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pauli_decompose(w));
    }
}
BENCHMARK(BM_pauli_decompose)->Unit(benchmark::kMicrosecond);

static void BM_minimal_settings(benchmark::State &state) {
    auto d = pauli_decompose(build_witness(GateName::CNOT, 0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_settings(d));
    }
}
BENCHMARK(BM_minimal_settings)->Unit(benchmark::kMillisecond);

static void BM_noisy_expectation(benchmark::State &state) {
    auto w = build_witness(GateName::CNOT, 0.5);
    for (auto _ : state) {
        auto ch = noisy_gate(GateName::CNOT, {NoiseKind::Depolarising, 0.2, 0.3});
        benchmark::DoNotOptimize(expectation(w, ch));
    }
}
BENCHMARK(BM_noisy_expectation)->Unit(benchmark::kMicrosecond);

static void BM_estimate_expectation(benchmark::State &state) {
    auto w = build_witness(GateName::CNOT, 0.5);
    auto plan = MeasurementPlan::from(w);
    auto ch = noisy_gate(GateName::CNOT, {NoiseKind::AmplitudeDamping, 0.2, 0.3});
    ShotPlan shots{static_cast<std::size_t>(state.range(0)), 7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_expectation(plan, ch, shots));
    }
}
BENCHMARK(BM_estimate_expectation)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_sweep(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(GateName::CZ, NoiseKind::AmplitudeDamping, n));
    }
}
BENCHMARK(BM_sweep)->Arg(21)->Arg(201)->Unit(benchmark::kMillisecond);

static void BM_threshold(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold(GateName::CZ, NoiseKind::Dephasing, ThresholdMode::Equal));
    }
}
BENCHMARK(BM_threshold)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
