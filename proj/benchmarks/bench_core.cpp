// Copyright 2026 The qbc Authors
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

#include <numbers>
#include <random>

#include "benchmark/benchmark.h"
#include "qbc/cloner.hpp"
#include "qbc/discrimination.hpp"
#include "qbc/hilbert.hpp"
#include "qbc/infochannel.hpp"
#include "qbc/optimizer.hpp"

namespace {

using namespace qbc;

hilbert::HermitianOp random_hermitian4(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<hilbert::Complex, 16> e{};
    for (int r = 0; r < 4; ++r) {
        for (int c = r; c < 4; ++c) {
            const hilbert::Complex z = r == c ? hilbert::Complex(g(rng), 0.0) : hilbert::Complex(g(rng), g(rng));
            e[static_cast<std::size_t>(4 * r + c)] = z;
            e[static_cast<std::size_t>(4 * c + r)] = std::conj(z);
        }
    }
    return hilbert::HermitianOp(4, e);
}

void BM_HermitianEig4(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto m = random_hermitian4(rng);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert::hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig4);

void BM_HelstromOnClones(benchmark::State& state) {
    const auto p = cloner::optimal_params(OverlapAngle(0.9), 0.4);
    const auto r0 = cloner::marginals(cloner::clone_state(p, 0)).traced_blank;
    const auto r1 = cloner::marginals(cloner::clone_state(p, 1)).traced_blank;
    for (auto _ : state) benchmark::DoNotOptimize(discrimination::helstrom(r0, r1));
}
BENCHMARK(BM_HelstromOnClones);

void BM_MaximizeLambda(benchmark::State& state) {
    optimizer::OptimizerConfig config;
    config.n_starts = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(optimizer::maximize_lambda(OverlapAngle(std::numbers::pi / 3), config));
}
BENCHMARK(BM_MaximizeLambda)->Arg(1)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RatesFromJoint(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(info::rates_from_joint(info::cascade_joint(0.1, 0.25)));
}
BENCHMARK(BM_RatesFromJoint);

void BM_RateClosedForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(info::rate_region_closed_form(0.25, 0.1));
}
BENCHMARK(BM_RateClosedForm);

}  // namespace

BENCHMARK_MAIN();
