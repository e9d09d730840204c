// Copyright 2026 floqudit Contributors
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

#include <random>

#include "floqudit/floqudit.hpp"

using namespace floqudit;

namespace {

void bm_measure_random(benchmark::State &state) {
    uint32_t d = 3;
    size_t n = (size_t)state.range(0);
    std::mt19937_64 rng(5);
    std::vector<PauliOperator> pool;
    for (size_t k = 0; k < 64; k++) {
        std::vector<uint16_t> xs(n, 0);
        std::vector<uint16_t> zs(n, 0);
        for (size_t j = 0; j < 4; j++) {
            size_t q = (size_t)(rng() % n);
            xs[q] = (uint16_t)uniform_residue(rng, d);
            zs[q] = (uint16_t)uniform_residue(rng, d);
        }
        pool.emplace_back(d, 0, std::move(xs), std::move(zs));
    }
    for (auto _ : state) {
        GeneratorSet s(d, n);
        for (const PauliOperator &p : pool) {
            measure_in_place(s, p, SampledOutcomes{&rng});
        }
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t)pool.size());
}
BENCHMARK(bm_measure_random)->Arg(16)->Arg(96)->Arg(384);

void bm_run_schedule(benchmark::State &state) {
    ColoredLattice lat = build_torus_honeycomb((size_t)state.range(0), (size_t)state.range(1));
    CheckAssignment checks = circle_square_checks(lat, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_schedule(lat, checks, 12));
    }
}
BENCHMARK(bm_run_schedule)->Args({3, 3})->Args({6, 8})->Unit(benchmark::kMillisecond);

void bm_canonical_form(benchmark::State &state) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    IsgTrace trace = run_schedule(lat, circle_square_checks(lat, 3), 8);
    const GeneratorSet &isg = trace.at(7).isg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(isg));
    }
}
BENCHMARK(bm_canonical_form)->Unit(benchmark::kMicrosecond);

void bm_syndrome_pipeline(benchmark::State &state) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    CheckAssignment checks = circle_square_checks(lat, 3);
    NoiseModel model{3, 0.01};
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_syndrome(lat, checks, 15, model, seed++));
    }
}
BENCHMARK(bm_syndrome_pipeline)->Unit(benchmark::kMillisecond);

void bm_distance_upper_bound(benchmark::State &state) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    CheckAssignment checks = circle_square_checks(lat, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_upper_bound(lat, checks, 6));
    }
}
BENCHMARK(bm_distance_upper_bound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
