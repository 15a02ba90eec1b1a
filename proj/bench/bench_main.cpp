// Copyright 2026 The bgcs Authors
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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "bgcs/stats.hpp"
#include "bgcs/unity.hpp"

namespace {

void BM_gram(benchmark::State &state) {
    bgcs::FamilySpec spec;
    spec.family = bgcs::UnityFamily::n_angle;
    spec.modes = 2;
    spec.angles = {0.4, 1.3};
    spec.radial_count = 81;
    bgcs::UnityOptions opt;
    opt.n_check = 3;
    opt.parallel = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bgcs::assemble_gram(spec, bgcs::MeasureDensity::gaussian, opt));
    }
}
BENCHMARK(BM_gram)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_oracle_scan(benchmark::State &state) {
    const int points = 64;
    const bool parallel = state.range(0) != 0;
    std::vector<double> out(points);
    for (auto _ : state) {
#pragma omp parallel for if (parallel)
        for (int k = 0; k < points; ++k) {
            double psi = 2.0 * bgcs::kPi * k / points;
            bgcs::CVec a{std::polar(1.5, 0.3), std::polar(1.0, -0.2)};
            bgcs::TruncatedState s = bgcs::cat_phi_psi({a, {}, 0.7, psi}, bgcs::adaptive_space(2, 1.8));
            out[k] = bgcs::variance_XY(bgcs::moments_from_state(s, 0)).x;
        }
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_oracle_scan)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
