// Copyright 2026 The ctd Authors
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

#include <cmath>

#include "ctd/asymptotics.h"
#include "ctd/distill.h"
#include "ctd/fock.h"
#include "ctd/gaussian.h"
#include "ctd/metrics.h"
#include "ctd/mp.h"

namespace {

using namespace ctd;

FockBand band_for(double n, double a, double eps) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

// Off-diagonal element two sigma away from the peak; range(0) is alpha.
void BM_MatrixElement(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0));
    const auto s = make_state(1.0, a);
    const auto l = static_cast<std::int64_t>(a * a);
    const auto m = l + static_cast<std::int64_t>(2 * std::sqrt(3.0) * a) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(matrix_element(m, l, s));
}
BENCHMARK(BM_MatrixElement)->RangeMultiplier(4)->Range(1, 256);

void BM_DiagonalElement(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0));
    const auto s = make_state(1.0, a);
    const auto l = static_cast<std::int64_t>(a * a);
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_element(l, s));
}
BENCHMARK(BM_DiagonalElement)->RangeMultiplier(4)->Range(1, 256);

void BM_TypicalWindow(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(band_for(1.0, a, 1e-16));
}
BENCHMARK(BM_TypicalWindow)->RangeMultiplier(4)->Range(1, 256)->Unit(benchmark::kMicrosecond);

void BM_OptimalDistiller(benchmark::State& state) {
    const double g = static_cast<double>(state.range(0));
    const FockBand band = band_for(1.0, g, 1e-20);
    for (auto _ : state) {
        const KrausDistiller d = make_optimal_distiller(band, 1e-4, 400);
        benchmark::DoNotOptimize(output_infidelity(d, band, true));
    }
}
BENCHMARK(BM_OptimalDistiller)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_DivideAndDistill(benchmark::State& state) {
    const long long n = state.range(0);
    const auto s = make_state(1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(divide_and_distill_bound(n, s, batch_count(n)));
}
BENCHMARK(BM_DivideAndDistill)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_CanonicalF1(benchmark::State& state) {
    const FockBand band = band_for(0.5, static_cast<double>(state.range(0)), 1e-16);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_f1(band));
}
BENCHMARK(BM_CanonicalF1)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMicrosecond);

void BM_CanonicalFidelityExact(benchmark::State& state) {
    const FockBand band = band_for(0.5, static_cast<double>(state.range(0)), 1e-16);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_fidelity_exact(band, 1.0));
}
BENCHMARK(BM_CanonicalFidelityExact)->Arg(5)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_DenseMetrics(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto s = make_state(0.5, 2.0);
    Eigen::MatrixXcd rho(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) rho(i, j) = matrix_element(i, j, s);
    for (auto _ : state) {
        const auto spec = SpectralDecomposition::from_density(rho);
        benchmark::DoNotOptimize(general_F_H(spec) + general_P_H(spec));
    }
}
BENCHMARK(BM_DenseMetrics)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ExpansionVsExact(benchmark::State& state) {
    const auto s = make_state(1.0, 10.0);
    std::int64_t l = 80;
    for (auto _ : state) {
        benchmark::DoNotOptimize(state.range(0) ? rho_ll_approx({l, s}) : diagonal_element(l, s));
        l = l == 120 ? 80 : l + 1;
    }
    state.SetLabel(state.range(0) ? "expansion" : "exact");
}
BENCHMARK(BM_ExpansionVsExact)->Arg(0)->Arg(1);

void BM_GaussSecond(benchmark::State& state) {
    const auto s = make_state(1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(gauss_protocol_second(s, state.range(0)));
}
BENCHMARK(BM_GaussSecond)->RangeMultiplier(10)->Range(10, 100000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
