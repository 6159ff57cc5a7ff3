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

#include "ctd/gaussian.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ctd;

TEST(Fidelity, Examples) {
    const cplx a(0.7, -0.2);
    EXPECT_NEAR(ct_fidelity(make_state(1, a), a), 0.5, 1e-15);
    EXPECT_NEAR(ct_infidelity(make_state(1, a), a), 0.5, 1e-15);
    EXPECT_EQ(ct_fidelity(make_state(0, a), a), 1.0);
    EXPECT_NEAR(ct_fidelity(make_state(0, 0.0), 1.0), std::exp(-1.0), 1e-15);
    // tiny infidelities keep relative precision
    EXPECT_NEAR(ct_infidelity(make_state(1e-12, a), a) / 1e-12, 1.0, 1e-9);
    EXPECT_NEAR(ct_infidelity(make_state(0, 1.0), 1.0 + 1e-9) / 1e-18, 1.0, 1e-6);
}

TEST(Energy, Examples) {
    EXPECT_EQ(mean_energy(make_state(0, 0.0)), 0.0);
    EXPECT_EQ(mean_energy(make_state(1, 2.0)), 5.0);
    EXPECT_EQ(mean_energy(make_state(1, 2.0, 2.0)), 10.0);
}

TEST(Channel, FeasibleNoise) {
    EXPECT_EQ(feasible_noise(1.0), 0.0);
    EXPECT_NEAR(feasible_noise(std::sqrt(2.0)), 1.0, 1e-15);
    EXPECT_EQ(feasible_noise(0.0), 1.0);
    EXPECT_THROW(feasible_noise(-1.0), DomainError);
}

TEST(Channel, Examples) {
    const auto s = make_state(0.4, cplx(1.0, 2.0));
    const auto id = apply_gaussian_pi({1.0, 0.0}, s);
    EXPECT_EQ(id.n_th, s.n_th);
    EXPECT_EQ(id.alpha, s.alpha);

    const double n = 7;
    const auto att = apply_gaussian_pi({1 / std::sqrt(n), 1 - 1 / n}, make_state(0.4, std::sqrt(n) * 1.5));
    EXPECT_NEAR(att.n_th, 0.4 / n, 1e-15);
    EXPECT_NEAR(att.alpha.real(), 1.5, 1e-15);

    const auto amp = apply_gaussian_pi({std::sqrt(2.0), 1.0}, make_state(0, 1.0));
    EXPECT_NEAR(amp.n_th, 1.0, 1e-15);
    EXPECT_NEAR(amp.alpha.real(), std::sqrt(2.0), 1e-15);

    EXPECT_THROW(apply_gaussian_pi({std::sqrt(2.0), 0.5}, s), ConstraintError);
    EXPECT_THROW(apply_gaussian_pi({0.5, 0.1}, s), ConstraintError);
}

TEST(Channel, NoiseFloor) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 3);
    for (int i = 0; i < 200; ++i) {
        const double g = u(rng);
        const double y = feasible_noise(g) + u(rng);
        const auto s = make_state(u(rng), u(rng));
        const auto out = apply_gaussian_pi({g, y}, s);
        EXPECT_GE(out.n_th, g * g * s.n_th + std::max(0.0, g * g - 1) - 1e-12);
    }
}

TEST(Channel, Composition) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 2);
    for (int i = 0; i < 500; ++i) {
        GaussianPIChannel c1{std::polar(u(rng), 3 * u(rng)), 0};
        c1.added_noise = feasible_noise(std::abs(c1.gain)) + u(rng);
        GaussianPIChannel c2{std::polar(u(rng), 3 * u(rng)), 0};
        c2.added_noise = feasible_noise(std::abs(c2.gain)) + u(rng);
        const auto s = make_state(u(rng), cplx(u(rng), u(rng)));
        const auto two = apply_gaussian_pi(c2, apply_gaussian_pi(c1, s));
        const GaussianPIChannel c = compose(c2, c1);
        EXPECT_TRUE(c.feasible());
        const auto one = apply_gaussian_pi(c, s);
        EXPECT_NEAR(two.n_th, one.n_th, 1e-12);
        EXPECT_NEAR(std::abs(two.alpha - one.alpha), 0.0, 1e-12);
    }
}

TEST(BeamSplitter, Examples) {
    const cplx a(1.2, 0.3);
    const auto s = make_state(0.6, a);
    const auto id = beam_split(s, make_state(2, 5.0), {1.0, 0.0});
    EXPECT_EQ(id.n_th, s.n_th);
    EXPECT_EQ(id.alpha, s.alpha);
    const double h = 1 / std::sqrt(2.0);
    auto out = beam_split(make_state(1, a), make_state(0, 0.0), {h, h});
    EXPECT_NEAR(out.n_th, 0.5, 1e-15);
    EXPECT_NEAR(std::abs(out.alpha - a * h), 0.0, 1e-15);
    out = beam_split(s, s, {h, h});
    EXPECT_NEAR(out.n_th, 0.6, 1e-15);
    EXPECT_NEAR(std::abs(out.alpha - a * std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_THROW(beam_split(s, make_state(0, 0.0, 2.0), {h, h}), DomainError);
    EXPECT_THROW(beam_split(s, s, {h, 0.5}), ConstraintError);
}

TEST(PassiveMix, Examples) {
    const cplx a(0.8, -0.5);
    const auto s = make_state(0.3, a);
    auto out = passive_mix({s}, {{1.0}});
    EXPECT_EQ(out.n_th, s.n_th);
    EXPECT_EQ(out.alpha, s.alpha);
    const int n = 9;
    out = passive_mix(std::vector<CoherentThermalParams>(n, s),
                      {std::vector<cplx>(n, 1 / std::sqrt(static_cast<double>(n)))});
    EXPECT_NEAR(out.n_th, 0.3, 1e-15);
    EXPECT_NEAR(std::abs(out.alpha - 3.0 * a), 0.0, 1e-14);
    const double h = 1 / std::sqrt(2.0);
    const auto p = passive_mix({make_state(1, a), make_state(0, 0.0)}, {{h, h}});
    const auto b = beam_split(make_state(1, a), make_state(0, 0.0), {h, h});
    EXPECT_EQ(p.n_th, b.n_th);
    EXPECT_EQ(p.alpha, b.alpha);
    EXPECT_THROW(passive_mix({s, s}, {{0.5, 0.5}}), ConstraintError);
}

TEST(PassiveMix, EnergyAndCauchySchwarz) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 5;
        std::vector<cplx> c(m);
        double norm = 0;
        for (auto& x : c) {
            x = {g(rng), g(rng)};
            norm += std::norm(x);
        }
        for (auto& x : c) x /= std::sqrt(norm);
        std::vector<CoherentThermalParams> st;
        double thermal = 0, coh = 0;
        for (int j = 0; j < m; ++j) {
            st.push_back(make_state(u(rng), cplx(g(rng), g(rng))));
            thermal += std::norm(c[j]) * st.back().n_th;
            coh += std::norm(st.back().alpha);
        }
        const auto out = passive_mix(st, {c});
        EXPECT_NEAR(out.n_th, thermal, 1e-12);
        EXPECT_LE(std::norm(out.alpha), coh * (1 + 1e-12));
    }
}

TEST(CopyMaps, ConcentrateDilute) {
    const auto s = make_state(0.5, 1.0);
    EXPECT_EQ(concentrate(s, 1).alpha, s.alpha);
    EXPECT_EQ(concentrate(s, 4).alpha, cplx(2.0));
    const auto d = dilute(make_state(1, 2.0), 4);
    EXPECT_EQ(d.n_th, 1.0);
    EXPECT_EQ(d.alpha, cplx(1.0));
    for (long long r : {1LL, 3LL, 17LL}) {
        const auto back = concentrate(dilute(make_state(0.2, cplx(1.1, 0.4)), r), r);
        EXPECT_NEAR(std::abs(back.alpha - cplx(1.1, 0.4)), 0.0, 1e-15);
        EXPECT_EQ(back.n_th, 0.2);
    }
    EXPECT_THROW(concentrate(s, 0), DomainError);
    EXPECT_THROW(dilute(s, 0), DomainError);
}

TEST(Protocol, FirstRealization) {
    const cplx a(0.9, 0.4);
    for (double nth : {0.1, 1.0, 2.0}) {
        for (long long n : {1LL, 2LL, 10LL, 1000LL}) {
            const auto r = gauss_protocol_first(make_state(nth, a), n, 0.0);
            EXPECT_NEAR(r.output.n_th, nth / static_cast<double>(n), 1e-15);
            EXPECT_EQ(r.output.alpha, a);
            EXPECT_NEAR(r.fidelity, 1 / (1 + nth / static_cast<double>(n)), 1e-15);
        }
    }
    const auto r = gauss_protocol_first(make_state(1, a), 10, 0.0);
    EXPECT_NEAR(10 * r.infidelity, 1 / 1.1, 1e-14);
    const auto warm = gauss_protocol_first(make_state(1, a), 4, 0.5);
    EXPECT_NEAR(warm.output.n_th, (1 + 3 * 0.5) / 4, 1e-15);
}

TEST(Protocol, SecondRealization) {
    const auto s = make_state(1.0, 2.0);
    const long long n = 50;
    const auto r = gauss_protocol_second(s, n);
    ASSERT_EQ(r.steps.size(), static_cast<std::size_t>(n + 1));
    const double w = 1.0 / (n * n);
    for (const auto& st : r.steps) {
        EXPECT_NEAR(st.n_th, -std::expm1(st.j * std::log1p(-w)), 1e-14);
        EXPECT_NEAR(st.alpha.real(), std::sqrt(static_cast<double>(st.j) / n) * 2.0, 1e-14);
    }
    EXPECT_GT(r.steps[1].n_th, 0.0);
    EXPECT_LT(r.steps[1].n_th, 1e-3);
    EXPECT_NEAR(r.steps.back().alpha.real(), 2.0, 1e-14);
    const auto big = gauss_protocol_second(make_state(1.0, 1.0), 2000);
    EXPECT_NEAR(2000 * big.infidelity, 1.0, 2e-3);
    const auto cold = gauss_protocol_second(make_state(0.0, 1.0), 20);
    for (const auto& st : cold.steps) EXPECT_EQ(st.n_th, 0.0);
    EXPECT_EQ(cold.fidelity, 1.0);
}

TEST(Protocol, GaussianOutputFidelity) {
    const auto s = make_state(0.8, 1.3);
    const long long n = 16;
    const double x = 0.25;
    const double ymin = feasible_noise(x);
    EXPECT_NEAR(gaussian_output_fidelity(x, ymin, n, s), 1 / (1 + 0.8 / 16), 1e-15);
    EXPECT_LT(gaussian_output_fidelity(x, ymin + 0.1, n, s), gaussian_output_fidelity(x, ymin, n, s));
    EXPECT_LT(gaussian_output_fidelity(0.26, 0.95, n, s), gaussian_output_fidelity(x, 0.95, n, s));
    EXPECT_THROW(gaussian_output_fidelity(x, 0.5, n, s), ConstraintError);
}

TEST(Protocol, GaussianOptimalityGrid) {
    // The protocol must work for unknown amplitude, so each channel is scored
    // by its worst case over a set of amplitudes.
    for (double nth : {0.25, 1.0, 2.0}) {
        for (long long n : {4LL, 100LL}) {
            const double dn = static_cast<double>(n);
            const double best = nth / (1 + nth / dn);
            double grid_min = 1e300;
            for (int i = 0; i <= 400; ++i) {
                const double x = 2.0 * i / 400 / std::sqrt(dn);
                for (int j = 0; j <= 20; ++j) {
                    const double y = feasible_noise(x) + 0.05 * j;
                    double worst = 0;
                    for (double a : {0.5, 1.0, 3.0, 10.0, 30.0}) {
                        worst = std::max(worst, dn * (1 - gaussian_output_fidelity(x, y, n, make_state(nth, a))));
                    }
                    grid_min = std::min(grid_min, worst);
                }
            }
            EXPECT_GE(grid_min, best * (1 - 1e-12));
            EXPECT_NEAR(grid_min, best, 1e-12);
        }
    }
}

TEST(Protocol, KnownAmplitudeCanBeatUniformLaw) {
    // Shrinking the gain trades bias for noise when alpha is known.
    const auto s = make_state(1.0, 1.0);
    const double f = gaussian_output_fidelity(0.4, feasible_noise(0.4), 4, s);
    EXPECT_LT(4 * (1 - f), 0.8);
}
