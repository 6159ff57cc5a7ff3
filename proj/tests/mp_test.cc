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

#include "ctd/mp.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ctd/asymptotics.h"

using namespace ctd;

namespace {

FockBand band_for(double n, double a, double eps = 1e-16) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

// Pure coherent state F1 by its Poisson-weighted series in long double.
long double pure_f1(long double a) {
    long double acc = 0;
    for (int m = 0; m < 20000; ++m) {
        const long double lt = -a * a + (2 * m + 1) * std::log(a) - 0.5L * (std::lgamma(m + 1.0L) + std::lgamma(m + 2.0L));
        acc += std::exp(lt);
    }
    return acc;
}

}  // namespace

TEST(CanonicalF1, PureState) {
    for (double a : {0.5, 1.0, 3.0}) {
        EXPECT_NEAR(canonical_f1(band_for(0, a)).value, static_cast<double>(pure_f1(a)), 1e-13) << a;
    }
    const double a = 30;
    const double f1 = canonical_f1(band_for(0, a)).value;
    EXPECT_NEAR((1 - f1) * 8 * a * a, 1.0, 1.0 / (a * a));
    EXPECT_EQ(canonical_f1(band_for(1.0, 0.0)).value, 0.0);
}

TEST(CanonicalF1, IntervalAndMonotone) {
    for (double n : {0.0, 0.5, 1.0}) {
        double prev = -1;
        for (double a = 0.25; a <= 12; a += 0.25) {
            const F1Result r = canonical_f1(band_for(n, a, 0.0));
            EXPECT_LE(r.lo, r.value);
            EXPECT_GE(r.hi, r.value);
            EXPECT_LE(r.value, 1.0);
            EXPECT_GE(r.value, prev);
            prev = r.value;
        }
    }
}

TEST(CanonicalF1, ThermalLimit) {
    for (double n : {0.0, 0.5, 1.0}) {
        for (double A : {30.0, 60.0}) {
            const double f1 = canonical_f1(band_for(n, A)).value;
            EXPECT_NEAR(8 * A * A * (1 - f1) / (2 * n + 1), 1.0, 0.02) << n << " " << A;
        }
    }
}

TEST(CanonicalBound, Limits) {
    const long long copies = 10000;
    const double a0 = 1.0;
    const double A = std::sqrt(static_cast<double>(copies)) * a0;
    EXPECT_NEAR(copies * canonical_infidelity_bound(band_for(0, A), a0), 0.25, 0.01);
    EXPECT_NEAR(copies * canonical_infidelity_bound(band_for(1, A), a0), 0.75, 0.02);
    EXPECT_NEAR(copies * canonical_infidelity_bound(band_for(0.5, A), a0), delta_factor(DeltaKind::kMp, 0.5),
                0.02);
}

TEST(CanonicalFidelity, VacuumTargetAndNormalization) {
    for (double n : {0.0, 0.3, 1.0}) {
        for (double a : {0.5, 2.0, 8.0}) {
            const FockBand band = band_for(n, a);
            const PhaseFidelity f = canonical_fidelity_exact(band, 0.0);
            EXPECT_NEAR(f.fidelity, 1.0, 1e-10);
            EXPECT_NEAR(f.normalization, 1.0, 1e-10);
            EXPECT_GE(f.min_density, -1e-12);
        }
    }
}

TEST(CanonicalFidelity, RespectsBound) {
    for (double n : {0.0, 0.5, 1.0, 2.0}) {
        for (double A : {1.0, 4.0, 20.0}) {
            const FockBand band = band_for(n, A);
            for (double t : {0.1, 0.5, 1.0}) {
                const PhaseFidelity f = canonical_fidelity_exact(band, t);
                EXPECT_LE(f.infidelity, canonical_infidelity_bound(band, t) + f.truncation + 1e-12)
                    << n << " " << A << " " << t;
            }
        }
    }
}

TEST(CanonicalFidelity, MatchesBesselSeries) {
    // int dphi/2pi p(phi) exp(-z(1 - cos phi)) = sum_k F_k e^{-z} I_|k|(z)
    for (double n : {0.0, 1.0}) {
        for (double a : {1.0, 3.0}) {
            const FockBand band = band_for(n, a);
            const PhaseQuadrature q = PhaseQuadrature::defaults(band);
            const auto F = phase_fourier(band, q.max_offdiag);
            for (double t : {0.2, 1.0, 2.0}) {
                const double z = 2 * t * t;
                double acc = F[0] * std::exp(-z) * std::cyl_bessel_i(0.0, z);
                for (std::size_t k = 1; k < F.size(); ++k) {
                    acc += 2 * F[k] * std::exp(-z) * std::cyl_bessel_i(static_cast<double>(k), z);
                }
                EXPECT_NEAR(canonical_fidelity_exact(band, t, q).fidelity, acc, 1e-12);
            }
        }
    }
}

TEST(CanonicalFidelity, ZeroTemperatureFactor) {
    double prev = kInf;
    for (long long copies : {100LL, 1000LL, 10000LL}) {
        const double A = std::sqrt(static_cast<double>(copies));
        const PhaseFidelity f = canonical_fidelity_exact(band_for(0, A), 1.0);
        const double v = copies * f.infidelity;
        EXPECT_LT(std::abs(v - 0.25), prev);
        prev = std::abs(v - 0.25);
    }
    EXPECT_LT(prev, 0.01);
}

TEST(Quadrature, Validation) {
    const FockBand band = band_for(1.0, 3.0);
    const PhaseQuadrature q = PhaseQuadrature::defaults(band);
    EXPECT_GE(q.max_offdiag, 8);
    EXPECT_GE(q.points, 4 * q.max_offdiag);
    EXPECT_NO_THROW(q.validate());
    EXPECT_THROW((PhaseQuadrature{10, 8}.validate()), DomainError);
    EXPECT_THROW(canonical_fidelity_exact(band, 1.0, PhaseQuadrature{10, 8}), DomainError);
    const auto p = phase_density(band, q);
    ASSERT_EQ(p.size(), static_cast<std::size_t>(q.points));
    double mean = 0;
    for (double v : p) mean += v;
    EXPECT_NEAR(mean / q.points, 1.0, 1e-10);
}

TEST(Heterodyne, Examples) {
    EXPECT_NEAR(heterodyne_fidelity(1, 0.0), 0.5, 1e-15);
    EXPECT_NEAR(heterodyne_fidelity(1000000000LL, 1.0), 1.0, 1e-8);
    for (double n : {0.0, 0.5, 1.0, 2.0}) {
        for (long long c : {1LL, 10LL, 1000LL}) {
            const double dc = static_cast<double>(c);
            EXPECT_NEAR(dc * heterodyne_infidelity(c, n), (n + 1) / (1 + (n + 1) / dc), 1e-12);
            EXPECT_NEAR(heterodyne_fidelity(c, n) + heterodyne_infidelity(c, n), 1.0, 1e-15);
        }
    }
    EXPECT_THROW(heterodyne_fidelity(0, 1.0), DomainError);
}

TEST(Heterodyne, WorseThanCanonical) {
    const long long copies = 10000;
    for (double n : {0.0, 0.5, 1.0}) {
        const double het = copies * heterodyne_infidelity(copies, n);
        const double can = copies * canonical_fidelity_exact(band_for(n, 100.0), 1.0).infidelity;
        EXPECT_GT(het, can) << n;
    }
}
