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

#include "ctd/distill.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ctd/asymptotics.h"
#include "ctd/gaussian.h"
#include "ctd/metrics.h"
#include "oracle.h"

using namespace ctd;

namespace {

FockBand band_for(double n, double a, double eps = 1e-20) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

Eigen::MatrixXcd dense_state(const CoherentThermalParams& s, int dim) {
    Eigen::MatrixXcd rho(dim, dim);
    for (int m = 0; m < dim; ++m)
        for (int l = 0; l < dim; ++l) rho(m, l) = matrix_element(m, l, s);
    return rho;
}

}  // namespace

TEST(Coefficients, ZeroTemperatureExact) {
    for (double g : {1.0, 3.0, 10.0}) {
        const auto s = make_state(0.0, g);
        for (long l = 1; l < 300; ++l) {
            EXPECT_NEAR(optimal_coefficient_sq(l, s), l / (g * g), 1e-12 * l / (g * g));
        }
        const FockBand band = band_for(0.0, g);
        const auto c = optimal_coefficients(s, band);
        EXPECT_EQ(c[0], cplx(0.0));
        EXPECT_NEAR(std::norm(c[5]), 5 / (g * g), 1e-12);
    }
}

TEST(Coefficients, HandValue) {
    // rho_00 = e^{-1/2}/2, rho_01 = e^{-1/2}/4 at n = 1, gamma = 1
    const auto s = make_state(1.0, 1.0);
    EXPECT_NEAR(optimal_coefficient_sq(1, s), 4.0, 1e-13);
    for (long l = 1; l < 40; ++l) {
        const double ratio = diagonal_element(l - 1, s) / matrix_element(l - 1, l, s).real();
        EXPECT_NEAR(optimal_coefficient_sq(l, s) / (ratio * ratio), 1.0, 1e-12);
    }
}

TEST(Coefficients, CentralLevelNearOne) {
    const auto s = make_state(1.0, 30.0);
    EXPECT_NEAR(optimal_coefficient_sq(900, s), 1.0, 0.01);
    EXPECT_THROW(optimal_coefficient_sq(3, make_state(1.0, 0.0)), DomainError);
    EXPECT_THROW(optimal_coefficients(make_state(1.0, 0.0), band_for(1.0, 1.0)), DomainError);
}

TEST(ApplyDistiller, ZeroGammaOut) {
    const FockBand band = band_for(0.5, 2.0);
    const KrausDistiller d = make_optimal_distiller(band, 0.0);
    const QubitOutput q = apply_distiller(d, band);
    EXPECT_EQ(q.p1, 0.0);
    EXPECT_EQ(q.coh, 0.0);
    EXPECT_EQ(output_fidelity(d, band, true), 1.0);
}

TEST(ApplyDistiller, ZeroTemperatureMoments) {
    const double g = 1e-3;
    const FockBand band = band_for(0.0, 3.0);
    const QubitOutput q = apply_distiller(make_optimal_distiller(band, g), band);
    EXPECT_LE(std::abs(q.p1 / (g * g) - 1.0), 10 * g * g);
}

TEST(ApplyDistiller, MatchesDenseKraus) {
    for (double n : {0.0, 0.4, 1.0}) {
        const auto s = make_state(n, 1.5);
        const FockBand band = band_for(n, 1.5, 1e-18);
        const KrausDistiller d = make_optimal_distiller(band, 0.3);
        const QubitOutput q = apply_distiller(d, band);
        const int dim = static_cast<int>(band.l_max()) + 1;
        const Eigen::Matrix2cd tau = apply_dense(d, dense_state(s, dim));
        EXPECT_NEAR(tau(1, 1).real(), q.p1, 1e-13);
        EXPECT_NEAR(tau(0, 1).real(), q.coh, 1e-13);
        EXPECT_NEAR(tau.trace().real(), 1.0, 1e-13);
        EXPECT_LE(q.coh * q.coh, q.p1 * (1 - q.p1));

        // generic coefficients go through the off-diagonal path
        KrausDistiller generic = d;
        generic.optimal = false;
        const QubitOutput r = apply_distiller(generic, band);
        EXPECT_NEAR(r.p1, q.p1, 1e-13);
        EXPECT_NEAR(r.coh, q.coh, 1e-13);
    }
}

TEST(Fidelity, FigureFiveBand) {
    const double g = 1e-4;
    const FockBand band = band_for(1.0, 5.0);
    const KrausDistiller d = make_optimal_distiller(band, g);
    const double v = 25 / (g * g) * output_infidelity(d, band, true).value;
    EXPECT_GT(v, 2.0 / 3);
    EXPECT_LT(v, 0.70);

    const FockBand b2 = band_for(0.25, 5.0);
    const double v2 = 25 / (g * g) * output_infidelity(make_optimal_distiller(b2, g), b2, true).value;
    EXPECT_GT(v2, delta_factor(DeltaKind::kOpt, 0.25));
    EXPECT_LT(v2, 0.215);
}

TEST(Fidelity, TargetConventionsAgree) {
    for (double g : {1e-1, 3e-2, 1e-2}) {
        const FockBand band = band_for(0.5, 4.0);
        const KrausDistiller d = make_optimal_distiller(band, g);
        const double fe = output_fidelity(d, band, true);
        const double ft = output_fidelity(d, band, false);
        EXPECT_LE(std::abs(fe - ft), 10 * std::pow(g, 4));
    }
}

TEST(Fidelity, IntervalBrackets) {
    const FockBand band = band_for(1.0, 3.0, 0.0);
    const Infidelity r = output_infidelity(make_optimal_distiller(band, 1e-2), band, true);
    EXPECT_LE(r.lo, r.value);
    EXPECT_GE(r.hi, r.value);
    const FockBand tight = band_for(1.0, 3.0, 1e-20);
    const double exact = output_infidelity(make_optimal_distiller(tight, 1e-2), tight, true).value;
    EXPECT_LE(r.lo, exact);
    EXPECT_GE(r.hi, exact);
}

TEST(BigE, ZeroTemperature) {
    for (double g : {1.0, 3.0, 10.0}) {
        EXPECT_NEAR(big_e(band_for(0.0, g)).value, 0.0, 1e-12);
    }
    EXPECT_THROW(big_e(band_for(1.0, 0.0)), DomainError);
}

TEST(BigE, LargeAmplitudeLimit) {
    for (double n : {0.5, 1.0}) {
        const double lim = n * (n + 1) / (1 + 2 * n);
        double prev = kInf;
        for (double g : {5.0, 10.0, 20.0, 40.0}) {
            const double v = g * g * big_e(band_for(n, g)).value;
            const double gap = v - lim;
            EXPECT_GT(gap, 0.0);
            EXPECT_LT(gap, prev);
            EXPECT_LT(gap, std::pow(1 + 2 * n, 1.5) / g);
            prev = gap;
        }
    }
}

TEST(Channel, Completeness) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 20; ++t) {
        KrausDistiller d;
        d.gamma_out = 0.1 + std::abs(u(rng));
        d.c.assign(50, 0.0);
        for (int l = 1; l < 50; ++l) {
            cplx z;
            do z = {u(rng), u(rng)};
            while (std::abs(z) > 1);
            d.c[l] = 10.0 * z;
        }
        EXPECT_LE(completeness_residual(d, 50), 1e-12);
        d.gamma_out = 0;
        EXPECT_EQ(completeness_residual(d, 50), 0.0);
    }
}

TEST(Channel, PhaseCovariance) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 100; ++t) {
        const int dim = 8 + t % 24;
        const Eigen::MatrixXcd rho = oracle::random_density(dim, rng);
        KrausDistiller d;
        d.gamma_out = u(rng);
        d.c.assign(dim, 0.0);
        for (int l = 1; l < dim; ++l) d.c[l] = std::polar(3 * u(rng), 6.3 * u(rng));
        const double theta = 6.3 * u(rng);
        EXPECT_LE(covariance_residual(d, rho, theta), 1e-12);
        EXPECT_EQ(covariance_residual(d, rho, 0.0), 0.0);
        Eigen::MatrixXcd diag = rho.diagonal().asDiagonal();
        EXPECT_LE(covariance_residual(d, diag, theta), 1e-15);
    }
}

TEST(MomentBound, Examples) {
    const cplx a(0.3, 0.4);
    EXPECT_NEAR(infidelity_bound_from_moments(std::norm(a), a, a), 0.0, 1e-16);
    EXPECT_NEAR(infidelity_bound_from_moments(std::norm(a) + 0.1, a, a), 0.1, 1e-15);
    EXPECT_THROW(infidelity_bound_from_moments(0.0, a, a), ConstraintError);
    // m copies with variance v and bias b concentrate to v + m b^2
    const double v = 0.02, b = 0.01, g = 0.2;
    const int m = 9;
    const double first = std::sqrt(m) * (g - b);
    EXPECT_NEAR(infidelity_bound_from_moments(v + first * first, first, std::sqrt(m) * g), v + m * b * b,
                1e-15);
    // bounds the true coherent-thermal infidelity
    const auto s = make_state(0.3, 1.0);
    EXPECT_GE(infidelity_bound_from_moments(0.3 + 1.0, 1.0, 1.2), ct_infidelity(s, 1.2));
}

TEST(DivideDistill, BatchCount) {
    EXPECT_EQ(batch_count(1000), 178);
    EXPECT_EQ(batch_count(1000, BatchRounding::kFloor), 177);
    EXPECT_EQ(batch_count(10000), 1000);
    EXPECT_EQ(batch_count(10000, BatchRounding::kFloor), 1000);
    EXPECT_EQ(batch_count(1), 1);
    EXPECT_THROW(batch_count(0), DomainError);
}

TEST(DivideDistill, ZeroTemperatureVanishes) {
    double prev = kInf;
    for (long long n : {100LL, 10000LL, 1000000LL}) {
        const auto r = divide_and_distill_bound(n, make_state(0.0, 1.0), batch_count(n));
        EXPECT_LT(r.bound, prev);
        prev = r.bound;
    }
    EXPECT_LT(prev, 1e-2);
}

TEST(DivideDistill, TheoremOneSequence) {
    double prev = kInf;
    for (long long n : {1000LL, 10000LL, 100000LL, 1000000LL}) {
        const auto r = divide_and_distill_bound(n, make_state(1.0, 1.0), batch_count(n));
        EXPECT_GT(r.bound, 2.0 / 3);
        EXPECT_LT(r.bound, prev);
        EXPECT_LE(r.lo, r.bound);
        EXPECT_GE(r.hi, r.bound);
        prev = r.bound;
    }
}

TEST(DivideDistill, NoBatching) {
    const auto r = divide_and_distill_bound(50, make_state(1.0, 2.0), 50);
    EXPECT_NEAR(r.gamma_in, 2.0, 1e-15);
    EXPECT_NEAR(r.gamma_out, 2.0 / std::sqrt(50.0), 1e-15);
    EXPECT_FALSE(r.regime_ok);
    EXPECT_FALSE(r.warnings.empty());
    const FockBand band = typical_window(make_state(1.0, 2.0));
    const QubitOutput q = apply_distiller(make_optimal_distiller(band, r.gamma_out), band);
    const double single = q.p1 - q.coh * q.coh + 50 * (r.gamma_out - q.coh) * (r.gamma_out - q.coh);
    EXPECT_NEAR(r.bound / (50 * single), 1.0, 1e-9);
    EXPECT_THROW(divide_and_distill_bound(5, make_state(1.0, 2.0), 6), DomainError);
}

TEST(MomentAsymptotics, BiasAndExcess) {
    const FockBand band = band_for(1.0, 10.0);
    const BigE e = big_e(band);
    for (double g : {1e-3, 1e-4}) {
        const QubitOutput q = apply_distiller(make_optimal_distiller(band, g), band);
        EXPECT_NEAR(q.deficit / (g * g * g), 1.0, 0.1);
        // p1/g^2 - 1 = E up to the O(g^2) second-order term and truncation
        EXPECT_NEAR(q.excess / (g * g), e.value, (e.hi - e.lo) + 20 * g * g);
    }
}

TEST(Scaling, Requirements) {
    const FockBand band = band_for(1.0, 10.0);
    const double g = 1e-3;
    const QubitOutput q = apply_distiller(make_optimal_distiller(band, g), band);
    const double var = q.excess + q.deficit * (2 * g - q.deficit);
    ScalingReport r = check_scaling_requirements(var, q.deficit, 10.0, g);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.variance_ratio, 2.0 / 3, 0.1);
    // zero channel: coherence 0, bias g
    r = check_scaling_requirements(0.0, g, 10.0, g);
    EXPECT_FALSE(r.pass);
    // identity-like moments: variance delta g^2/g_in^2, no bias
    r = check_scaling_requirements(2.0 / 3 * g * g / 100, 0.0, 10.0, g);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.variance_ratio, 2.0 / 3, 1e-12);
    EXPECT_EQ(r.bias_ratio, 0.0);
}

TEST(Forbidden, Root) {
    EXPECT_EQ(purity_forbidden_infidelity(kInf, 1.0), 0.0);
    for (double x : {1e-2, 1e-4, 1e-6}) {
        const double d = purity_forbidden_infidelity(1.0, x);
        EXPECT_NEAR(d / x, 1.0, 4 * x);
        EXPECT_NEAR(x * ((1 - d) * (1 - d) / d - 1), 1.0, 1e-9);
    }
    EXPECT_THROW(purity_forbidden_infidelity(0.0, 1.0), DomainError);
}

TEST(Forbidden, ApproachesOptimalFactor) {
    for (double n : {0.25, 1.0}) {
        const double gin = 4.0;
        const double P = purity_of_coherence(make_state(n, gin));
        const double g = 1e-5;
        const double d = purity_forbidden_infidelity(P, g * g);
        EXPECT_NEAR(gin * gin / (g * g) * d, delta_factor(DeltaKind::kOpt, n), 1e-6);
    }
}

TEST(AmplifyAttenuate, Examples) {
    EXPECT_NEAR(amplify_attenuate_factor(make_state(1.0, 1.5), 1.5), 2.0 / 3, 1e-15);
    EXPECT_NEAR(amplify_attenuate_factor(make_state(1.0, 1.5), 3.0), 8.0 / 3, 1e-14);
    EXPECT_EQ(amplify_attenuate_factor(make_state(0.0, 1.5), 7.0), 0.0);
    EXPECT_THROW(amplify_attenuate_factor(make_state(1.0, 0.0), 1.0), DomainError);
    // (1/4) F_H(|alpha'>) / P_H(rho)
    const auto s = make_state(0.7, 2.0);
    const double fh = qfi_sld(make_state(0.0, 3.0));
    EXPECT_NEAR(amplify_attenuate_factor(s, 3.0), 0.25 * fh / purity_of_coherence(s), 1e-12);
}
