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


#include "verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "config.h"
#include "ctd/asymptotics.h"
#include "ctd/distill.h"
#include "ctd/fock.h"
#include "ctd/metrics.h"
#include "ctd/numeric.h"
#include "oracle.h"
#include "pool.h"

namespace ctd::tools {

namespace {

constexpr double kTwoPi = 6.283185307179586;

using Entries = std::vector<VerifyEntry>;

void add(Entries& out, const char* suite, const std::string& name, double residual, double tol) {
    out.push_back({suite, name, residual <= tol, residual, tol});
}

FockBand band_for(double n, double a, double eps) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

Entries fock_suite(std::uint64_t, int jobs) {
    Entries out;
    constexpr int dim = 32;
    const double as[] = {0.5, 1.0, 2.0, 4.0}, ns[] = {0.0, 0.5, 1.0, 2.0};
    std::vector<double> dev(16), herm(16);
    parallel_for(16, jobs, [&](std::size_t i) {
        const double a = as[i / 4], n = ns[i % 4];
        const auto ref = oracle::displaced_thermal(a, n, dim);
        const auto s = make_state(n, a);
        for (int m = 0; m < dim; ++m) {
            for (int l = 0; l < dim; ++l) {
                const double r = static_cast<double>(ref[m][l]);
                const cplx v = matrix_element(m, l, s);
                dev[i] = std::max(dev[i], std::abs(v.real() - r) / std::abs(r));
                herm[i] = std::max(herm[i], std::abs(v - std::conj(matrix_element(l, m, s))) / std::abs(v));
            }
        }
    });
    add(out, "fock", "oracle_equivalence_32_levels", *std::max_element(dev.begin(), dev.end()), 1e-10);
    add(out, "fock", "hermiticity", *std::max_element(herm.begin(), herm.end()), 1e-14);

    double mom = 0, norm = 0;
    for (double n : {0.0, 0.5, 1.0, 2.0}) {
        for (double a : {0.5, 5.0, 20.0}) {
            const FockBand band = band_for(n, a, 1e-10);
            CompensatedSum o0, o1, o2, o3;
            for (std::int64_t l = band.l_min; l <= band.l_max(); ++l) {
                const double dl = static_cast<double>(l), r = band.offdiag(l).real();
                o0 += band.rho(l);
                o1 += std::sqrt(dl + 1) * r;
                o2 += dl * band.rho(l);
                o3 += dl * std::sqrt(dl + 1) * r;
            }
            mom = std::max({mom, std::abs(o1.value() / a - 1), std::abs(o2.value() / (a * a + n) - 1),
                            std::abs(o3.value() / (2 * a * n + a * a * a) - 1)});
            // window mass plus the certified tail must cover 1, up to rounding
            norm = std::max({norm, o0.value() - 1, 1 - o0.value() - band.tail_bounds[0], 0.0});
        }
    }
    add(out, "fock", "moment_identities", mom, 1e-8);
    add(out, "fock", "window_tail_certificate", norm, 1e-12);

    double mgf_err = 0;
    for (double n : {0.0, 1.0}) {
        for (double a : {1.0, 3.0}) {
            const Moments m = mgf_moments(make_state(n, a));
            mgf_err = std::max({mgf_err, std::abs(m.mean / (a * a + n) - 1),
                                std::abs(m.variance / (n * (n + 1) + a * a * (2 * n + 1)) - 1)});
        }
    }
    add(out, "fock", "mgf_moments", mgf_err, 1e-10);
    return out;
}

Entries channel_suite(std::uint64_t seed, int) {
    Entries out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    double comp = 0, cov = 0;
    for (int t = 0; t < 100; ++t) {
        const int dim = 4 + t % 40;
        KrausDistiller d;
        d.gamma_out = 2 * u(rng);
        d.c.assign(dim, 0.0);
        for (int l = 1; l < dim; ++l) d.c[l] = std::polar(10 * std::sqrt(u(rng)), kTwoPi * u(rng));
        const Eigen::MatrixXcd rho = oracle::random_density(dim, rng);
        comp = std::max(comp, completeness_residual(d, dim));
        cov = std::max(cov, covariance_residual(d, rho, kTwoPi * u(rng)));
    }
    add(out, "channel", "kraus_completeness", comp, 1e-12);
    add(out, "channel", "phase_covariance", cov, 1e-12);

    double e0 = 0, c0 = 0;
    for (double g : {1.0, 3.0, 10.0}) {
        const FockBand band = band_for(0.0, g, 1e-20);
        e0 = std::max(e0, std::abs(big_e(band).value));
        const KrausDistiller d = make_optimal_distiller(band, 0.1);
        for (std::int64_t l = 1; l <= d.L(); ++l) c0 = std::max(c0, std::abs(std::norm(d.c[l]) - l / (g * g)));
    }
    add(out, "channel", "zero_temperature_E", e0, 1e-12);
    add(out, "channel", "zero_temperature_coefficients", c0, 1e-12);

    double dense = 0;
    for (double n : {0.5, 1.0}) {
        const FockBand band = band_for(n, 2.0, 1e-20);
        const KrausDistiller d = make_optimal_distiller(band, 0.05);
        const int dim = static_cast<int>(band.l_max()) + 1;
        Eigen::MatrixXcd rho(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) rho(i, j) = matrix_element(i, j, band.state);
        const Eigen::Matrix2cd q = apply_dense(d, rho);
        const QubitOutput s = apply_distiller(d, band);
        dense = std::max({dense, std::abs(q(1, 1).real() - s.p1), std::abs(q(0, 1).real() - s.coh),
                          std::abs(q.trace().real() - 1)});
    }
    add(out, "channel", "sparse_vs_dense_kraus", dense, 1e-10);
    return out;
}

Entries metrics_suite(std::uint64_t seed, int) {
    Entries out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    const MonotoneFunction fs[] = {MonotoneFunction::sld(), wigner_yanase(), kubo_mori(), geometric_mean(),
                                   MonotoneFunction::rld()};
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> p(2 + t % 20);
        double sum = 0;
        for (auto& x : p) sum += (x = u(rng) + 1e-3);
        for (auto& x : p) x /= sum;
        const cplx a(3 * u(rng), u(rng));
        double prev = 0;
        for (const auto& f : fs) {
            const double v = metric_displaced_incoherent(f, p, a);
            worst = std::max(worst, (prev - v) / std::max(v, 1e-300));
            prev = v;
        }
    }
    add(out, "metrics", "sld_custom_rld_ordering", worst, 1e-12);

    double dev = 0;
    for (double n : {0.1, 1.0}) {
        for (double a : {0.5, 2.0}) {
            const auto s = make_state(n, a);
            const int dim = std::max<int>(64, static_cast<int>(band_for(n, a, 1e-15).l_max()) + 1);
            Eigen::MatrixXcd rho(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) rho(i, j) = matrix_element(i, j, s);
            const auto spec = SpectralDecomposition::from_density(rho);
            dev = std::max({dev, std::abs(general_F_H(spec) / qfi_sld(s) - 1),
                            std::abs(general_P_H(spec) / purity_of_coherence(s) - 1)});
        }
    }
    add(out, "metrics", "dense_closed_form_agreement", dev, 1e-6);

    double gap = 0;
    std::uniform_real_distribution<double> occ(0, 5);
    for (int t = 0; t < 1000; ++t) {
        const double a = occ(rng), b = a + 0.01 + occ(rng);
        const double g = concentration_metric_gap(MonotoneFunction::sld(), {a, b});
        if (!(g > 0)) gap = std::max(gap, 1.0);
        gap = std::max(gap, std::abs(concentration_metric_gap(MonotoneFunction::sld(), {a, a})));
    }
    add(out, "metrics", "concentration_gap_sign", gap, 0);
    return out;
}

Entries asymptotics_suite(std::uint64_t seed, int) {
    Entries out;
    double worst_ratio = 0;
    for (double n : {0.5, 1.0}) {
        const double a = 10, sig = std::sqrt(1 + 2 * n) * a;
        const auto s = make_state(n, a);
        double e1 = 0, e2 = 0;
        for (std::int64_t l = 0; l < 400; ++l) {
            if (std::abs((l - a * a) / sig) > 3) continue;
            const double ex = diagonal_element(l, s);
            e1 += std::abs(rho_ll_approx({l, s}) / ex - 1);
            e2 += std::abs(edgeworth_approx(l, s) / ex - 1);
        }
        worst_ratio = std::max(worst_ratio, e1 / e2);
    }
    // expansion error over Edgeworth error; must stay below 1
    add(out, "asymptotics", "expansion_vs_edgeworth_ratio", worst_ratio, 1.0 - 1e-12);

    double C = 0;
    for (double n : {0.5, 1.0, 2.0}) {
        const double a = 10, sig = std::sqrt(1 + 2 * n) * a;
        const auto s = make_state(n, a);
        const auto l0 = static_cast<std::int64_t>(a * a);
        const double cm = optimal_coefficient_sq(l0 - 1, s), c0 = optimal_coefficient_sq(l0, s),
                     cp = optimal_coefficient_sq(l0 + 1, s);
        const ACoefficients A = a_coefficients(n);
        const double scale = std::pow(1 + 2 * n, 3) / sig;
        C = std::max({C, std::abs((c0 - 1) * sig * sig - A.a0) / scale,
                      std::abs((cp - cm) / 2 * sig * sig - A.a1) / scale,
                      std::abs(-(cp - 2 * c0 + cm) / 2 * std::pow(sig, 4) - A.a2) / scale});
    }
    add(out, "asymptotics", "a_coefficient_order_constant", C, 1.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    double drop = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<double> p(3 + t % 60);
        double sum = 0;
        for (auto& x : p) sum += (x = u(rng) * u(rng));
        for (auto& x : p) x /= sum;
        double prev = -1;
        for (std::size_t M = 0; M <= p.size(); ++M) {
            const double v = distribution_variance(variance_truncate(p, M));
            drop = std::max(drop, prev - v);
            prev = v;
        }
    }
    add(out, "asymptotics", "variance_truncate_monotone", drop, 1e-12);

    double order = 0;
    for (int i = 0; i <= 300; ++i) {
        const double n = 0.01 * i;
        order = std::max({order, delta_factor(DeltaKind::kOpt, n) - delta_factor(DeltaKind::kMp, n),
                          delta_factor(DeltaKind::kOpt, n) - delta_factor(DeltaKind::kGauss, n),
                          delta_factor(DeltaKind::kMp, n) - delta_factor(DeltaKind::kHeterodyne, n)});
    }
    add(out, "asymptotics", "delta_ordering", order, 0);
    return out;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s = {"fock", "channel", "metrics", "asymptotics"};
    return s;
}

std::vector<VerifyEntry> run_verify(const std::string& suite, std::uint64_t seed, int jobs) {
    const auto& all = verify_suites();
    if (suite != "all" && std::find(all.begin(), all.end(), suite) == all.end()) {
        throw ConfigError("unknown suite '" + suite + "' (all | fock | channel | metrics | asymptotics)");
    }
    Entries out;
    auto run = [&](const std::string& name, Entries (*fn)(std::uint64_t, int)) {
        if (suite != "all" && suite != name) return;
        try {
            const Entries e = fn(seed, jobs);
            out.insert(out.end(), e.begin(), e.end());
        } catch (const std::exception& e) {
            out.push_back({name, std::string("exception: ") + e.what(), false, NAN, 0});
        }
    };
    run("fock", fock_suite);
    run("channel", channel_suite);
    run("metrics", metrics_suite);
    run("asymptotics", asymptotics_suite);
    return out;
}

void print_report(std::ostream& os, const std::vector<VerifyEntry>& entries) {
    int failed = 0;
    for (const auto& e : entries) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %s.%s residual=%.3e tolerance=%.1e\n", e.pass ? "PASS" : "FAIL",
                      e.suite.c_str(), e.name.c_str(), e.residual, e.tolerance);
        os << buf;
        failed += !e.pass;
    }
    os << entries.size() - failed << "/" << entries.size() << " invariants hold\n";
}

}  // namespace ctd::tools
