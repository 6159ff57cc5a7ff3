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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ctd/numeric.h"

namespace ctd {

PhaseQuadrature PhaseQuadrature::defaults(const FockBand& band) {
    PhaseQuadrature q;
    // Phase spread is sqrt(2n + 1)/(2A), so F_k ~ exp(-k^2 (2n + 1)/(8 A^2)); 18 A/sqrt(2n + 1)
    // puts the cutoff term below e^-40. F_k vanishes beyond the window width.
    const double a = band.state.amplitude(), n = band.state.n_th;
    const int by_sigma = 6 * static_cast<int>(std::ceil(window_sigma(band.state)));
    const int by_phase = static_cast<int>(std::ceil(18.0 * a / std::sqrt(2.0 * n + 1.0)));
    const int width = static_cast<int>(std::max<std::int64_t>(band.dim - 1, 1));
    q.max_offdiag = std::min(std::max({8, by_sigma, by_phase}), std::max(8, width));
    q.points = 4 * q.max_offdiag;
    return q;
}

void PhaseQuadrature::validate() const {
    if (max_offdiag < 0) throw DomainError("Fourier cutoff must be nonnegative");
    if (points < 4 * max_offdiag || points < 1) {
        throw DomainError("phase quadrature needs points >= 4 k_max (have " +
                          std::to_string(points) + " points for k_max " +
                          std::to_string(max_offdiag) + ")");
    }
}

F1Result canonical_f1(const FockBand& band) {
    CompensatedSum acc;
    for (std::int64_t m = band.l_min; m <= band.l_max(); ++m) acc += band.offdiag_abs(m);
    F1Result r;
    r.value = acc.value();
    // |rho_{m,m+1}| <= (rho_mm + rho_{m+1,m+1})/2 for the rows left out
    const double edge = band.l_min > 0 ? 0.5 * band.rho(band.l_min) : 0.0;
    r.lo = r.value;
    r.hi = r.value + band.tail_bounds[0] + edge;
    return r;
}

double canonical_infidelity_bound(const FockBand& band, double target_alpha) {
    if (!(target_alpha > 0)) throw DomainError("target amplitude must be positive");
    return 2.0 * target_alpha * target_alpha * (1.0 - canonical_f1(band).value);
}

std::vector<double> phase_fourier(const FockBand& band, int k_max, double* dropped) {
    std::vector<double> F(static_cast<std::size_t>(k_max) + 1, 0.0);
    double skipped = 0.0;
    F[0] = 0.0;
    {
        CompensatedSum acc;
        for (double r : band.diag) acc += r;
        F[0] = acc.value();
    }
    for (int k = 1; k <= k_max; ++k) {
        CompensatedSum acc;
        for (std::int64_t m = band.l_min; m + k <= band.l_max(); ++m) {
            const double cs = std::sqrt(band.rho(m) * band.rho(m + k));
            if (cs < 1e-30) {
                skipped += cs;
                continue;
            }
            acc += k == 1 ? band.offdiag_abs(m)
                          : std::exp(log_matrix_element(m, m + k, band.state).log_mag);
        }
        F[k] = acc.value();
    }
    if (dropped) {
        // Rows that leave the window, by Cauchy-Schwarz against the tails.
        *dropped = skipped + std::sqrt(band.left_tail[0]) + std::sqrt(band.right_tail[0]);
    }
    return F;
}

std::vector<double> phase_density(const FockBand& band, const PhaseQuadrature& quad) {
    quad.validate();
    const std::vector<double> F = phase_fourier(band, quad.max_offdiag);
    std::vector<double> p(static_cast<std::size_t>(quad.points));
    for (int j = 0; j < quad.points; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / quad.points;
        CompensatedSum acc;
        acc += F[0];
        for (int k = 1; k <= quad.max_offdiag; ++k) acc += 2.0 * F[k] * std::cos(k * phi);
        p[j] = acc.value();
    }
    return p;
}

PhaseFidelity canonical_fidelity_exact(const FockBand& band, double target_alpha,
                                       const PhaseQuadrature& quad) {
    quad.validate();
    if (!(target_alpha >= 0)) throw DomainError("target amplitude must be nonnegative");
    double dropped = 0.0;
    const std::vector<double> F = phase_fourier(band, quad.max_offdiag, &dropped);
    const double a2 = target_alpha * target_alpha;
    const int N = quad.points;
    CompensatedSum loss, norm;
    double min_p = kInf;
    for (int j = 0; j < N; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / N;
        CompensatedSum acc;
        acc += F[0];
        for (int k = 1; k <= quad.max_offdiag; ++k) acc += 2.0 * F[k] * std::cos(k * phi);
        const double p = acc.value();
        min_p = std::min(min_p, p);
        norm += p;
        // 1 - |<a|a e^{i phi}>|^2 = 1 - exp(-4 a^2 sin^2(phi/2))
        const double s = std::sin(0.5 * phi);
        loss += p * -std::expm1(-4.0 * a2 * s * s);
    }
    PhaseFidelity r;
    r.normalization = norm.value() / N;
    r.min_density = min_p;
    r.infidelity = loss.value() / N + (1.0 - F[0]);
    r.fidelity = 1.0 - r.infidelity;
    // Kernel Fourier weights e^{-z} I_k(z), z = 2 a^2, beyond the cutoff.
    const double z = 2.0 * a2;
    double tail = 0.0;
    if (z == 0.0) {
        tail = 0.0;
    } else if (z < 600.0) {
        CompensatedSum in;
        in += std::exp(-z) * std::cyl_bessel_i(0.0, z);
        for (int k = 1; k <= quad.max_offdiag; ++k) in += 2.0 * std::exp(-z) * std::cyl_bessel_i(k, z);
        tail = std::max(0.0, 1.0 - in.value());
    } else {
        tail = std::numeric_limits<double>::quiet_NaN();
    }
    r.truncation = tail + 2.0 * dropped + (1.0 - F[0] >= 0 ? 0.0 : F[0] - 1.0);
    return r;
}

double heterodyne_fidelity(long long n, double n_th) {
    if (n < 1) throw DomainError("copy count must be >= 1");
    if (!(n_th >= 0)) throw DomainError("n_th must be nonnegative");
    return 1.0 / (1.0 + (n_th + 1.0) / static_cast<double>(n));
}

double heterodyne_infidelity(long long n, double n_th) {
    const double q = (n_th + 1.0) / static_cast<double>(n);
    heterodyne_fidelity(n, n_th);
    return q / (1.0 + q);
}

}  // namespace ctd
