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

#ifndef CTD_MP_H_
#define CTD_MP_H_

#include <vector>

#include "ctd/fock.h"

namespace ctd {

struct PhaseQuadrature {
    int points = 0;
    int max_offdiag = 0;

    // k_max = max(8, 6 ceil(sigma), 18 A/sqrt(2n + 1)) capped by the window width,
    // points = 4 k_max.
    static PhaseQuadrature defaults(const FockBand& band);
    void validate() const;
};

struct F1Result {
    double value = 0;  // window sum of |rho_{m,m+1}|
    double lo = 0, hi = 0;
};
F1Result canonical_f1(const FockBand& band);

// 2 alpha^2 (1 - F1).
double canonical_infidelity_bound(const FockBand& band, double target_alpha);

struct PhaseFidelity {
    double fidelity = 0;
    double infidelity = 0;
    // Bound on what the Fourier cutoff and the window drop.
    double truncation = 0;
    // Quadrature mean of p(phi|0) and its smallest sample.
    double normalization = 0;
    double min_density = 0;
};

// Fourier coefficients F_k = sum_m |rho_{m,m+k}|, k = 0..k_max (canonical frame).
std::vector<double> phase_fourier(const FockBand& band, int k_max, double* dropped = nullptr);
// p(phi_j|0) at phi_j = 2 pi j / points.
std::vector<double> phase_density(const FockBand& band, const PhaseQuadrature& quad);

// Canonical phase measurement then preparation of |target e^{i phi}>.
PhaseFidelity canonical_fidelity_exact(const FockBand& band, double target_alpha,
                                       const PhaseQuadrature& quad);
inline PhaseFidelity canonical_fidelity_exact(const FockBand& band, double target_alpha) {
    return canonical_fidelity_exact(band, target_alpha, PhaseQuadrature::defaults(band));
}

// 1 / (1 + (n_th + 1)/n).
double heterodyne_fidelity(long long n, double n_th);
double heterodyne_infidelity(long long n, double n_th);

}  // namespace ctd

#endif  // CTD_MP_H_
