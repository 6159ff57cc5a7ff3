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

#ifndef CTD_ASYMPTOTICS_H_
#define CTD_ASYMPTOTICS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctd/types.h"

namespace ctd {

enum class DeltaKind { kOpt, kGauss, kMp, kHeterodyne };

// Infidelity factor lim n(1 - F) of each protocol family.
double delta_factor(DeltaKind kind, double n_th);
DeltaKind parse_delta_kind(const std::string& name);

struct ExpansionPoint {
    std::int64_t l = 0;
    CoherentThermalParams state{};

    double sigma() const;
    double r() const;
    double s() const;
};

// Expansion polynomials for the diagonal (f) and first off-diagonal (g).
double poly_f1(double n, double r);
double poly_f2(double n, double r);
double poly_g1(double n, double r);
double poly_g2(double n, double r);

struct ACoefficients {
    double a0, a1, a2;
};
ACoefficients a_coefficients(double n_th);

// Gaussian times 1 + a1/alpha + a2/alpha^2 in s = (l - alpha^2)/alpha.
double poisson_expansion(std::int64_t l, double alpha);
double rho_ll_approx(const ExpansionPoint& pt);
double rho_offdiag_approx(const ExpansionPoint& pt);
double c_l_sq_approx(const ExpansionPoint& pt);

struct Cumulants {
    double k3, k4;
};
Cumulants cumulants(const CoherentThermalParams& s);
double edgeworth_approx(std::int64_t l, const CoherentThermalParams& s);

// n(n+1)/((1+2n) gamma^2).
double e_leading(const CoherentThermalParams& s);
// Two-term form, adds -n^2(2+3n)/((1+2n)^2 gamma^4).
double e_two_term(const CoherentThermalParams& s);
// (1 + n)^2 l / alpha^2.
double c_l_upper(std::int64_t l, const CoherentThermalParams& s);

struct ChannelMomentPrediction {
    double bias;    // gamma_out - Tr(tau a)
    double excess;  // Tr(tau a^dag a) - gamma_out^2
    bool regime_ok;
};
ChannelMomentPrediction predicted_channel_moments(double gamma_in, double gamma_out, double n_th);

struct RegimeReport {
    bool ok = true;
    std::vector<std::string> warnings;
};
// alpha >> max(1, n^2) and |r| << alpha^(1/3), with a factor-of-3 margin.
RegimeReport expansion_regime(const ExpansionPoint& pt);

}  // namespace ctd

#endif  // CTD_ASYMPTOTICS_H_
