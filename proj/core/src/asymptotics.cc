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

#include "ctd/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ctd/fock.h"

namespace ctd {
namespace {

double gauss(double r, double sigma) {
    return std::exp(-0.5 * r * r) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

}  // namespace

double delta_factor(DeltaKind kind, double n) {
    if (!(n >= 0)) throw DomainError("n_th must be nonnegative");
    switch (kind) {
        case DeltaKind::kOpt:
            return n / 2.0 + n / (4.0 * n + 2.0);
        case DeltaKind::kGauss:
            return n;
        case DeltaKind::kMp:
            return n / 2.0 + 0.25;
        case DeltaKind::kHeterodyne:
            return n + 1.0;
    }
    return 0.0;
}

DeltaKind parse_delta_kind(const std::string& name) {
    if (name == "opt") return DeltaKind::kOpt;
    if (name == "gauss") return DeltaKind::kGauss;
    if (name == "mp") return DeltaKind::kMp;
    if (name == "heterodyne" || name == "het") return DeltaKind::kHeterodyne;
    throw DomainError("unknown delta kind '" + name + "' (opt|gauss|mp|heterodyne)");
}

double ExpansionPoint::sigma() const {
    return std::sqrt(1.0 + 2.0 * state.n_th) * state.amplitude();
}

double ExpansionPoint::r() const {
    const double a = state.amplitude();
    return (static_cast<double>(l) - a * a) / sigma();
}

double ExpansionPoint::s() const {
    const double a = state.amplitude();
    return (static_cast<double>(l) - a * a) / a;
}

double poly_f1(double n, double r) {
    const double r2 = r * r;
    return ((6 * n * n + 6 * n + 1) / 6.0 * r2 * r + (-2 * n * n - 4 * n - 1) / 2.0 * r) /
           (2 * n + 1);
}

double poly_f2(double n, double r) {
    const double n2 = n * n, n3 = n2 * n, n4 = n2 * n2;
    const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2;
    const double c = 6 * n2 + 6 * n + 1;
    const double p = c * c / 36.0 * r6 - (21 * n4 + 48 * n3 + 36 * n2 + 10 * n + 1) / 3.0 * r4 +
                     (20 * n4 + 72 * n3 + 72 * n2 + 24 * n + 3) / 4.0 * r2 -
                     (-6 * n4 + 12 * n2 + 6 * n + 1) / 6.0;
    return p / ((2 * n + 1) * (2 * n + 1));
}

double poly_g1(double n, double r) {
    const double r2 = r * r;
    return ((6 * n * n + 6 * n + 1) / 6.0 * r2 * r + (-n * n - 3 * n - 1) * r) / (2 * n + 1);
}

double poly_g2(double n, double r) {
    const double n2 = n * n, n3 = n2 * n, n4 = n2 * n2;
    const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2;
    const double c = 6 * n2 + 6 * n + 1;
    const double p = c * c / 36.0 * r6 - (42 * n4 + 108 * n3 + 90 * n2 + 28 * n + 3) / 6.0 * r4 +
                     (5 * n4 + 26 * n3 + 33 * n2 + 14 * n + 2) * r2 -
                     (18 * n4 + 60 * n3 + 84 * n2 + 42 * n + 7) / 6.0;
    return p / ((2 * n + 1) * (2 * n + 1));
}

ACoefficients a_coefficients(double n) {
    return {2 * n * (n + 1) * (n + 1) / (2 * n + 1), 1.0, n * (3 * n + 2) / (2 * n + 1)};
}

double poisson_expansion(std::int64_t l, double alpha) {
    if (!(alpha > 0)) throw DomainError("poisson_expansion needs alpha > 0");
    const double s = (static_cast<double>(l) - alpha * alpha) / alpha;
    const double s2 = s * s;
    const double a1 = (s2 * s - 3 * s) / 6.0;
    const double a2 = (s2 * s2 * s2 - 12 * s2 * s2 + 27 * s2 - 6) / 72.0;
    return gauss(s, alpha) * (1.0 + a1 / alpha + a2 / (alpha * alpha));
}

double rho_ll_approx(const ExpansionPoint& pt) {
    const double sig = pt.sigma(), r = pt.r(), n = pt.state.n_th;
    if (!(sig > 0)) throw DomainError("expansion needs alpha > 0");
    return gauss(r, sig) * (1.0 + poly_f1(n, r) / sig + 0.5 * poly_f2(n, r) / (sig * sig));
}

double rho_offdiag_approx(const ExpansionPoint& pt) {
    const double sig = pt.sigma(), r = pt.r(), n = pt.state.n_th;
    if (!(sig > 0)) throw DomainError("expansion needs alpha > 0");
    return gauss(r, sig) * (1.0 + poly_g1(n, r) / sig + 0.5 * poly_g2(n, r) / (sig * sig));
}

double c_l_sq_approx(const ExpansionPoint& pt) {
    const double sig = pt.sigma(), r = pt.r();
    if (!(sig > 0)) throw DomainError("expansion needs alpha > 0");
    const ACoefficients A = a_coefficients(pt.state.n_th);
    return 1.0 + A.a1 * r / sig + (A.a0 - A.a2 * r * r) / (sig * sig);
}

Cumulants cumulants(const CoherentThermalParams& s) {
    const double a2 = std::norm(s.alpha), n = s.n_th;
    const double n2 = n * n, n3 = n2 * n, n4 = n2 * n2;
    return {a2 + 2 * n3 + 6 * a2 * n2 + 3 * n2 + 6 * a2 * n + n,
            a2 + 6 * n4 + 24 * a2 * n3 + 12 * n3 + 36 * a2 * n2 + 7 * n2 + 14 * a2 * n + n};
}

double edgeworth_approx(std::int64_t l, const CoherentThermalParams& s) {
    const Moments m = mgf_moments(s);
    const double sig = std::sqrt(m.variance);
    if (!(sig > 0)) throw DomainError("edgeworth needs a nondegenerate distribution");
    const double r = (static_cast<double>(l) - m.mean) / sig;
    const Cumulants k = cumulants(s);
    const double r2 = r * r;
    const double he3 = r2 * r - 3 * r;
    const double he4 = r2 * r2 - 6 * r2 + 3;
    const double s3 = sig * sig * sig;
    return gauss(r, sig) * (1.0 + k.k3 * he3 / (6 * s3) + k.k4 * he4 / (24 * s3 * sig));
}

double e_leading(const CoherentThermalParams& s) {
    const double g2 = std::norm(s.alpha), n = s.n_th;
    if (!(g2 > 0)) throw DomainError("E needs gamma > 0");
    return n * (n + 1) / ((1 + 2 * n) * g2);
}

double e_two_term(const CoherentThermalParams& s) {
    const double g2 = std::norm(s.alpha), n = s.n_th;
    return e_leading(s) - n * n * (2 + 3 * n) / ((1 + 2 * n) * (1 + 2 * n) * g2 * g2);
}

double c_l_upper(std::int64_t l, const CoherentThermalParams& s) {
    const double a2 = std::norm(s.alpha);
    if (!(a2 > 0)) throw DomainError("c_l bound needs alpha > 0");
    return (1 + s.n_th) * (1 + s.n_th) * static_cast<double>(l) / a2;
}

ChannelMomentPrediction predicted_channel_moments(double gamma_in, double gamma_out, double n_th) {
    ChannelMomentPrediction p;
    p.bias = gamma_out * gamma_out * gamma_out;
    p.excess = gamma_out * gamma_out * e_leading(make_state(n_th, gamma_in));
    p.regime_ok = gamma_in >= 3.0 && gamma_in * gamma_out <= 0.1;
    return p;
}

RegimeReport expansion_regime(const ExpansionPoint& pt) {
    RegimeReport rep;
    const double a = pt.state.amplitude(), n = pt.state.n_th;
    if (!(a >= 3.0 * std::max(1.0, n * n))) {
        rep.ok = false;
        rep.warnings.push_back("alpha is not large against max(1, n_th^2)");
    }
    if (!(std::abs(pt.r()) * 3.0 <= std::cbrt(a))) {
        rep.ok = false;
        rep.warnings.push_back("|r| is not small against alpha^(1/3)");
    }
    return rep;
}

}  // namespace ctd
