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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ctd/asymptotics.h"
#include "ctd/numeric.h"

namespace ctd {
namespace {

void require_displacement(double a) {
    if (!(a > 0)) throw DomainError("coefficients undefined at zero displacement");
}

// log |c_l|^2 for l >= 1.
double log_coefficient_sq(std::int64_t l, double a, double n) {
    const double dl = static_cast<double>(l);
    if (n == 0.0) return std::log(dl) - 2.0 * std::log(a);
    const std::int64_t m = l - 1;
    const double log_x = std::log(n) + std::log1p(n) - 2.0 * std::log(a);
    const double x = std::exp(log_x);
    const double k1 = log_kernel_sum(m, m, x);
    const double k2 = log_kernel_sum(m, l, x);
    return 2.0 * std::log1p(n) + std::log(dl) - 2.0 * std::log(a) + 2.0 * (k1 - k2);
}

// |c_l|^2 - 1 without forming |c_l|^2 first.
double coefficient_sq_minus_one(std::int64_t l, double a, double n) {
    if (l == 0) return -1.0;
    if (n == 0.0) return (static_cast<double>(l) - a * a) / (a * a);
    return std::expm1(log_coefficient_sq(l, a, n));
}

// 1 - exp(-u)(1 + u + u^2).
double h_exact(double u) {
    if (u < 0.1) {
        // sum_{j>=2} (-1)^{j+1} [1/j! - 1/(j-1)! + 1/(j-2)!] u^j
        double term_fact = 1.0;  // 1/(j-2)!
        double acc = 0.0, up = u * u;
        for (int j = 2; j < 30; ++j) {
            const double dj = j;
            const double coef = term_fact * (1.0 / (dj * (dj - 1.0)) - 1.0 / (dj - 1.0) + 1.0);
            acc += ((j % 2) ? 1.0 : -1.0) * coef * up;
            up *= u;
            term_fact /= (dj - 1.0);
        }
        return acc;
    }
    return -std::expm1(-u) - std::exp(-u) * (u + u * u);
}

}  // namespace

double optimal_coefficient_sq(std::int64_t l, const CoherentThermalParams& s) {
    const double a = s.amplitude();
    require_displacement(a);
    if (l < 0) throw DomainError("Fock level must be nonnegative");
    if (l == 0) return 0.0;
    if (s.n_th == 0.0) return static_cast<double>(l) / (a * a);
    return std::exp(log_coefficient_sq(l, a, s.n_th));
}

std::vector<cplx> optimal_coefficients(const CoherentThermalParams& s, const FockBand& band,
                                       std::int64_t L) {
    require_displacement(s.amplitude());
    if (L < 0) L = band.l_max() + 1;
    std::vector<cplx> c(static_cast<std::size_t>(L) + 1, 0.0);
    for (std::int64_t l = 1; l <= L; ++l) c[l] = std::sqrt(optimal_coefficient_sq(l, s));
    return c;
}

KrausDistiller make_optimal_distiller(const FockBand& band, double gamma_out, std::int64_t L) {
    if (!(gamma_out >= 0)) throw DomainError("gamma_out must be nonnegative");
    KrausDistiller d;
    d.gamma_in = band.state.amplitude();
    d.gamma_out = gamma_out;
    d.n_th = band.state.n_th;
    d.rotation = band.state.phase();
    d.c = optimal_coefficients(band.state, band, L);
    d.optimal = true;
    return d;
}

QubitOutput apply_distiller(const KrausDistiller& d, const FockBand& in) {
    const double g = d.gamma_out, u = g * g;
    const double tail0 = in.tail_bounds[0];
    CompensatedSum x_acc, d_acc, coh_acc;
    auto A = [&](std::int64_t l) { return std::norm(d.coeff(l)) * u; };
    for (std::int64_t l = in.l_min; l <= in.l_max(); ++l) {
        const double rho = in.rho(l);
        const double al = A(l), al1 = A(l + 1);
        double cm1;
        if (d.optimal && l <= d.L()) {
            cm1 = coefficient_sq_minus_one(l, d.gamma_in, d.n_th);
        } else {
            cm1 = std::norm(d.coeff(l)) - 1.0;
        }
        x_acc += rho * u * (cm1 - al) / (1.0 + al);
        if (d.optimal) {
            // a_l b_{l+1} rho_{l,l+1} = g rho_ll q_l when c_{l+1} = rho_ll / rho_{l,l+1}.
            if (l + 1 <= d.L()) {
                const double one_minus_q = -std::expm1(-0.5 * (std::log1p(al) + std::log1p(al1)));
                d_acc += g * rho * one_minus_q;
            } else {
                d_acc += g * rho;
            }
        } else {
            const cplx b1 = d.coeff(l + 1) * g / std::sqrt(1.0 + al1);
            coh_acc += std::real(in.offdiag(l) * std::conj(b1)) / std::sqrt(1.0 + al);
        }
    }
    QubitOutput out;
    out.excess = x_acc.value();
    const double g_hi =
        d.optimal ? std::min(tail0, (1 + d.n_th) * (1 + d.n_th) * u / (d.gamma_in * d.gamma_in) *
                                        in.tail_bounds[1])
                  : tail0;
    out.excess_lo = out.excess - u * tail0;
    out.excess_hi = out.excess + g_hi;
    if (d.optimal) {
        out.deficit = d_acc.value();
        out.deficit_lo = out.deficit;
        out.deficit_hi = out.deficit + g * tail0;
    } else {
        double win_mass = 0.0;
        for (double r : in.diag) win_mass += r;
        out.deficit = g - coh_acc.value();
        const double edge = in.l_min > 0 ? 0.5 * in.rho(in.l_min) : 0.0;
        const double t = g * (tail0 + edge) + g * std::abs(1.0 - win_mass);
        out.deficit_lo = out.deficit - t;
        out.deficit_hi = out.deficit + t;
    }
    out.p1 = u + out.excess;
    out.coh = g - out.deficit;
    const double slack = 1e-10 + 4.0 * tail0;
    if (out.p1 < -slack || out.p1 > 1.0 + slack ||
        out.coh * out.coh > out.p1 * (1.0 - out.p1) + slack) {
        throw std::logic_error("distiller output violates positivity");
    }
    return out;
}

Infidelity output_infidelity(const KrausDistiller& d, const FockBand& input, bool exact_target) {
    const QubitOutput q = apply_distiller(d, input);
    const double g = d.gamma_out, u = g * g;
    if (!exact_target && u > 1.0) throw DomainError("truncated target needs gamma_out <= 1");
    auto f = [&](double x, double dd) {
        if (exact_target) return h_exact(u) + std::exp(-u) * ((1.0 - u) * x + 2.0 * g * dd);
        const double s = std::sqrt(1.0 - u);
        return -2.0 * u * u * s / (1.0 + s) + (1.0 - 2.0 * u) * x + 2.0 * g * s * dd;
    };
    Infidelity r;
    r.value = f(q.excess, q.deficit);
    const double c[4] = {f(q.excess_lo, q.deficit_lo), f(q.excess_lo, q.deficit_hi),
                         f(q.excess_hi, q.deficit_lo), f(q.excess_hi, q.deficit_hi)};
    r.lo = *std::min_element(c, c + 4);
    r.hi = *std::max_element(c, c + 4);
    return r;
}

double output_fidelity(const KrausDistiller& d, const FockBand& input, bool exact_target) {
    return 1.0 - output_infidelity(d, input, exact_target).value;
}

BigE big_e(const FockBand& band) {
    const double a = band.state.amplitude(), n = band.state.n_th;
    require_displacement(a);
    CompensatedSum acc;
    for (std::int64_t l = band.l_min; l <= band.l_max(); ++l) {
        acc += band.rho(l) * coefficient_sq_minus_one(l, a, n);
    }
    BigE e;
    e.value = acc.value();
    e.lo = e.value - band.tail_bounds[0];
    e.hi = e.value + (1 + n) * (1 + n) / (a * a) * band.tail_bounds[1];
    return e;
}

namespace {

Eigen::MatrixXcd kraus_matrix(const KrausDistiller& d, std::int64_t l, std::int64_t dim) {
    const double u = d.gamma_out * d.gamma_out;
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(2, dim);
    K(0, l) = 1.0 / std::sqrt(1.0 + std::norm(d.coeff(l)) * u);
    if (l + 1 < dim) {
        const cplx c1 = d.coeff(l + 1);
        K(1, l + 1) = c1 * d.gamma_out / std::sqrt(1.0 + std::norm(c1) * u);
    }
    return K;
}

}  // namespace

double completeness_residual(const KrausDistiller& d, std::int64_t dim) {
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t l = 0; l < dim; ++l) {
        Eigen::MatrixXcd K = kraus_matrix(d, l, dim);
        S += K.adjoint() * K;
    }
    S -= Eigen::MatrixXcd::Identity(dim, dim);
    return S.cwiseAbs().maxCoeff();
}

Eigen::Matrix2cd apply_dense(const KrausDistiller& d, const Eigen::MatrixXcd& rho) {
    const std::int64_t dim = rho.rows();
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (std::int64_t l = 0; l < dim; ++l) {
        Eigen::MatrixXcd K = kraus_matrix(d, l, dim);
        out += K * rho * K.adjoint();
    }
    return out;
}

double covariance_residual(const KrausDistiller& d, const Eigen::MatrixXcd& rho, double theta) {
    const std::int64_t dim = rho.rows();
    Eigen::VectorXcd ph(dim);
    for (std::int64_t j = 0; j < dim; ++j) ph(j) = std::polar(1.0, -theta * static_cast<double>(j));
    Eigen::MatrixXcd rotated = ph.asDiagonal() * rho * ph.conjugate().asDiagonal();
    Eigen::Vector2cd po(1.0, std::polar(1.0, -theta));
    Eigen::Matrix2cd lhs = apply_dense(d, rotated);
    Eigen::Matrix2cd rhs = po.asDiagonal() * apply_dense(d, rho) * po.conjugate().asDiagonal();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

double infidelity_bound_from_moments(double second, cplx first, cplx target) {
    const double var = second - std::norm(first);
    if (var < -1e-12 * std::max(1.0, std::abs(second))) {
        throw ConstraintError("second moment below |first moment|^2");
    }
    return std::max(0.0, var) + std::norm(first - target);
}

long long batch_count(long long n, BatchRounding rounding) {
    if (n < 1) throw DomainError("copy count must be >= 1");
    const double b = std::pow(static_cast<double>(n), 0.75);
    const double nearest = std::round(b);
    if (std::abs(b - nearest) <= 1e-9 * b) return static_cast<long long>(nearest);
    return static_cast<long long>(rounding == BatchRounding::kCeil ? std::ceil(b) : std::floor(b));
}

DivideDistillResult divide_and_distill_bound(long long n, const CoherentThermalParams& s, long long B) {
    s.validate();
    if (B < 1 || n < B) throw DomainError("need n >= B >= 1");
    const double a = s.amplitude();
    require_displacement(a);
    DivideDistillResult r;
    r.B = B;
    r.gamma_in = std::sqrt(static_cast<double>(n) / static_cast<double>(B)) * a;
    r.gamma_out = a / std::sqrt(static_cast<double>(B));
    if (r.gamma_in < 3.0) {
        r.regime_ok = false;
        r.warnings.push_back("gamma_in is not large");
    }
    if (r.gamma_in * r.gamma_out > 0.1) {
        r.regime_ok = false;
        r.warnings.push_back("gamma_in * gamma_out is not small");
    }
    const FockBand band = typical_window(make_state(s.n_th, r.gamma_in, s.mode.omega));
    const KrausDistiller d = make_optimal_distiller(band, r.gamma_out);
    const QubitOutput q = apply_distiller(d, band);
    const double g = r.gamma_out, dn = static_cast<double>(n), dB = static_cast<double>(B);
    auto f = [&](double x, double dd) { return dn * (x + dd * (2.0 * g - dd) + dB * dd * dd); };
    r.variance = q.excess + q.deficit * (2.0 * g - q.deficit);
    r.bias = q.deficit;
    r.bound = f(q.excess, q.deficit);
    r.lo = f(q.excess_lo, q.deficit_lo);
    r.hi = f(q.excess_hi, q.deficit_hi);
    return r;
}

ScalingReport check_scaling_requirements(double variance, double bias, double gamma_in,
                                         double gamma_out, double limit) {
    ScalingReport rep;
    const double u = gamma_out * gamma_out;
    rep.variance_ratio = variance / (u / (gamma_in * gamma_in));
    rep.bias_ratio = std::abs(bias) / (u / gamma_in);
    rep.pass = std::isfinite(rep.variance_ratio) && std::isfinite(rep.bias_ratio) &&
               std::abs(rep.variance_ratio) <= limit && rep.bias_ratio <= limit;
    return rep;
}

double purity_forbidden_infidelity(double P_in, double V_target) {
    if (!(P_in > 0) || !(V_target > 0)) throw DomainError("need P_in > 0 and V_target > 0");
    if (std::isinf(P_in)) return 0.0;
    const double b = 3.0 + P_in / V_target;
    // smaller root of d^2 - b d + 1 = 0
    return 2.0 / (b + std::sqrt((b - 2.0) * (b + 2.0)));
}

double amplify_attenuate_factor(const CoherentThermalParams& s, cplx target) {
    const double a2 = std::norm(s.alpha);
    if (!(a2 > 0)) throw DomainError("input displacement must be nonzero");
    return std::norm(target) / a2 * delta_factor(DeltaKind::kOpt, s.n_th);
}

}  // namespace ctd
