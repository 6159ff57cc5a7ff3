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

#include "ctd/metrics.h"

#include <algorithm>
#include <cmath>

#include "ctd/numeric.h"

namespace ctd {

MonotoneFunction MonotoneFunction::sld() {
    return {Kind::kSld, "sld", [](double t) { return 0.5 * (1.0 + t); }};
}

MonotoneFunction MonotoneFunction::rld() {
    return {Kind::kRld, "rld", [](double t) { return 2.0 * t / (1.0 + t); }};
}

MonotoneFunction MonotoneFunction::custom(std::string name, std::function<double(double)> f) {
    if (!f) throw DomainError("custom monotone function is empty");
    if (std::abs(f(1.0) - 1.0) > 1e-12) throw DomainError(name + ": f(1) != 1");
    for (int i = 0; i <= 120; ++i) {
        const double t = std::pow(10.0, -6.0 + 0.1 * i);
        const double ft = f(t), rt = t * f(1.0 / t);
        if (!(ft > 0) || !std::isfinite(ft)) throw DomainError(name + ": f must be positive");
        if (std::abs(ft - rt) > 1e-10 * std::max(1.0, std::abs(ft))) {
            throw DomainError(name + ": f is not self-inverse at t = " + std::to_string(t));
        }
    }
    return {Kind::kCustom, std::move(name), std::move(f)};
}

double MonotoneFunction::at_zero() const {
    switch (kind_) {
        case Kind::kSld:
            return 0.5;
        case Kind::kRld:
            return 0.0;
        case Kind::kCustom:
            break;
    }
    return f_(0.0);
}

MonotoneFunction wigner_yanase() {
    return MonotoneFunction::custom("wigner-yanase", [](double t) {
        const double s = 0.5 * (1.0 + std::sqrt(t));
        return s * s;
    });
}

MonotoneFunction kubo_mori() {
    return MonotoneFunction::custom("kubo-mori", [](double t) {
        if (t == 0.0) return 0.0;
        const double d = t - 1.0;
        if (std::abs(d) < 1e-6) return 1.0 + d / 2.0 - d * d / 12.0;
        return d / std::log(t);
    });
}

MonotoneFunction geometric_mean() {
    return MonotoneFunction::custom("geometric", [](double t) { return std::sqrt(t); });
}

double metric_displaced_incoherent(const MonotoneFunction& f, const std::vector<double>& probs,
                                   cplx alpha, const ModeParams& mode) {
    mode.validate();
    const double a2 = std::norm(alpha);
    if (a2 == 0.0) return 0.0;
    const double f0 = f.at_zero();
    CompensatedSum acc;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double pi = probs[i];
        const double pn = i + 1 < probs.size() ? probs[i + 1] : 0.0;
        const double w = static_cast<double>(i + 1);
        if (pn > 0) {
            const double x = pi / pn;
            const double fx = x == 0.0 ? f0 : f(x);
            if (fx == 0.0) return kInf;
            acc += w * pn * (x - 1.0) * (x - 1.0) / fx;
        } else if (pi > 0) {
            // p_{i+1} -> 0: p_{i+1}(x - 1)^2/f(x) -> p_i / f(0)
            if (f0 == 0.0) return kInf;
            acc += w * pi / f0;
        }
    }
    return 2.0 * mode.omega * mode.omega * a2 * acc.value();
}

double g_metric(const MonotoneFunction& f, double s) {
    if (!(s >= 0)) throw DomainError("occupation must be nonnegative");
    // s f(1 + 1/s) = (s + 1) f(s/(s + 1)) by self-inversion
    const double x = s / (s + 1.0);
    const double fx = x == 0.0 ? f.at_zero() : f(x);
    if (fx == 0.0) return kInf;
    return 2.0 / ((s + 1.0) * fx);
}

double metric_thermal(const MonotoneFunction& f, const CoherentThermalParams& s) {
    s.validate();
    const double a2 = std::norm(s.alpha);
    if (a2 == 0.0) return 0.0;
    return s.mode.omega * s.mode.omega * a2 * g_metric(f, s.n_th);
}

double qfi_sld(const CoherentThermalParams& s) {
    s.validate();
    const double w2 = s.mode.omega * s.mode.omega;
    return 4.0 * w2 * std::norm(s.alpha) / (2.0 * s.n_th + 1.0);
}

double purity_of_coherence(const CoherentThermalParams& s) {
    s.validate();
    const double a2 = std::norm(s.alpha), n = s.n_th;
    if (a2 == 0.0) return 0.0;
    if (n == 0.0) return kInf;
    return s.mode.omega * s.mode.omega * a2 * (2.0 * n + 1.0) / (n * (n + 1.0));
}

double coherent_variance(cplx alpha, const ModeParams& mode) {
    return mode.omega * mode.omega * std::norm(alpha);
}

SpectralDecomposition SpectralDecomposition::from_density(const Eigen::MatrixXcd& rho,
                                                          const ModeParams& mode) {
    mode.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const Eigen::Index d = rho.rows();
    Eigen::VectorXd h(d);
    for (Eigen::Index j = 0; j < d; ++j) h(j) = mode.omega * static_cast<double>(j);
    SpectralDecomposition spec;
    spec.probs = es.eigenvalues();
    spec.H_elements = es.eigenvectors().adjoint() * h.asDiagonal() * es.eigenvectors();
    return spec;
}

namespace {

Eigen::VectorXd clamped_probs(const SpectralDecomposition& spec) {
    Eigen::VectorXd p = spec.probs;
    if (p.size() == 0) return p;
    const double thr = kSpectralZero * std::max(p.maxCoeff(), 0.0);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -1e-10) throw DomainError("density matrix has a negative eigenvalue");
        if (p(i) < thr) p(i) = 0.0;
    }
    return p;
}

}  // namespace

double general_F_H(const SpectralDecomposition& spec) {
    const Eigen::VectorXd p = clamped_probs(spec);
    CompensatedSum acc;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        for (Eigen::Index l = 0; l < p.size(); ++l) {
            const double s = p(k) + p(l);
            if (s == 0.0) continue;
            const double d = p(k) - p(l);
            acc += 2.0 * d * d / s * std::norm(spec.H_elements(k, l));
        }
    }
    return acc.value();
}

double general_P_H(const SpectralDecomposition& spec) {
    const Eigen::VectorXd p = clamped_probs(spec);
    if (p.size() == 0) return 0.0;
    const double pmax = p.maxCoeff();
    const double hscale = std::max(1.0, spec.H_elements.cwiseAbs().maxCoeff());
    CompensatedSum acc;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        for (Eigen::Index l = 0; l < p.size(); ++l) {
            if (p(l) == 0.0) {
                // Outside the support: infinite unless the coupling is numerically
                // absent or the source weight is itself at round-off depth.
                if (p(k) > 1e-7 * pmax && std::abs(spec.H_elements(k, l)) > 1e-8 * hscale) {
                    return kInf;
                }
                continue;
            }
            acc += (p(k) * p(k) - p(l) * p(l)) / p(l) * std::norm(spec.H_elements(k, l));
        }
    }
    return acc.value();
}

double qubit_purity(double p, double V) {
    if (!(p > 0 && p < 1)) throw DomainError("qubit_purity needs 0 < p < 1");
    const double d = 1.0 - 2.0 * p;
    return d * d / (p * (1.0 - p)) * V;
}

CopyBounds copies_lower_bound(const CoherentThermalParams& input, const CoherentThermalParams& target) {
    CopyBounds b;
    const bool same = input.n_th == target.n_th && input.alpha == target.alpha;
    auto ratio = [&](double num, double den) {
        if (same) return 1.0;
        if (std::isinf(num) && std::isinf(den)) {
            // both pure: limit at equal temperature
            return std::norm(target.alpha) / std::norm(input.alpha);
        }
        if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
        return num / den;
    };
    const double Ft = qfi_sld(target), Fi = qfi_sld(input);
    const double Pt = purity_of_coherence(target), Pi = purity_of_coherence(input);
    b.f_ratio = ratio(Ft, Fi);
    b.p_ratio = ratio(Pt, Pi);
    b.mp_ratio = same ? Ft / Pi : ratio(Ft, Pi);
    b.max_ratio = std::max(b.f_ratio, b.p_ratio);
    return b;
}

double concentration_metric_gap(const MonotoneFunction& f, const std::vector<double>& occ) {
    if (occ.empty()) return 0.0;
    if (std::all_of(occ.begin(), occ.end(), [&](double v) { return v == occ[0]; })) {
        g_metric(f, occ[0]);  // validates
        return 0.0;
    }
    CompensatedSum sum, mean;
    for (double v : occ) {
        const double g = g_metric(f, v);
        if (std::isinf(g)) return kInf;
        sum += g;
        mean += v;
    }
    const double n = static_cast<double>(occ.size());
    return sum.value() - n * g_metric(f, mean.value() / n);
}

std::vector<double> variance_truncate(const std::vector<double>& dist, std::size_t M) {
    if (M + 1 >= dist.size()) return dist;
    std::vector<double> out(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(M) + 1);
    CompensatedSum tail;
    for (std::size_t i = M; i < dist.size(); ++i) tail += dist[i];
    out[M] = tail.value();
    return out;
}

double distribution_variance(const std::vector<double>& dist) {
    CompensatedSum m1, m2;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double x = static_cast<double>(i);
        m1 += dist[i] * x;
        m2 += dist[i] * x * x;
    }
    const double mean = m1.value();
    return m2.value() - mean * mean;
}

}  // namespace ctd
