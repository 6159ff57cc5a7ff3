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

#include "ctd/fock.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ctd/numeric.h"

namespace ctd {
namespace {

constexpr double kRescale = 1e280;
const double kLogRescale = std::log(kRescale);

// Accumulates 1 + t1 + t2 + ... where t_{j+1} = t_j * ratio(j) and ratio is
// nonincreasing in j. Returns log of the sum.
template <typename Ratio>
double log_series(std::int64_t terms, Ratio ratio) {
    double t = 1.0, sum = 1.0, shift = 0.0;
    for (std::int64_t j = 0; j < terms; ++j) {
        double q = ratio(j);
        t *= q;
        sum += t;
        if (sum > kRescale) {
            t /= kRescale;
            sum /= kRescale;
            shift += kLogRescale;
        }
        if (q < 0.5 && t < 1e-18 * sum) break;
    }
    return std::log(sum) + shift;
}

// Sums outward from term k0 with t_{k+1}/t_k = ratio(k), which is decreasing in k.
// Returns log of sum_k t_k / t_{k0}.
template <typename Ratio>
double log_series_from(std::int64_t k0, std::int64_t k_last, Ratio ratio) {
    CompensatedSum sum;
    sum += 1.0;
    double t = 1.0;
    for (std::int64_t k = k0; k < k_last; ++k) {
        t *= ratio(k);
        sum += t;
        if (t < 1e-18 * sum.value()) break;
    }
    t = 1.0;
    for (std::int64_t k = k0; k > 0; --k) {
        t /= ratio(k - 1);
        sum += t;
        if (t < 1e-18 * sum.value()) break;
    }
    return std::log(sum.value());
}

// log sum_{k=0}^{m} t_k, t_k = x^k [m!/(m-k)!] [l!/(l-k)!] / k!.
double kernel(std::int64_t m, std::int64_t l, double x, double log_x) {
    if (m == 0 || x == 0.0) return 0.0;
    const double dm = static_cast<double>(m), dl = static_cast<double>(l);
    auto ratio = [&](std::int64_t k) {
        const double dk = static_cast<double>(k);
        return (dm - dk) * (dl - dk) * x / (dk + 1.0);
    };
    // Largest term: (m - k)(l - k) x = k + 1.
    const double b = x * (dm + dl) + 1.0;
    const double disc = std::max(0.0, b * b - 4.0 * x * (x * dm * dl - 1.0));
    const double root = 2.0 * (x * dm * dl - 1.0) / (b + std::sqrt(disc));
    const auto peak = static_cast<std::int64_t>(std::clamp(std::ceil(root), 0.0, dm));
    if (peak <= 16) {
        return log_series(m, ratio);
    }
    if (m - peak <= 16) {
        // Sum from the top term k = m downward.
        double base = std::lgamma(dl + 1.0) - std::lgamma(dl - dm + 1.0) + dm * log_x;
        return base + log_series(m, [&](std::int64_t j) {
                   double k = dm - static_cast<double>(j);
                   return k / ((dm - k + 1.0) * (dl - k + 1.0) * x);
               });
    }
    const double dk = static_cast<double>(peak);
    const double log_peak = dk * log_x + std::lgamma(dm + 1.0) - std::lgamma(dm - dk + 1.0) +
                            std::lgamma(dl + 1.0) - std::lgamma(dl - dk + 1.0) - std::lgamma(dk + 1.0);
    return log_peak + log_series_from(peak, m, ratio);
}

}  // namespace

double thermal_occupation(double beta, const ModeParams& mode) {
    mode.validate();
    if (std::isinf(beta) && beta > 0) return 0.0;
    if (!(beta > 0)) throw DomainError("beta must be positive");
    return 1.0 / std::expm1(beta * mode.omega);
}

double inverse_temperature(double n_th, const ModeParams& mode) {
    mode.validate();
    if (!(n_th >= 0)) throw DomainError("n_th must be nonnegative");
    if (n_th == 0.0) return kInf;
    return std::log1p(1.0 / n_th) / mode.omega;
}

double log_kernel_sum(std::int64_t m, std::int64_t l, double x) {
    if (m < 0 || l < m) throw DomainError("log_kernel_sum needs 0 <= m <= l");
    if (x < 0) throw DomainError("log_kernel_sum needs x >= 0");
    return kernel(m, l, x, std::log(x));
}

double log_laguerre_neg(std::int64_t l, double y) {
    if (l < 0 || y < 0) throw DomainError("log_laguerre_neg needs l >= 0, y >= 0");
    if (l == 0 || y == 0.0) return 0.0;
    const double dl = static_cast<double>(l);
    auto ratio = [&](std::int64_t i) {
        const double di = static_cast<double>(i);
        return (dl - di) * y / ((di + 1.0) * (di + 1.0));
    };
    // Largest term: (l - i) y = (i + 1)^2.
    const double u = 2.0 * y * (dl + 1.0) / (y + std::sqrt(y * y + 4.0 * y * (dl + 1.0)));
    const auto peak = static_cast<std::int64_t>(std::clamp(std::ceil(u - 1.0), 0.0, dl));
    if (peak <= 16) return log_series(l, ratio);
    const double di = static_cast<double>(peak);
    const double log_peak =
        std::lgamma(dl + 1.0) - std::lgamma(dl - di + 1.0) - 2.0 * std::lgamma(di + 1.0) + di * std::log(y);
    return log_peak + log_series_from(peak, l, ratio);
}

LogValue log_matrix_element(std::int64_t m, std::int64_t l, const CoherentThermalParams& s) {
    if (m < 0 || l < 0) throw DomainError("Fock levels must be nonnegative");
    const double a = s.amplitude(), n = s.n_th;
    const double phase = static_cast<double>(m - l) * s.phase();
    if (m > l) std::swap(m, l);
    const double dm = static_cast<double>(m), dl = static_cast<double>(l);
    if (a == 0.0) {
        if (m != l) return {};
        if (n == 0.0) return m == 0 ? LogValue{0.0, 0.0} : LogValue{};
        return {dm * (std::log(n) - std::log1p(n)) - std::log1p(n), 0.0};
    }
    const double log_a = std::log(a);
    double lv = (dm + dl) * log_a - 0.5 * (std::lgamma(dm + 1.0) + std::lgamma(dl + 1.0));
    if (n == 0.0) return {lv - a * a, phase};
    const double log_x = std::log(n) + std::log1p(n) - 2.0 * log_a;
    lv += -a * a / (n + 1.0) - (dm + dl + 1.0) * std::log1p(n);
    lv += kernel(m, l, std::exp(log_x), log_x);
    return {lv, phase};
}

cplx matrix_element(std::int64_t m, std::int64_t l, const CoherentThermalParams& s) {
    return log_matrix_element(m, l, s).value();
}

double log_diagonal_element(std::int64_t l, const CoherentThermalParams& s) {
    if (l < 0) throw DomainError("Fock level must be nonnegative");
    const double a = s.amplitude(), n = s.n_th;
    if (a == 0.0 || n == 0.0) return log_matrix_element(l, l, s).log_mag;
    const double y = a * a / (n * (n + 1.0));
    if (!std::isfinite(y)) return log_matrix_element(l, l, s).log_mag;
    const double dl = static_cast<double>(l);
    return -a * a / (n + 1.0) - std::log1p(n) + dl * (std::log(n) - std::log1p(n)) +
           log_laguerre_neg(l, y);
}

double diagonal_element(std::int64_t l, const CoherentThermalParams& s) {
    return std::exp(log_diagonal_element(l, s));
}

double mgf_domain_limit(const CoherentThermalParams& s) {
    return s.n_th == 0.0 ? kInf : std::log1p(1.0 / s.n_th);
}

double log_mgf_derivative(double t, const CoherentThermalParams& s, int k) {
    if (k < 0 || k > 2) throw DomainError("mgf derivative order must be 0, 1 or 2");
    const double a2 = std::norm(s.alpha), n = s.n_th;
    const double u = std::expm1(t);
    const double D = 1.0 - u * n;
    if (!(D > 0)) {
        throw DomainError("mgf needs e^t < 1 + 1/n_th (t < " + std::to_string(mgf_domain_limit(s)) +
                          ")");
    }
    const double log_m = a2 * u / D - std::log(D);
    if (k == 0) return log_m;
    const double h = a2 / (D * D) + n / D;
    if (k == 1) return log_m + std::log((1.0 + u) * h);
    const double hp = 2.0 * a2 * n / (D * D * D) + n * n / (D * D);
    return log_m + std::log((1.0 + u) * ((1.0 + u) * h * h + h + (1.0 + u) * hp));
}

double mgf(double t, const CoherentThermalParams& s) {
    return std::exp(log_mgf_derivative(t, s, 0));
}

Moments mgf_moments(const CoherentThermalParams& s) {
    const double a2 = std::norm(s.alpha), n = s.n_th;
    Moments m;
    m.mean = a2 + n;
    m.second = a2 * a2 + 4.0 * a2 * n + a2 + 2.0 * n * n + n;
    m.variance = 2.0 * a2 * n + a2 + n * n + n;
    return m;
}

double exact_left_sum(const CoherentThermalParams& s, std::int64_t T, int k) {
    CompensatedSum acc;
    for (std::int64_t l = 0; l <= T; ++l) {
        acc += diagonal_element(l, s) * std::pow(static_cast<double>(l), k);
    }
    return acc.value();
}

double chernoff_tail_bound(const CoherentThermalParams& s, double T, Side side, int k,
                           Tilt tilt) {
    s.validate();
    if (k < 0 || k > 2) throw DomainError("moment power must be 0, 1 or 2");
    const double a = s.amplitude(), n = s.n_th;
    auto full_moment = [&] { return std::exp(log_mgf_derivative(0.0, s, k)); };
    if (a == 0.0 && n == 0.0) {
        // Vacuum: all mass on l = 0.
        bool hit = side == Side::kRight ? T <= 0 : T >= 0;
        return hit && k == 0 ? 1.0 : 0.0;
    }
    if (side == Side::kLeft && T < 0) return 0.0;
    if (side == Side::kRight && T <= 0) return full_moment();
    auto log_bound = [&](double t) { return -t * T + log_mgf_derivative(t, s, k); };

    if (tilt == Tilt::kFixed) {
        double t;
        if (side == Side::kRight) {
            if (a == 0.0) throw FallbackRequired("right tilt sits on the mgf pole at alpha = 0");
            t = std::log1p(1.0 / (a + n));
        } else {
            if (!(a > n + 1.0)) {
                throw FallbackRequired("left tilt needs |alpha| > n_th + 1; sum exactly");
            }
            t = -std::log1p(1.0 / (a - n - 1.0));
        }
        return std::exp(log_bound(t));
    }

    double lo, hi;
    if (side == Side::kRight) {
        lo = 0.0;
        hi = std::min(60.0, mgf_domain_limit(s) * (1.0 - 1e-12));
    } else {
        lo = -60.0;
        hi = 0.0;
    }
    double t = golden_section_min(log_bound, lo, hi);
    return std::min(std::exp(log_bound(t)), full_moment());
}

TruncationBudget TruncationBudget::defaults(const CoherentThermalParams& s) {
    TruncationBudget b;
    b.R = std::max(10.0, std::pow(s.amplitude(), 0.25));
    return b;
}

double window_sigma(const CoherentThermalParams& s) {
    const double n = s.n_th;
    return std::max(std::sqrt(1.0 + 2.0 * n) * s.amplitude(), std::sqrt(n * (n + 1.0)));
}

cplx FockBand::offdiag(std::int64_t l) const {
    if (!contains(l)) return 0.0;
    return std::polar(std::exp(off_log_mag[l - l_min]), off_phase[l - l_min]);
}

double FockBand::offdiag_abs(std::int64_t l) const {
    return contains(l) ? std::exp(off_log_mag[l - l_min]) : 0.0;
}

FockBand typical_window(const CoherentThermalParams& s, const TruncationBudget& budget) {
    s.validate();
    if (!(budget.R > 0)) throw DomainError("window half-width R must be positive");
    const double a = s.amplitude(), n = s.n_th, a2 = a * a;
    const double sig = window_sigma(s);
    const bool vacuum = a == 0.0 && n == 0.0;

    FockBand band;
    band.state = s;
    double R = budget.R;
    for (int attempt = 0;; ++attempt) {
        const auto lo = static_cast<std::int64_t>(std::max(0.0, std::floor(a2 - R * sig)));
        const auto hi = static_cast<std::int64_t>(std::ceil(a2 + R * sig));
        const std::int64_t dim = hi - lo + 1;
        if (static_cast<std::size_t>(dim) > budget.max_dim) {
            throw ResourceError("typical window needs " + std::to_string(dim) +
                                " levels, above the configured maximum of " +
                                std::to_string(budget.max_dim));
        }
        for (int k = 0; k < 3; ++k) {
            double right = 0.0, left = 0.0;
            if (!vacuum) {
                const double T = static_cast<double>(hi + 1);
                right = chernoff_tail_bound(s, T, Side::kRight, k, Tilt::kOptimized);
                if (a > 0) right = std::min(right, chernoff_tail_bound(s, T, Side::kRight, k));
            }
            if (lo > 0) {
                const double T = static_cast<double>(lo - 1);
                if (a > n + 1.0) {
                    left = std::min(chernoff_tail_bound(s, T, Side::kLeft, k),
                                    chernoff_tail_bound(s, T, Side::kLeft, k, Tilt::kOptimized));
                } else {
                    left = exact_left_sum(s, lo - 1, k) * (1.0 + 1e-12);
                }
            }
            band.left_tail[k] = left;
            band.right_tail[k] = right;
            band.tail_bounds[k] = left + right;
        }
        band.R = R;
        band.l_min = lo;
        band.dim = dim;
        bool ok = budget.epsilon_target <= 0 ||
                  std::all_of(band.tail_bounds.begin(), band.tail_bounds.end(),
                              [&](double t) { return t <= budget.epsilon_target; });
        if (ok) break;
        if (attempt > 200) throw ResourceError("tail target unreachable");
        R *= 1.25;
    }

    band.diag.resize(band.dim);
    band.off_log_mag.resize(band.dim);
    band.off_phase.resize(band.dim);
    for (std::int64_t i = 0; i < band.dim; ++i) {
        const std::int64_t l = band.l_min + i;
        band.diag[i] = std::exp(log_matrix_element(l, l, s).log_mag);
        LogValue off = log_matrix_element(l, l + 1, s);
        band.off_log_mag[i] = off.log_mag;
        band.off_phase[i] = off.phase;
    }
    return band;
}

cplx displacement_element(std::int64_t m, std::int64_t n, cplx alpha) {
    if (m < 0 || n < 0) throw DomainError("Fock levels must be nonnegative");
    const double x = std::norm(alpha);
    if (x == 0.0) return m == n ? 1.0 : 0.0;
    // <m|D|n> for m < n is (-1)^(n-m) conj(<n|D|m>) with alpha -> alpha.
    const bool swap = m < n;
    const std::int64_t hi = swap ? n : m, lo = swap ? m : n;
    const double lag = std::assoc_laguerre(static_cast<unsigned>(lo),
                                           static_cast<unsigned>(hi - lo), x);
    const double mag = std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) +
                                static_cast<double>(hi - lo) * std::log(std::abs(alpha)) -
                                0.5 * x);
    const double ph = static_cast<double>(hi - lo) * std::arg(alpha);
    cplx v = std::polar(mag * lag, ph);
    if (swap) v = std::conj(v) * (((hi - lo) % 2) ? -1.0 : 1.0);
    return v;
}

}  // namespace ctd
