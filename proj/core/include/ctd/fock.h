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

#ifndef CTD_FOCK_H_
#define CTD_FOCK_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ctd/types.h"

namespace ctd {

// n_th = 1/(exp(beta*omega) - 1). beta = +inf gives 0.
double thermal_occupation(double beta, const ModeParams& mode = {});
// Inverse of thermal_occupation. n_th = 0 gives +inf.
double inverse_temperature(double n_th, const ModeParams& mode = {});

// |value| = exp(log_mag), value = |value| * exp(i*phase). log_mag = -inf for 0.
struct LogValue {
    double log_mag = -kInf;
    double phase = 0.0;

    cplx value() const { return std::polar(std::exp(log_mag), phase); }
};

// log of sum_k k! C(m,k) C(l,k) x^k for 0 <= m <= l, x >= 0.
double log_kernel_sum(std::int64_t m, std::int64_t l, double x);
// log of L_l(-y) = sum_i C(l,i) y^i / i!, y >= 0.
double log_laguerre_neg(std::int64_t l, double y);

// <m|rho|l>. Any m, l >= 0 (m > l handled by Hermiticity).
LogValue log_matrix_element(std::int64_t m, std::int64_t l, const CoherentThermalParams& s);
cplx matrix_element(std::int64_t m, std::int64_t l, const CoherentThermalParams& s);

// <l|rho|l> through the Laguerre form.
double log_diagonal_element(std::int64_t l, const CoherentThermalParams& s);
double diagonal_element(std::int64_t l, const CoherentThermalParams& s);

// Photon-number MGF sum_l rho_ll e^{t l} and its first two t-derivatives.
double mgf(double t, const CoherentThermalParams& s);
double log_mgf_derivative(double t, const CoherentThermalParams& s, int k);
// Largest admissible t (exclusive); +inf at n_th = 0.
double mgf_domain_limit(const CoherentThermalParams& s);

struct Moments {
    double mean = 0;
    double second = 0;
    double variance = 0;
};
Moments mgf_moments(const CoherentThermalParams& s);

enum class Side { kLeft, kRight };
enum class Tilt { kFixed, kOptimized };

// Upper bound on sum_{l >= T} rho_ll l^k (right) or sum_{l <= T} rho_ll l^k
// (left), k in {0,1,2}. kFixed uses the fixed tilts ln(1 + 1/(a + n)) and
// -ln(1 + 1/(a - n - 1)); the left one throws FallbackRequired when a <= n + 1.
double chernoff_tail_bound(const CoherentThermalParams& s, double T, Side side, int k,
                           Tilt tilt = Tilt::kFixed);

// Exact finite sum of rho_ll l^k over 0 <= l <= T.
double exact_left_sum(const CoherentThermalParams& s, std::int64_t T, int k);

struct TruncationBudget {
    double R = 10.0;
    // When > 0, R is grown until every tail bound is below this.
    double epsilon_target = 0.0;
    std::size_t max_dim = 1u << 22;

    static TruncationBudget defaults(const CoherentThermalParams& s);
};

// Matrix elements on a window [l_min, l_min + dim) with certified tails.
struct FockBand {
    CoherentThermalParams state{};
    double R = 0.0;
    std::int64_t l_min = 0;
    std::int64_t dim = 0;
    std::vector<double> diag;
    // rho_{l,l+1} for l in the window (last one couples to l_max + 1).
    std::vector<double> off_log_mag;
    std::vector<double> off_phase;
    // Upper bounds on sum over l outside the window of rho_ll l^k, k = 0,1,2.
    std::array<double, 3> tail_bounds{};
    std::array<double, 3> left_tail{};
    std::array<double, 3> right_tail{};

    std::int64_t l_max() const { return l_min + dim - 1; }
    bool contains(std::int64_t l) const { return l >= l_min && l <= l_max(); }
    double rho(std::int64_t l) const { return contains(l) ? diag[l - l_min] : 0.0; }
    cplx offdiag(std::int64_t l) const;
    double offdiag_abs(std::int64_t l) const;
};

// Half-width scale used for windows: sqrt(1 + 2n) |alpha|, floored by the
// thermal spread sqrt(n(n + 1)) so that alpha = 0 still gets a window.
double window_sigma(const CoherentThermalParams& s);

FockBand typical_window(const CoherentThermalParams& s, const TruncationBudget& budget);
inline FockBand typical_window(const CoherentThermalParams& s) {
    return typical_window(s, TruncationBudget::defaults(s));
}

// <m|D(alpha)|n> via associated Laguerre polynomials. Test oracle.
cplx displacement_element(std::int64_t m, std::int64_t n, cplx alpha);

}  // namespace ctd

#endif  // CTD_FOCK_H_
