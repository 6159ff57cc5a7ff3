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

#ifndef CTD_DISTILL_H_
#define CTD_DISTILL_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "ctd/fock.h"

namespace ctd {

// Kraus channel onto span{|0>,|1>}:
//   K_l = (1 + |c_l|^2 g^2)^{-1/2} |0><l|
//       + c_{l+1} g (1 + |c_{l+1}|^2 g^2)^{-1/2} |1><l+1|,   g = gamma_out.
// c_0 = 0 and c_l = 0 for l > L.
struct KrausDistiller {
    double gamma_in = 0;
    double gamma_out = 0;
    double n_th = 0;
    std::vector<cplx> c;  // c[0..L]
    // Coefficients are the ratio rho_{l-1,l-1}/rho_{l-1,l} of the input; enables
    // the (1+n)^2 l/gamma_in^2 bound for levels outside the window.
    bool optimal = false;
    double rotation = 0;  // phase removed from the input before construction

    std::int64_t L() const { return static_cast<std::int64_t>(c.size()) - 1; }
    cplx coeff(std::int64_t l) const {
        return l >= 0 && l < static_cast<std::int64_t>(c.size()) ? c[l] : cplx(0.0);
    }
};

// |c_l|^2 of the optimal channel, l >= 1, real positive alpha assumed.
double optimal_coefficient_sq(std::int64_t l, const CoherentThermalParams& s);
// c_l for l = 0..L (L defaults to band.l_max() + 1).
std::vector<cplx> optimal_coefficients(const CoherentThermalParams& s, const FockBand& band,
                                       std::int64_t L = -1);
KrausDistiller make_optimal_distiller(const FockBand& band, double gamma_out, std::int64_t L = -1);

// Output qubit moments. excess = p1 - g^2 and deficit = g - coh are accumulated
// directly; [lo, hi] brackets include everything outside the window.
struct QubitOutput {
    double p1 = 0;
    double coh = 0;
    double excess = 0;
    double excess_lo = 0, excess_hi = 0;
    double deficit = 0;
    double deficit_lo = 0, deficit_hi = 0;
};

QubitOutput apply_distiller(const KrausDistiller& d, const FockBand& input);

struct Infidelity {
    double value = 0;
    double lo = 0, hi = 0;
};

// 1 - <target|tau|target>. exact_target uses the coherent state |gamma_out>;
// otherwise sqrt(1 - g^2)|0> + g|1>.
Infidelity output_infidelity(const KrausDistiller& d, const FockBand& input, bool exact_target);
double output_fidelity(const KrausDistiller& d, const FockBand& input, bool exact_target);

struct BigE {
    double value = 0;  // window sum
    double lo = 0, hi = 0;
};
BigE big_e(const FockBand& band);

double completeness_residual(const KrausDistiller& d, std::int64_t dim);
Eigen::Matrix2cd apply_dense(const KrausDistiller& d, const Eigen::MatrixXcd& rho);
double covariance_residual(const KrausDistiller& d, const Eigen::MatrixXcd& rho, double theta);

// (second - |first|^2) + |first - target|^2.
double infidelity_bound_from_moments(double second, cplx first, cplx target);

enum class BatchRounding { kCeil, kFloor };
long long batch_count(long long n, BatchRounding rounding = BatchRounding::kCeil);

struct DivideDistillResult {
    double bound = 0;  // n [ (p1 - coh^2) + B (g_out - coh)^2 ]
    double lo = 0, hi = 0;
    double gamma_in = 0, gamma_out = 0;
    double variance = 0, bias = 0;
    long long B = 0;
    bool regime_ok = true;
    std::vector<std::string> warnings;
};
DivideDistillResult divide_and_distill_bound(long long n, const CoherentThermalParams& s, long long B);

struct ScalingReport {
    double variance_ratio = 0;  // variance / (g_out^2 / g_in^2)
    double bias_ratio = 0;      // |bias| / (g_out^2 / g_in)
    bool pass = false;
};
ScalingReport check_scaling_requirements(double variance, double bias, double gamma_in,
                                         double gamma_out, double limit = 10.0);

// Smaller root of V((1 - d)^2/d - 1) = P.
double purity_forbidden_infidelity(double P_in, double V_target);

// (|alpha'|^2/|alpha|^2) delta_opt(n_th).
double amplify_attenuate_factor(const CoherentThermalParams& s, cplx target);

}  // namespace ctd

#endif  // CTD_DISTILL_H_
