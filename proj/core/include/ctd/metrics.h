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

#ifndef CTD_METRICS_H_
#define CTD_METRICS_H_

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ctd/types.h"

namespace ctd {

// Operator monotone, self-inverse f(t) = t f(1/t), f(1) = 1.
class MonotoneFunction {
 public:
    enum class Kind { kSld, kRld, kCustom };

    static MonotoneFunction sld();
    static MonotoneFunction rld();
    // Validates normalization and self-inversion on a log grid over [1e-6, 1e6].
    static MonotoneFunction custom(std::string name, std::function<double(double)> f);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    double operator()(double t) const { return f_(t); }
    // lim_{t -> 0+} f(t); 0 for RLD.
    double at_zero() const;

 private:
    MonotoneFunction(Kind k, std::string name, std::function<double(double)> f)
        : kind_(k), name_(std::move(name)), f_(std::move(f)) {}
    Kind kind_;
    std::string name_;
    std::function<double(double)> f_;
};

// A few standard members between the extremes, for tests and the CLI.
MonotoneFunction wigner_yanase();
MonotoneFunction kubo_mori();
MonotoneFunction geometric_mean();

// 2 w^2 |alpha|^2 sum_i (i+1) p_{i+1} (p_i/p_{i+1} - 1)^2 / f(p_i/p_{i+1}).
double metric_displaced_incoherent(const MonotoneFunction& f, const std::vector<double>& probs,
                                   cplx alpha, const ModeParams& mode = {});
// Closed form on thermal probabilities: w^2 |alpha|^2 g^f(n_th).
double metric_thermal(const MonotoneFunction& f, const CoherentThermalParams& s);

double qfi_sld(const CoherentThermalParams& s);
double purity_of_coherence(const CoherentThermalParams& s);
// Energy variance of the coherent state |alpha>: w^2 |alpha|^2.
double coherent_variance(cplx alpha, const ModeParams& mode = {});

struct SpectralDecomposition {
    Eigen::VectorXd probs;
    Eigen::MatrixXcd H_elements;  // <psi_k|H|psi_l>

    // Eigendecomposition of rho with H = w a^dag a on the same truncated basis.
    static SpectralDecomposition from_density(const Eigen::MatrixXcd& rho, const ModeParams& mode = {});
};

// Eigenvalues below this times the largest are treated as exact zeros.
inline constexpr double kSpectralZero = 1e-14;

double general_F_H(const SpectralDecomposition& spec);
double general_P_H(const SpectralDecomposition& spec);

// (1 - 2p)^2 / (p (1 - p)) V.
double qubit_purity(double p, double V);

struct CopyBounds {
    double f_ratio = 0;   // F_H(target)/F_H(input)
    double p_ratio = 0;   // P_H(target)/P_H(input)
    double mp_ratio = 0;  // F_H(target)/P_H(input)
    double max_ratio = 0;
};
CopyBounds copies_lower_bound(const CoherentThermalParams& input, const CoherentThermalParams& target);

// g^f(s) = 2 / (s f(1 + 1/s)).
double g_metric(const MonotoneFunction& f, double s);
// sum_j g^f(n_j) - n g^f(mean n_j).
double concentration_metric_gap(const MonotoneFunction& f, const std::vector<double>& occupations);

// Mass above M is moved to level M.
std::vector<double> variance_truncate(const std::vector<double>& dist, std::size_t M);
double distribution_variance(const std::vector<double>& dist);

}  // namespace ctd

#endif  // CTD_METRICS_H_
