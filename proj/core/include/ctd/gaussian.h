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

#ifndef CTD_GAUSSIAN_H_
#define CTD_GAUSSIAN_H_

#include <vector>

#include "ctd/types.h"

namespace ctd {

// Phase-insensitive Gaussian channel: displacement gets multiplied by gain,
// covariance (vacuum = 1) maps to |gain|^2 V + added_noise.
struct GaussianPIChannel {
    cplx gain = 1.0;
    double added_noise = 0.0;

    bool feasible(double tol = 1e-12) const;
};

struct BeamSplitter {
    cplx t = 1.0;
    cplx r = 0.0;
};

struct PassiveMixer {
    std::vector<cplx> coeffs;
};

// Fidelity of rho(n', alpha') with the coherent state |target>.
double ct_fidelity(const CoherentThermalParams& s, cplx target);
double ct_infidelity(const CoherentThermalParams& s, cplx target);
double mean_energy(const CoherentThermalParams& s);

double feasible_noise(double gain_magnitude);
CoherentThermalParams apply_gaussian_pi(const GaussianPIChannel& ch, const CoherentThermalParams& s);
GaussianPIChannel compose(const GaussianPIChannel& second, const GaussianPIChannel& first);

CoherentThermalParams beam_split(const CoherentThermalParams& s1, const CoherentThermalParams& s2,
                                 const BeamSplitter& bs);
CoherentThermalParams passive_mix(const std::vector<CoherentThermalParams>& states,
                                  const PassiveMixer& mixer);

CoherentThermalParams concentrate(const CoherentThermalParams& s, long long n);
// State of each of the r output copies.
CoherentThermalParams dilute(const CoherentThermalParams& s, long long r);

struct ProtocolResult {
    CoherentThermalParams output;
    double fidelity = 0;
    double infidelity = 0;
};

// Concentrate n copies, then mix with an ancilla at cos(theta) = 1/sqrt(n).
ProtocolResult gauss_protocol_first(const CoherentThermalParams& s, long long n, double ancilla_n_th);

struct TrajectoryStep {
    long long j = 0;
    double n_th = 0;
    cplx alpha = 0.0;
};

struct SequentialResult {
    std::vector<TrajectoryStep> steps;  // j = 0 .. n
    double fidelity = 0;
    double infidelity = 0;
};

// Ancilla starting in vacuum weakly absorbs one copy per step:
// n_j = (1 - 1/n^2) n_{j-1} + n_th/n^2, displacement sqrt(j/n) alpha.
SequentialResult gauss_protocol_second(const CoherentThermalParams& s, long long n);

// Concentrate n copies and apply gain x with noise y; fidelity with |alpha>.
double gaussian_output_fidelity(double x, double y, long long n, const CoherentThermalParams& s);

}  // namespace ctd

#endif  // CTD_GAUSSIAN_H_
