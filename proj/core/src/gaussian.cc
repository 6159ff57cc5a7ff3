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

#include "ctd/gaussian.h"

#include <cmath>

namespace ctd {
namespace {

void same_mode(const CoherentThermalParams& a, const CoherentThermalParams& b) {
    if (a.mode.omega != b.mode.omega) throw DomainError("modes have different frequencies");
}

}  // namespace

bool GaussianPIChannel::feasible(double tol) const {
    return added_noise + tol >= feasible_noise(std::abs(gain));
}

double ct_fidelity(const CoherentThermalParams& s, cplx target) {
    s.validate();
    const double z = 1.0 + s.n_th;
    return std::exp(-std::norm(target - s.alpha) / z) / z;
}

double ct_infidelity(const CoherentThermalParams& s, cplx target) {
    s.validate();
    const double z = 1.0 + s.n_th;
    const double e = -std::norm(target - s.alpha) / z;
    // 1 - e^e/z = (z - 1 - expm1(e)) / z
    return (s.n_th - std::expm1(e)) / z;
}

double mean_energy(const CoherentThermalParams& s) {
    s.validate();
    return s.mode.omega * (s.n_th + std::norm(s.alpha));
}

double feasible_noise(double gain_magnitude) {
    if (!(gain_magnitude >= 0)) throw DomainError("gain magnitude must be nonnegative");
    return std::abs(gain_magnitude * gain_magnitude - 1.0);
}

CoherentThermalParams apply_gaussian_pi(const GaussianPIChannel& ch, const CoherentThermalParams& s) {
    s.validate();
    if (!ch.feasible()) {
        throw ConstraintError("added noise below the quantum limit |A|^2 - 1");
    }
    const double g2 = std::norm(ch.gain);
    CoherentThermalParams out = s;
    out.n_th = std::max(0.0, g2 * s.n_th + 0.5 * (g2 + ch.added_noise - 1.0));
    out.alpha = ch.gain * s.alpha;
    return out;
}

GaussianPIChannel compose(const GaussianPIChannel& second, const GaussianPIChannel& first) {
    return {second.gain * first.gain, std::norm(second.gain) * first.added_noise + second.added_noise};
}

CoherentThermalParams beam_split(const CoherentThermalParams& s1, const CoherentThermalParams& s2,
                                 const BeamSplitter& bs) {
    s1.validate();
    s2.validate();
    same_mode(s1, s2);
    if (std::abs(std::norm(bs.t) + std::norm(bs.r) - 1.0) > 1e-12) {
        throw ConstraintError("beam splitter needs |t|^2 + |r|^2 = 1");
    }
    CoherentThermalParams out = s1;
    out.n_th = std::norm(bs.t) * s1.n_th + std::norm(bs.r) * s2.n_th;
    out.alpha = bs.t * s1.alpha + bs.r * s2.alpha;
    return out;
}

CoherentThermalParams passive_mix(const std::vector<CoherentThermalParams>& states,
                                  const PassiveMixer& mixer) {
    if (states.empty() || states.size() != mixer.coeffs.size()) {
        throw ConstraintError("mixer needs one coefficient per input mode");
    }
    double norm = 0;
    for (cplx c : mixer.coeffs) norm += std::norm(c);
    if (std::abs(norm - 1.0) > 1e-12) throw ConstraintError("mixer coefficients must be normalized");
    CoherentThermalParams out = states[0];
    out.n_th = 0;
    out.alpha = 0;
    for (std::size_t j = 0; j < states.size(); ++j) {
        states[j].validate();
        same_mode(states[0], states[j]);
        out.n_th += std::norm(mixer.coeffs[j]) * states[j].n_th;
        out.alpha += mixer.coeffs[j] * states[j].alpha;
    }
    return out;
}

CoherentThermalParams concentrate(const CoherentThermalParams& s, long long n) {
    if (n < 1) throw DomainError("copy count must be >= 1");
    CoherentThermalParams out = s;
    out.alpha = s.alpha * std::sqrt(static_cast<double>(n));
    return out;
}

CoherentThermalParams dilute(const CoherentThermalParams& s, long long r) {
    if (r < 1) throw DomainError("copy count must be >= 1");
    CoherentThermalParams out = s;
    out.alpha = s.alpha / std::sqrt(static_cast<double>(r));
    return out;
}

ProtocolResult gauss_protocol_first(const CoherentThermalParams& s, long long n, double ancilla_n_th) {
    if (n < 1) throw DomainError("copy count must be >= 1");
    if (!(ancilla_n_th >= 0)) throw DomainError("ancilla n_th must be nonnegative");
    const CoherentThermalParams c = concentrate(s, n);
    ProtocolResult res;
    if (n == 1) {
        res.output = s;
    } else {
        const double cos_t = 1.0 / std::sqrt(static_cast<double>(n));
        const double sin_t = std::sqrt(1.0 - 1.0 / static_cast<double>(n));
        CoherentThermalParams anc = s;
        anc.n_th = ancilla_n_th;
        anc.alpha = 0;
        res.output = beam_split(c, anc, BeamSplitter{cos_t, sin_t});
        res.output.alpha = s.alpha;  // cos(theta) sqrt(n) alpha, without rounding
    }
    res.fidelity = ct_fidelity(res.output, s.alpha);
    res.infidelity = ct_infidelity(res.output, s.alpha);
    return res;
}

SequentialResult gauss_protocol_second(const CoherentThermalParams& s, long long n) {
    s.validate();
    if (n < 1) throw DomainError("copy count must be >= 1");
    const double dn = static_cast<double>(n);
    const double w = 1.0 / (dn * dn);
    SequentialResult res;
    res.steps.reserve(static_cast<std::size_t>(n) + 1);
    double nj = 0.0;
    res.steps.push_back({0, 0.0, 0.0});
    for (long long j = 1; j <= n; ++j) {
        nj = (1.0 - w) * nj + w * s.n_th;
        res.steps.push_back({j, nj, std::sqrt(static_cast<double>(j) / dn) * s.alpha});
    }
    CoherentThermalParams out = s;
    out.n_th = nj;
    res.fidelity = ct_fidelity(out, s.alpha);
    res.infidelity = ct_infidelity(out, s.alpha);
    return res;
}

double gaussian_output_fidelity(double x, double y, long long n, const CoherentThermalParams& s) {
    GaussianPIChannel ch{x, y};
    return ct_fidelity(apply_gaussian_pi(ch, concentrate(s, n)), s.alpha);
}

}  // namespace ctd
