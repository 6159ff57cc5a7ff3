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

#ifndef CTD_TYPES_H_
#define CTD_TYPES_H_

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace ctd {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters violate a physical constraint (noise floor, normalization, ...).
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a closed-form bound is not applicable and the caller must sum
// exactly instead.
struct FallbackRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModeParams {
    double omega = 1.0;

    void validate() const {
        if (!(omega > 0) || !std::isfinite(omega)) {
            throw DomainError("mode frequency must be positive and finite");
        }
    }
};

// rho(beta, alpha): thermal state with mean occupation n_th displaced by alpha.
struct CoherentThermalParams {
    double n_th = 0.0;
    cplx alpha = 0.0;
    ModeParams mode{};

    double amplitude() const { return std::abs(alpha); }
    double phase() const { return alpha == cplx(0.0) ? 0.0 : std::arg(alpha); }

    void validate() const {
        mode.validate();
        if (!(n_th >= 0) || !std::isfinite(n_th)) {
            throw DomainError("n_th must be nonnegative and finite");
        }
        if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
            throw DomainError("alpha must be finite");
        }
    }
};

inline CoherentThermalParams make_state(double n_th, cplx alpha, double omega = 1.0) {
    CoherentThermalParams s{n_th, alpha, ModeParams{omega}};
    s.validate();
    return s;
}

}  // namespace ctd

#endif  // CTD_TYPES_H_
