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


#include "ops.h"

#include <cmath>

#include "config.h"
#include "ctd/asymptotics.h"
#include "ctd/distill.h"
#include "ctd/fock.h"
#include "ctd/gaussian.h"
#include "ctd/metrics.h"
#include "ctd/mp.h"
#include "ctd/types.h"

namespace ctd::tools {

namespace {

using Args = std::vector<double>;

constexpr double kMaxKrausLevels = 2e5;

long long as_count(double v, const char* what) {
    if (!(v >= 1) || v > 9.0e15 || v != std::floor(v)) {
        throw ConfigError(std::string(what) + " must be a positive integer");
    }
    return static_cast<long long>(v);
}

std::int64_t as_level(double v, const char* what) {
    if (!(v >= 0) || v > 9.0e15 || v != std::floor(v)) {
        throw ConfigError(std::string(what) + " must be a nonnegative integer");
    }
    return static_cast<std::int64_t>(v);
}

FockBand band(double n, double a, double eps = 1e-16) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

std::vector<OpSpec> build() {
    std::vector<OpSpec> ops;
    ops.push_back({"delta", {"n_th"}, {"opt", "gauss", "mp", "heterodyne"},
                   "infidelity factors n(1-F) of each protocol family", [](const Args& a) -> Args {
                       return {delta_factor(DeltaKind::kOpt, a[0]), delta_factor(DeltaKind::kGauss, a[0]),
                               delta_factor(DeltaKind::kMp, a[0]), delta_factor(DeltaKind::kHeterodyne, a[0])};
                   }});
    ops.push_back({"occupation", {"beta", "omega"}, {"n_th"}, "thermal occupation 1/(e^(beta omega) - 1)",
                   [](const Args& a) -> Args { return {thermal_occupation(a[0], ModeParams{a[1]})}; }});
    ops.push_back({"matrix-element", {"m", "l", "n_th", "alpha"}, {"re", "im"},
                   "<m|rho(n_th, alpha)|l> from the log-domain Laguerre form", [](const Args& a) -> Args {
                       const cplx v = matrix_element(as_level(a[0], "m"), as_level(a[1], "l"), make_state(a[2], a[3]));
                       return {v.real(), v.imag()};
                   }});
    ops.push_back({"moments", {"n_th", "alpha"}, {"mean", "second", "variance"},
                   "photon-number moments from the generating function", [](const Args& a) -> Args {
                       const Moments m = mgf_moments(make_state(a[0], a[1]));
                       return {m.mean, m.second, m.variance};
                   }});
    ops.push_back({"window", {"n_th", "alpha", "R"}, {"l_min", "l_max", "tail0", "tail1", "tail2"},
                   "typical Fock window of half-width R sigma with certified tail bounds", [](const Args& a) -> Args {
                       const auto s = make_state(a[0], a[1]);
                       TruncationBudget b = TruncationBudget::defaults(s);
                       b.R = a[2];
                       const FockBand w = typical_window(s, b);
                       return {static_cast<double>(w.l_min), static_cast<double>(w.l_max()), w.tail_bounds[0],
                               w.tail_bounds[1], w.tail_bounds[2]};
                   }});
    ops.push_back({"ct-fidelity", {"n_th", "alpha", "target"}, {"fidelity"},
                   "<target|rho(n_th, alpha)|target>",
                   [](const Args& a) -> Args { return {ct_fidelity(make_state(a[0], a[1]), a[2])}; }});
    ops.push_back({"gauss-first", {"n_th", "alpha", "n"}, {"fidelity", "n_infidelity"},
                   "concentrate n copies, then attenuate with a vacuum ancilla", [](const Args& a) -> Args {
                       const long long n = as_count(a[2], "n");
                       const auto r = gauss_protocol_first(make_state(a[0], a[1]), n, 0.0);
                       return {r.fidelity, static_cast<double>(n) * r.infidelity};
                   }});
    ops.push_back({"gauss-second", {"n_th", "alpha", "n"}, {"fidelity", "n_infidelity"},
                   "sequential beam-splitter realization", [](const Args& a) -> Args {
                       const long long n = as_count(a[2], "n");
                       const auto r = gauss_protocol_second(make_state(a[0], a[1]), n);
                       return {r.fidelity, static_cast<double>(n) * r.infidelity};
                   }});
    ops.push_back({"coefficient", {"l", "n_th", "alpha"}, {"c_sq", "approx", "upper"},
                   "|c_l|^2 of the optimal Kraus channel, its expansion and upper bound", [](const Args& a) -> Args {
                       const auto s = make_state(a[1], a[2]);
                       const std::int64_t l = as_level(a[0], "l");
                       return {optimal_coefficient_sq(l, s), c_l_sq_approx({l, s}), c_l_upper(l, s)};
                   }});
    ops.push_back({"distill", {"n_th", "gamma_in", "gamma_out", "L"}, {"infidelity", "scaled", "scaled_lo", "scaled_hi"},
                   "optimal Kraus channel rho(n_th, gamma_in) -> |gamma_out>; scaled = gamma_in^2/gamma_out^2 (1-F)",
                   [](const Args& a) -> Args {
                       if (a[1] * a[1] > kMaxKrausLevels || a[3] > kMaxKrausLevels) {
                           throw ResourceError("Kraus levels above the ceiling of 2e5");
                       }
                       const FockBand b = band(a[0], a[1], 1e-20);
                       const auto L = std::max<std::int64_t>(as_level(a[3], "L"), b.l_max() + 1);
                       const KrausDistiller d = make_optimal_distiller(b, a[2], L);
                       const Infidelity inf = output_infidelity(d, b, true);
                       const double k = a[1] * a[1] / (a[2] * a[2]);
                       return {inf.value, k * inf.value, k * inf.lo, k * inf.hi};
                   }});
    ops.push_back({"forbidden", {"n_th", "gamma_in", "gamma_out"}, {"scaled"},
                   "smallest scaled infidelity allowed by purity-of-coherence monotonicity", [](const Args& a) -> Args {
                       const double P = purity_of_coherence(make_state(a[0], a[1]));
                       return {a[1] * a[1] / (a[2] * a[2]) * purity_forbidden_infidelity(P, a[2] * a[2])};
                   }});
    ops.push_back({"big-e", {"n_th", "gamma"}, {"E", "leading", "two_term"},
                   "E = sum rho_ll (|c_l|^2 - 1) and its asymptotic forms", [](const Args& a) -> Args {
                       const auto s = make_state(a[0], a[1]);
                       return {big_e(band(a[0], a[1], 1e-20)).value, e_leading(s), e_two_term(s)};
                   }});
    ops.push_back({"theorem1", {"n", "n_th", "alpha"}, {"B", "bound", "lo", "hi"},
                   "divide-and-distill bound on n(1-F) with B = ceil(n^(3/4)) batches", [](const Args& a) -> Args {
                       const long long n = as_count(a[0], "n");
                       const auto r = divide_and_distill_bound(n, make_state(a[1], a[2]), batch_count(n));
                       return {static_cast<double>(r.B), r.bound, r.lo, r.hi};
                   }});
    ops.push_back({"metrics", {"n_th", "alpha"}, {"sld", "wigner_yanase", "kubo_mori", "geometric", "rld"},
                   "monotone metrics along time translation", [](const Args& a) -> Args {
                       const auto s = make_state(a[0], a[1]);
                       return {metric_thermal(MonotoneFunction::sld(), s), metric_thermal(wigner_yanase(), s),
                               metric_thermal(kubo_mori(), s), metric_thermal(geometric_mean(), s),
                               metric_thermal(MonotoneFunction::rld(), s)};
                   }});
    ops.push_back({"copies", {"n_th_in", "alpha_in", "n_th_out", "alpha_out"},
                   {"f_ratio", "p_ratio", "mp_ratio", "max_ratio"}, "lower bounds on copies needed per output",
                   [](const Args& a) -> Args {
                       const CopyBounds c = copies_lower_bound(make_state(a[0], a[1]), make_state(a[2], a[3]));
                       return {c.f_ratio, c.p_ratio, c.mp_ratio, c.max_ratio};
                   }});
    ops.push_back({"canonical", {"n_th", "alpha", "target"}, {"f1", "bound", "infidelity", "truncation"},
                   "canonical phase measure-and-prepare: F1, 2 target^2 (1 - F1) and the exact infidelity",
                   [](const Args& a) -> Args {
                       const FockBand b = band(a[0], a[1]);
                       const PhaseFidelity f = canonical_fidelity_exact(b, a[2]);
                       return {canonical_f1(b).value, canonical_infidelity_bound(b, a[2]), f.infidelity, f.truncation};
                   }});
    ops.push_back({"heterodyne", {"n", "n_th"}, {"fidelity", "n_infidelity"}, "heterodyne measure-and-prepare",
                   [](const Args& a) -> Args {
                       const long long n = as_count(a[0], "n");
                       return {heterodyne_fidelity(n, a[1]), static_cast<double>(n) * heterodyne_infidelity(n, a[1])};
                   }});
    ops.push_back({"a-coeffs", {"n_th"}, {"a0", "a1", "a2"}, "coefficients of |c_l|^2 expanded around l = alpha^2",
                   [](const Args& a) -> Args {
                       const ACoefficients c = a_coefficients(a[0]);
                       return {c.a0, c.a1, c.a2};
                   }});
    ops.push_back({"rho-approx", {"l", "n_th", "alpha"}, {"exact", "expansion", "edgeworth"},
                   "rho_ll exactly, from the large-amplitude expansion, and from Edgeworth", [](const Args& a) -> Args {
                       const auto s = make_state(a[1], a[2]);
                       const std::int64_t l = as_level(a[0], "l");
                       return {diagonal_element(l, s), rho_ll_approx({l, s}), edgeworth_approx(l, s)};
                   }});
    ops.push_back({"cumulants", {"n_th", "alpha"}, {"k3", "k4"}, "third and fourth photon-number cumulants",
                   [](const Args& a) -> Args {
                       const Cumulants c = cumulants(make_state(a[0], a[1]));
                       return {c.k3, c.k4};
                   }});
    ops.push_back({"channel-moments", {"gamma_in", "gamma_out", "n_th"}, {"bias", "excess", "regime_ok"},
                   "predicted output bias and excess energy of the optimal channel", [](const Args& a) -> Args {
                       const auto p = predicted_channel_moments(a[0], a[1], a[2]);
                       return {p.bias, p.excess, p.regime_ok ? 1.0 : 0.0};
                   }});
    return ops;
}

}  // namespace

const std::vector<OpSpec>& op_catalog() {
    static const std::vector<OpSpec> ops = build();
    return ops;
}

const OpSpec& find_op(const std::string& name) {
    for (const auto& op : op_catalog()) {
        if (op.name == name) return op;
    }
    throw ConfigError("unknown operation '" + name + "' (see `ctd info`)");
}

}  // namespace ctd::tools
