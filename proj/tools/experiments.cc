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


#include "experiments.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ctd/asymptotics.h"
#include "ctd/distill.h"
#include "ctd/fock.h"
#include "ctd/metrics.h"
#include "ctd/numeric.h"
#include "ctd/types.h"
#include "ops.h"
#include "pool.h"

namespace ctd::tools {

namespace {

const std::vector<std::string> kFig2 = {"n_th", "delta_opt", "delta_gauss", "delta_mp"};
const std::vector<std::string> kFig5 = {"n_th",  "gamma_in",  "gamma_out", "L",         "levels",
                                        "value", "value_lo", "value_hi",  "delta_opt", "forbidden"};
const std::vector<std::string> kFig6 = {"n_th", "alpha", "R", "nu1_rel_err", "nu2_rel_err", "nu3_rel_err"};
const std::vector<std::string> kFig7 = {"n_th", "alpha", "sigma", "d0", "d1", "d2", "a0", "a1", "a2",
                                        "err0", "err1", "err2", "order_scale"};
const std::vector<std::string> kEdge = {"n_th", "gamma_in", "l", "exact", "expansion", "edgeworth",
                                        "rel_err_expansion", "rel_err_edgeworth"};
const std::vector<std::string> kThm1 = {"n_th", "alpha", "n", "B", "bound", "bound_lo", "bound_hi",
                                        "delta_opt", "excess"};

constexpr double kMaxKrausLevels = 2e5;

std::string point(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += (s.empty() ? "" : ", ") + std::string(k) + "=" + format_number(v);
    return s;
}

// Reraises library errors with the offending point attached.
template <class F>
auto at_point(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ResourceError& e) {
        throw ResourceError(std::string(e.what()) + " at " + where);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + " at " + where);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(e.what()) + " at " + where);
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string(e.what()) + " at " + where);
    }
}

void guard(const ExperimentConfig& cfg, RunResult& r, bool ok, const std::string& msg) {
    if (ok) return;
    if (!cfg.force) throw ConfigError(msg + " (use --force to run anyway)");
    r.warnings.push_back("forced: " + msg);
}

void require_nonneg(const std::vector<double>& v, const char* key) {
    for (double x : v) {
        if (!(x >= 0)) throw ConfigError(std::string(key) + " values must be nonnegative");
    }
}

void require_pos(const std::vector<double>& v, const char* key) {
    for (double x : v) {
        if (!(x > 0)) throw ConfigError(std::string(key) + " values must be positive");
    }
}

std::string tag(const char* key, double v) { return std::string(key) + "_" + format_number(v); }

FockBand band_for(double n, double a, double eps) {
    const auto s = make_state(n, a);
    TruncationBudget b = TruncationBudget::defaults(s);
    b.epsilon_target = eps;
    return typical_window(s, b);
}

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(std::abs(y[i]) > 0)) continue;
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
        ++n;
    }
    if (n < 2) return NAN;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RunResult fig2(const ExperimentConfig& cfg) {
    RunResult r;
    const auto& grid = cfg.grid("n_th");
    require_nonneg(grid, "n_th");
    Table t{"fig2", kFig2, std::vector<std::vector<double>>(grid.size())};
    parallel_for(grid.size(), cfg.jobs, [&](std::size_t i) {
        const double n = grid[i];
        t.rows[i] = {n, delta_factor(DeltaKind::kOpt, n), delta_factor(DeltaKind::kGauss, n),
                     delta_factor(DeltaKind::kMp, n)};
    });
    double err = 0;
    bool order = true, cross = true;
    for (const auto& row : t.rows) {
        const double n = row[0];
        err = std::max({err, std::abs(row[1] - (n / 2 + n / (4 * n + 2))), std::abs(row[2] - n),
                        std::abs(row[3] - (n / 2 + 0.25))});
        order = order && row[1] <= row[2] && row[1] <= row[3];
        if (n != 0.5) cross = cross && ((row[2] < row[3]) == (n < 0.5));
        if (n == 0.5) cross = cross && row[2] == row[3];
    }
    r.checks.push_back({"closed_forms", err <= 1e-12, err, 1e-12, "max |delta - formula|"});
    r.checks.push_back({"ordering", order, order ? 0.0 : 1.0, 0, "opt <= gauss and opt <= mp"});
    r.checks.push_back({"crossover", cross, cross ? 0.0 : 1.0, 0, "gauss < mp exactly when n_th < 1/2"});
    Plot p{"fig2", "Infidelity factors", "n_th", "n(1-F)", false, false, {}};
    for (int k = 1; k <= 3; ++k) {
        Series s{t.columns[k], {}, {}, false};
        for (const auto& row : t.rows) s.x.push_back(row[0]), s.y.push_back(row[k]);
        p.series.push_back(s);
    }
    r.tables.push_back(std::move(t));
    r.plots.push_back(std::move(p));
    return r;
}

RunResult fig5(const ExperimentConfig& cfg) {
    RunResult r;
    const auto &nths = cfg.grid("n_th"), &gins = cfg.grid("gamma_in"), &gouts = cfg.grid("gamma_out"),
               &Ls = cfg.grid("L");
    require_nonneg(nths, "n_th");
    require_pos(gins, "gamma_in");
    require_pos(gouts, "gamma_out");
    for (double L : Ls) {
        if (!(L >= 1) || L != std::floor(L)) throw ConfigError("L values must be positive integers");
    }
    for (double gi : gins) {
        for (double go : gouts) {
            guard(cfg, r, gi * go <= 0.1,
                  "gamma_in * gamma_out must be <= 0.1 for the strong-input weak-output regime, got " +
                      point({{"gamma_in", gi}, {"gamma_out", go}}));
        }
    }
    struct Job {
        double n, gi, go, L;
    };
    std::vector<Job> jobs;
    for (double n : nths)
        for (double go : gouts)
            for (double L : Ls)
                for (double gi : gins) {
                    // the window is centred on gamma_in^2, so that many levels are needed at least
                    if (L > kMaxKrausLevels || gi * gi > kMaxKrausLevels) {
                        throw ResourceError("Kraus levels above the ceiling of " + format_number(kMaxKrausLevels) + " at " + point({{"n_th", n}, {"gamma_in", gi}, {"L", L}}));
                    }
                    jobs.push_back({n, gi, go, L});
                }
    std::vector<std::vector<double>> rows(jobs.size());
    parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
        const Job j = jobs[i];
        rows[i] = at_point(point({{"n_th", j.n}, {"gamma_in", j.gi}, {"gamma_out", j.go}, {"L", j.L}}), [&] {
            const FockBand band = band_for(j.n, j.gi, 1e-20);
            const auto L = std::max<std::int64_t>(static_cast<std::int64_t>(j.L), band.l_max() + 1);
            if (static_cast<double>(L) > kMaxKrausLevels) {
                throw ResourceError("window needs " + std::to_string(L + 1) + " Kraus levels, ceiling is " +
                                    format_number(kMaxKrausLevels));
            }
            const KrausDistiller d = make_optimal_distiller(band, j.go, L);
            const Infidelity inf = output_infidelity(d, band, true);
            const double k = j.gi * j.gi / (j.go * j.go);
            const double P = purity_of_coherence(make_state(j.n, j.gi));
            return std::vector<double>{j.n, j.gi, j.go, j.L, static_cast<double>(L + 1), k * inf.value, k * inf.lo,
                                       k * inf.hi, delta_factor(DeltaKind::kOpt, j.n),
                                       k * purity_forbidden_infidelity(P, j.go * j.go)};
        });
    });
    double margin = INFINITY;
    for (const auto& row : rows) margin = std::min(margin, row[5] - row[9]);
    r.checks.push_back({"above_forbidden", rows.empty() || margin >= 0, rows.empty() ? 0.0 : margin, 0,
                        "min(value - forbidden)"});
    Plot p{"fig5", "Scaled infidelity of the optimal channel", "gamma_in", "(gamma_in/gamma_out)^2 (1-F)",
           false, false, {}};
    // one curve per (n_th, gamma_out, L)
    const std::size_t per = gins.size();
    for (std::size_t c = 0; per > 0 && c < rows.size() / per; ++c) {
        Table t{"fig5_" + tag("nth", rows[c * per][0]), kFig5, {}};
        if (gouts.size() > 1) t.name += "_" + tag("gout", rows[c * per][2]);
        if (Ls.size() > 1) t.name += "_" + tag("L", rows[c * per][3]);
        std::vector<double> g, gap;
        Series v{t.name.substr(5), {}, {}, false}, f{"forbidden " + t.name.substr(5), {}, {}, true};
        for (std::size_t i = c * per; i < (c + 1) * per; ++i) {
            t.rows.push_back(rows[i]);
            g.push_back(rows[i][1]);
            gap.push_back(rows[i][5] - rows[i][8]);
            v.x.push_back(rows[i][1]), v.y.push_back(rows[i][5]);
            f.x.push_back(rows[i][1]), f.y.push_back(rows[i][9]);
        }
        const std::string key = t.name.substr(5);
        if (per >= 2) {
            const bool shrinks = std::abs(gap.back()) < std::abs(gap.front());
            r.checks.push_back({"gap_shrinks_" + key, shrinks, std::abs(gap.back()), std::abs(gap.front()),
                                "|value - delta_opt| at the largest gamma_in vs the smallest"});
            const std::size_t h = per / 2;
            r.fitted["gap_exponent_" + key] =
                loglog_slope(std::vector<double>(g.begin() + h, g.end()), std::vector<double>(gap.begin() + h, gap.end()));
        }
        r.fitted["gamma_times_gap_" + key] = g.back() * gap.back();
        p.series.push_back(std::move(v));
        p.series.push_back(std::move(f));
        r.tables.push_back(std::move(t));
    }
    r.plots.push_back(std::move(p));
    return r;
}

RunResult fig6(const ExperimentConfig& cfg) {
    RunResult r;
    const auto &nths = cfg.grid("n_th"), &alphas = cfg.grid("alpha"), &Rs = cfg.grid("R");
    require_nonneg(nths, "n_th");
    require_pos(alphas, "alpha");
    require_pos(Rs, "R");
    for (double n : nths)
        for (double a : alphas)
            guard(cfg, r, a >= std::max(1.0, n * n), "expansion needs alpha >= max(1, n_th^2), got " +
                                                         point({{"n_th", n}, {"alpha", a}}));
    struct Job {
        double n, a, R;
    };
    std::vector<Job> jobs;
    for (double n : nths)
        for (double R : Rs)
            for (double a : alphas) {
                const double width = 2 * R * std::sqrt(1 + 2 * n) * a;
                if (width > 5e7) throw ResourceError("window above 5e7 levels at " + point({{"n_th", n}, {"alpha", a}, {"R", R}}));
                jobs.push_back({n, a, R});
            }
    std::vector<std::vector<double>> rows(jobs.size());
    parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
        const Job j = jobs[i];
        rows[i] = at_point(point({{"n_th", j.n}, {"alpha", j.a}, {"R", j.R}}), [&] {
            const auto s = make_state(j.n, j.a);
            const double sig = std::sqrt(1 + 2 * j.n) * j.a;
            const auto lo = static_cast<std::int64_t>(std::max(0.0, std::ceil(j.a * j.a - j.R * sig)));
            const auto hi = static_cast<std::int64_t>(std::floor(j.a * j.a + j.R * sig));
            CompensatedSum o1, o2, o3;
            for (std::int64_t l = lo; l <= hi; ++l) {
                const double dl = static_cast<double>(l);
                const ExpansionPoint pt{l, s};
                const double d = rho_ll_approx(pt), o = rho_offdiag_approx(pt);
                o1 += std::sqrt(dl + 1) * o;
                o2 += dl * d;
                o3 += dl * std::sqrt(dl + 1) * o;
            }
            return std::vector<double>{j.n, j.a, j.R, std::abs(o1.value() / j.a - 1),
                                       std::abs(o2.value() / (j.a * j.a + j.n) - 1),
                                       std::abs(o3.value() / (2 * j.a * j.n + j.a * j.a * j.a) - 1)};
        });
    });
    Plot p{"fig6-moments", "Relative error of moments from the expansion", "alpha", "relative error", true, true, {}};
    const std::size_t per = alphas.size();
    for (std::size_t c = 0; per > 0 && c < rows.size() / per; ++c) {
        Table t{"fig6-moments_" + tag("nth", rows[c * per][0]), kFig6, {}};
        if (Rs.size() > 1) t.name += "_" + tag("R", rows[c * per][2]);
        const std::string key = t.name.substr(13);
        std::vector<double> a, e;
        for (std::size_t i = c * per; i < (c + 1) * per; ++i) {
            t.rows.push_back(rows[i]);
            a.push_back(rows[i][1]);
            e.push_back(std::max({rows[i][3], rows[i][4], rows[i][5]}));
        }
        for (int k = 0; k < 3; ++k) {
            Series s{key + " nu" + std::to_string(k + 1), {}, {}, k == 1};
            for (const auto& row : t.rows) s.x.push_back(row[1]), s.y.push_back(row[3 + k]);
            p.series.push_back(std::move(s));
        }
        if (per >= 2) {
            r.checks.push_back({"error_decreases_" + key, e.back() < e.front(), e.back(), e.front(),
                                "largest moment error at the largest alpha vs the smallest"});
            r.fitted["error_exponent_" + key] = loglog_slope(a, e);
        }
        r.tables.push_back(std::move(t));
    }
    r.plots.push_back(std::move(p));
    return r;
}

RunResult fig7(const ExperimentConfig& cfg) {
    RunResult r;
    const auto &nths = cfg.grid("n_th"), &alphas = cfg.grid("alpha");
    require_nonneg(nths, "n_th");
    require_pos(alphas, "alpha");
    struct Job {
        double n, a;
    };
    std::vector<Job> jobs;
    for (double a : alphas)
        for (double n : nths) {
            guard(cfg, r, a >= std::max(1.0, n * n), "expansion needs alpha >= max(1, n_th^2), got " +
                                                          point({{"n_th", n}, {"alpha", a}}));
            jobs.push_back({n, a});
        }
    std::vector<std::vector<double>> rows(jobs.size());
    parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
        const Job j = jobs[i];
        rows[i] = at_point(point({{"n_th", j.n}, {"alpha", j.a}}), [&] {
            const auto s = make_state(j.n, j.a);
            const auto l0 = static_cast<std::int64_t>(std::llround(j.a * j.a));
            if (l0 < 2) throw ConfigError("alpha^2 must be at least 2");
            const double sig = std::sqrt(1 + 2 * j.n) * j.a;
            const double cm = optimal_coefficient_sq(l0 - 1, s), c0 = optimal_coefficient_sq(l0, s),
                         cp = optimal_coefficient_sq(l0 + 1, s);
            const double d0 = (c0 - 1) * sig * sig, d1 = (cp - cm) / 2 * sig * sig,
                         d2 = -(cp - 2 * c0 + cm) / 2 * std::pow(sig, 4);
            const ACoefficients A = a_coefficients(j.n);
            return std::vector<double>{j.n, j.a, sig, d0, d1, d2, A.a0, A.a1, A.a2, std::abs(d0 - A.a0),
                                       std::abs(d1 - A.a1), std::abs(d2 - A.a2), std::pow(1 + 2 * j.n, 3) / sig};
        });
    });
    Plot p{"fig7-coeffs", "Discrete-derivative estimates of the |c_l|^2 coefficients", "n_th", "coefficient",
           false, false, {}};
    const std::size_t per = nths.size();
    for (std::size_t c = 0; per > 0 && c < rows.size() / per; ++c) {
        Table t{"fig7-coeffs_" + tag("alpha", rows[c * per][1]), kFig7, {}};
        const std::string key = t.name.substr(12);
        double C = 0;
        for (std::size_t i = c * per; i < (c + 1) * per; ++i) {
            t.rows.push_back(rows[i]);
            C = std::max({C, rows[i][9] / rows[i][12], rows[i][10] / rows[i][12], rows[i][11] / rows[i][12]});
        }
        for (int k = 0; k < 3; ++k) {
            Series est{key + " d" + std::to_string(k), {}, {}, false}, ex{key + " A" + std::to_string(k), {}, {}, true};
            for (const auto& row : t.rows) {
                est.x.push_back(row[0]), est.y.push_back(row[3 + k]);
                ex.x.push_back(row[0]), ex.y.push_back(row[6 + k]);
            }
            p.series.push_back(std::move(est));
            p.series.push_back(std::move(ex));
        }
        r.fitted["order_constant_" + key] = C;
        r.checks.push_back({"within_order_" + key, C <= 1.0, C, 1.0,
                            "max |estimate - exact| / ((1+2n)^3/sigma) over the grid"});
        r.tables.push_back(std::move(t));
    }
    r.plots.push_back(std::move(p));
    return r;
}

RunResult edgeworth(const ExperimentConfig& cfg) {
    RunResult r;
    const auto &nths = cfg.grid("n_th"), &gins = cfg.grid("gamma_in"), &Rs = cfg.grid("R");
    require_nonneg(nths, "n_th");
    require_pos(gins, "gamma_in");
    require_pos(Rs, "R");
    if (Rs.size() > 1) throw ConfigError("edgeworth takes a single R");
    const double R = Rs.empty() ? 4.0 : Rs[0];
    Plot p{"edgeworth", "Relative error of rho_ll approximations", "l", "relative error", false, true, {}};
    for (double g : gins) {
        for (double n : nths) {
            guard(cfg, r, g >= std::max(1.0, n * n), "expansion needs gamma_in >= max(1, n_th^2), got " +
                                                         point({{"n_th", n}, {"gamma_in", g}}));
            const auto s = make_state(n, g);
            const double sig = std::sqrt(1 + 2 * n) * g;
            const auto lo = static_cast<std::int64_t>(std::max(0.0, std::ceil(g * g - R * sig)));
            const auto hi = static_cast<std::int64_t>(std::floor(g * g + R * sig));
            if (hi - lo > 10000000) throw ResourceError("window above 1e7 levels at " + point({{"n_th", n}, {"gamma_in", g}}));
            Table t{"edgeworth_" + tag("nth", n) + "_" + tag("gamma", g), kEdge,
                    std::vector<std::vector<double>>(static_cast<std::size_t>(hi - lo + 1))};
            parallel_for(t.rows.size(), cfg.jobs, [&](std::size_t i) {
                const std::int64_t l = lo + static_cast<std::int64_t>(i);
                const double ex = diagonal_element(l, s), ap = rho_ll_approx({l, s}), ed = edgeworth_approx(l, s);
                t.rows[i] = {n, g, static_cast<double>(l), ex, ap, ed, std::abs(ap / ex - 1), std::abs(ed / ex - 1)};
            });
            double e1 = 0, e2 = 0;
            int cnt = 0;
            Series s1{tag("nth", n) + " expansion", {}, {}, false}, s2{tag("nth", n) + " edgeworth", {}, {}, true};
            for (const auto& row : t.rows) {
                s1.x.push_back(row[2]), s1.y.push_back(row[6]);
                s2.x.push_back(row[2]), s2.y.push_back(row[7]);
                if (std::abs(row[2] - g * g) <= 3 * sig) e1 += row[6], e2 += row[7], ++cnt;
            }
            const std::string key = t.name.substr(10);
            if (cnt > 0) {
                r.checks.push_back({"expansion_beats_edgeworth_" + key, e1 < e2, e1 / cnt, e2 / cnt,
                                    "mean relative error within 3 sigma: expansion vs edgeworth"});
            }
            p.series.push_back(std::move(s1));
            p.series.push_back(std::move(s2));
            r.tables.push_back(std::move(t));
        }
    }
    r.plots.push_back(std::move(p));
    return r;
}

RunResult theorem1(const ExperimentConfig& cfg) {
    RunResult r;
    const auto &nths = cfg.grid("n_th"), &alphas = cfg.grid("alpha"), &ns = cfg.grid("n");
    require_nonneg(nths, "n_th");
    require_pos(alphas, "alpha");
    for (double n : ns) {
        if (!(n >= 1) || n != std::floor(n) || n > 1e15) throw ConfigError("n values must be integers in [1, 1e15]");
    }
    struct Job {
        double nth, a, n;
    };
    std::vector<Job> jobs;
    for (double nth : nths)
        for (double a : alphas)
            for (double n : ns) jobs.push_back({nth, a, n});
    std::vector<std::vector<double>> rows(jobs.size());
    std::vector<std::vector<std::string>> warn(jobs.size());
    parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
        const Job j = jobs[i];
        rows[i] = at_point(point({{"n_th", j.nth}, {"alpha", j.a}, {"n", j.n}}), [&] {
            const auto n = static_cast<long long>(j.n);
            const auto res = divide_and_distill_bound(n, make_state(j.nth, j.a), batch_count(n));
            for (const auto& w : res.warnings) warn[i].push_back(w + " at " + point({{"n_th", j.nth}, {"alpha", j.a}, {"n", j.n}}));
            const double d = delta_factor(DeltaKind::kOpt, j.nth);
            return std::vector<double>{j.nth, j.a, j.n, static_cast<double>(res.B), res.bound, res.lo, res.hi, d,
                                       res.bound - d};
        });
    });
    for (const auto& w : warn) r.warnings.insert(r.warnings.end(), w.begin(), w.end());
    Plot p{"theorem1-sweep", "Divide-and-distill excess over delta_opt", "n", "n(1-F) - delta_opt", true, true, {}};
    const std::size_t per = ns.size();
    for (std::size_t c = 0; per > 0 && c < rows.size() / per; ++c) {
        Table t{"theorem1-sweep_" + tag("nth", rows[c * per][0]) + "_" + tag("alpha", rows[c * per][1]), kThm1, {}};
        const std::string key = t.name.substr(15);
        Series s{key, {}, {}, false};
        std::vector<double> n, ex;
        bool mono = true, above = true;
        for (std::size_t i = c * per; i < (c + 1) * per; ++i) {
            t.rows.push_back(rows[i]);
            n.push_back(rows[i][2]), ex.push_back(rows[i][8]);
            s.x.push_back(rows[i][2]), s.y.push_back(rows[i][8]);
            above = above && rows[i][8] > 0;
            if (i > c * per) mono = mono && rows[i][4] < rows[i - 1][4];
        }
        r.checks.push_back({"above_delta_opt_" + key, above, *std::min_element(ex.begin(), ex.end()), 0,
                            "min(bound - delta_opt)"});
        if (per >= 2) {
            r.checks.push_back({"monotone_" + key, mono, mono ? 0.0 : 1.0, 0, "bound decreases along the n grid"});
            r.checks.push_back({"converges_" + key, ex.back() < ex.front(), ex.back(), ex.front(),
                                "excess at the largest n vs the smallest"});
            r.fitted["excess_exponent_" + key] = loglog_slope(n, ex);
        }
        p.series.push_back(std::move(s));
        r.tables.push_back(std::move(t));
    }
    r.plots.push_back(std::move(p));
    return r;
}

RunResult custom(const ExperimentConfig& cfg) {
    RunResult r;
    const OpSpec& op = find_op(cfg.op);
    std::vector<const std::vector<double>*> axes;
    std::size_t total = 1;
    for (const auto& a : op.args) {
        axes.push_back(&cfg.grid(a));
        total *= axes.back()->size();
    }
    Table t{"custom_" + op.name, op.args, std::vector<std::vector<double>>(total)};
    t.columns.insert(t.columns.end(), op.outputs.begin(), op.outputs.end());
    parallel_for(total, cfg.jobs, [&](std::size_t i) {
        // last argument varies fastest
        std::vector<double> args(axes.size());
        std::size_t rem = i;
        for (std::size_t k = axes.size(); k-- > 0;) {
            args[k] = (*axes[k])[rem % axes[k]->size()];
            rem /= axes[k]->size();
        }
        std::string where = op.name + "(";
        for (std::size_t k = 0; k < args.size(); ++k) where += (k ? ", " : "") + op.args[k] + "=" + format_number(args[k]);
        where += ")";
        const std::vector<double> out = at_point(where, [&] { return op.fn(args); });
        t.rows[i] = args;
        t.rows[i].insert(t.rows[i].end(), out.begin(), out.end());
    });
    r.tables.push_back(std::move(t));
    return r;
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_catalog() {
    static const std::vector<ExperimentInfo> cat = {
        {"fig2", "infidelity factors delta_opt, delta_gauss, delta_mp over an n_th grid", kFig2},
        {"fig5", "optimal Kraus channel in the strong-input weak-output regime, one CSV per (n_th, gamma_out, L)", kFig5},
        {"fig6-moments", "relative error of the three moment sums built from the expansion, one CSV per n_th", kFig6},
        {"fig7-coeffs", "discrete derivatives of |c_l|^2 at l = alpha^2 vs the exact coefficients, one CSV per alpha", kFig7},
        {"edgeworth", "rho_ll from the expansion and from Edgeworth vs exact, one CSV per (n_th, gamma_in)", kEdge},
        {"theorem1-sweep", "divide-and-distill bound with B = ceil(n^(3/4)), one CSV per (n_th, alpha)", kThm1},
        {"custom", "any operation from the catalog over the cartesian product of its argument grids", {}},
    };
    return cat;
}

RunResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
    const std::string& e = cfg.experiment;
    if (e == "fig2") return fig2(cfg);
    if (e == "fig5") return fig5(cfg);
    if (e == "fig6-moments") return fig6(cfg);
    if (e == "fig7-coeffs") return fig7(cfg);
    if (e == "edgeworth") return edgeworth(cfg);
    if (e == "theorem1-sweep") return theorem1(cfg);
    if (e == "custom") return custom(cfg);
    throw ConfigError("unknown experiment '" + e + "'");
}

}  // namespace ctd::tools
