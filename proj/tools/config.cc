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


#include "config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace ctd::tools {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
    const std::string t = trim(text);
    double v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v)) {
        throw ConfigError("not a finite number: '" + t + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& text) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ConfigError("not an unsigned integer: '" + t + "'");
    return v;
}

bool parse_bool(const std::string& text) {
    const std::string t = trim(text);
    if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
    if (t == "0" || t == "false" || t == "no" || t == "off") return false;
    throw ConfigError("not a boolean: '" + t + "'");
}

}  // namespace

const std::vector<double>& ExperimentConfig::grid(const std::string& key) const {
    const auto it = grids.find(key);
    if (it == grids.end()) throw ConfigError("experiment '" + experiment + "' needs grid '" + key + "'");
    return it->second;
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("experiment", experiment);
    if (!op.empty()) out.emplace_back("op", op);
    for (const auto& [k, v] : grids) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
        out.emplace_back(k, s);
    }
    out.emplace_back("seed", std::to_string(seed));
    out.emplace_back("force", force ? "true" : "false");
    return out;
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"fig2",         "fig5",    "fig6-moments",  "fig7-coeffs",
                                                   "edgeworth",    "theorem1-sweep", "custom"};
    return names;
}

bool is_experiment(const std::string& name) {
    const auto& n = experiment_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

ExperimentConfig default_config(const std::string& experiment) {
    if (!is_experiment(experiment)) throw ConfigError("unknown experiment '" + experiment + "'");
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "fig2") {
        c.grids["n_th"] = parse_list("0:3:0.05");
    } else if (experiment == "fig5") {
        c.grids["n_th"] = {0.25, 0.5, 1.0};
        c.grids["gamma_in"] = parse_list("1:5:0.25");
        c.grids["gamma_out"] = {1e-4};
        c.grids["L"] = {400};
    } else if (experiment == "fig6-moments") {
        c.grids["n_th"] = {0.5, 1.0, 2.0};
        c.grids["alpha"] = {5, 10, 20, 50, 100, 200};
        c.grids["R"] = {50};
    } else if (experiment == "fig7-coeffs") {
        c.grids["n_th"] = parse_list("0:3:0.1");
        c.grids["alpha"] = {10};
    } else if (experiment == "edgeworth") {
        c.grids["n_th"] = {0.5, 1.0};
        c.grids["gamma_in"] = {10};
        c.grids["R"] = {4};
    } else if (experiment == "theorem1-sweep") {
        c.grids["n_th"] = {1.0};
        c.grids["alpha"] = {1.0};
        c.grids["n"] = {1e3, 1e4, 1e5, 1e6};
    } else {
        c.op = "delta";
        c.grids["n_th"] = {};
    }
    return c;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    const std::string t = trim(text);
    if (t.empty()) return out;
    while (pos <= t.size()) {
        const auto comma = std::min(t.find(',', pos), t.size());
        const std::string item = trim(t.substr(pos, comma - pos));
        if (item.empty()) throw ConfigError("empty item in list '" + t + "'");
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_double(item));
        } else {
            const auto c2 = item.find(':', c1 + 1);
            if (c2 == std::string::npos) throw ConfigError("range needs start:stop:step, got '" + item + "'");
            const double a = parse_double(item.substr(0, c1));
            const double b = parse_double(item.substr(c1 + 1, c2 - c1 - 1));
            const double h = parse_double(item.substr(c2 + 1));
            if (!(h > 0) || b < a) throw ConfigError("range needs start <= stop and step > 0: '" + item + "'");
            const auto count = static_cast<long long>(std::floor((b - a) / h + 1e-9));
            if (count > 10000000) throw ConfigError("range too long: '" + item + "'");
            for (long long i = 0; i <= count; ++i) {
                // snap to 15 digits so 0:1:0.1 yields 0.3, not 0.30000000000000004
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.15g", a + static_cast<double>(i) * h);
                out.push_back(std::strtod(buf, nullptr));
            }
        }
        pos = comma + 1;
    }
    return out;
}

std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void apply_setting(ExperimentConfig& cfg, const std::string& key_in, const std::string& value) {
    const std::string key = trim(key_in);
    if (key == "experiment") {
        const std::string e = trim(value);
        if (!is_experiment(e)) throw ConfigError("unknown experiment '" + e + "'");
        if (e != cfg.experiment) {
            const ExperimentConfig d = default_config(e);
            cfg.experiment = e;
            cfg.grids = d.grids;
            cfg.op = d.op;
        }
    } else if (key == "op") {
        cfg.op = trim(value);
    } else if (key == "out") {
        cfg.out_dir = trim(value);
    } else if (key == "jobs") {
        const auto j = parse_u64(value);
        if (j < 1 || j > 1024) throw ConfigError("jobs must be in [1, 1024]");
        cfg.jobs = static_cast<int>(j);
    } else if (key == "seed") {
        cfg.seed = parse_u64(value);
    } else if (key == "force") {
        cfg.force = parse_bool(value);
    } else if (key == "format") {
        const std::string f = trim(value);
        if (f != "csv" && f != "csv+svg") throw ConfigError("format must be csv or csv+svg");
        cfg.format = f;
    } else if (!key.empty() && key.find_first_of(" \t=") == std::string::npos) {
        cfg.grids[key] = parse_list(value);
    } else {
        throw ConfigError("bad key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> items;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        items.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    const auto e = std::find_if(items.begin(), items.end(), [](const auto& kv) { return kv.first == "experiment"; });
    if (e == items.end()) throw ConfigError(path + ": missing 'experiment'");
    ExperimentConfig cfg = default_config(e->second);
    for (const auto& [k, v] : items) {
        if (k != "experiment") apply_setting(cfg, k, v);
    }
    return cfg;
}

}  // namespace ctd::tools
