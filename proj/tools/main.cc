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


// ctd: experiment runner and direct access to the library operations.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.h"
#include "ctd/types.h"
#include "experiments.h"
#include "ops.h"
#include "output.h"
#include "verify.h"

namespace {

using namespace ctd::tools;

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kResource = 3, kInternal = 4 };

void print_info() {
    std::cout << "ctd " << kToolVersion << "\n\nInfidelity factors, lim n(1 - F):\n"
              << "  opt        = n_th/2 + n_th/(4 n_th + 2)   optimal phase-insensitive channel\n"
              << "  gauss      = n_th                         Gaussian channels\n"
              << "  mp         = n_th/2 + 1/4                 canonical phase measure-and-prepare\n"
              << "  heterodyne = n_th + 1                     heterodyne measure-and-prepare\n\n"
              << "Experiments (run <config|name>); CSV schema " << kCsvSchema << ":\n";
    for (const auto& e : experiment_catalog()) {
        std::cout << "  " << e.name << ": " << e.summary << "\n    grids:";
        for (const auto& [k, v] : default_config(e.name).grids) {
            std::cout << " " << k << "=";
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << format_number(v[i]);
        }
        std::cout << "\n    columns: ";
        if (e.columns.empty()) std::cout << "<op args>,<op outputs>";
        for (std::size_t i = 0; i < e.columns.size(); ++i) std::cout << (i ? "," : "") << e.columns[i];
        std::cout << "\n";
    }
    std::cout << "\nOperations (eval <op> <args...>, or custom with op = <op>):\n";
    for (const auto& op : op_catalog()) {
        std::cout << "  " << op.name << "(";
        for (std::size_t i = 0; i < op.args.size(); ++i) std::cout << (i ? ", " : "") << op.args[i];
        std::cout << ") -> ";
        for (std::size_t i = 0; i < op.outputs.size(); ++i) std::cout << (i ? ", " : "") << op.outputs[i];
        std::cout << "\n      " << op.summary << "\n";
    }
    std::cout << "\nVerify suites: all";
    for (const auto& s : verify_suites()) std::cout << " | " << s;
    std::cout << "\n\nOutput directory: --out, else $CTD_OUT_DIR, else 'out' in the config file, else ./results\n"
              << "Exit status: 0 ok, 1 a check failed, 2 invalid configuration, 3 resource ceiling, 4 internal error\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherence distillation experiments and operations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir, format;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool force = false;
    app.add_option("--out", out_dir, "Output directory")->envname("CTD_OUT_DIR");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--seed", seed, "Seed for randomized suites");
    app.add_flag("--force", force, "Run grid points outside the validity guards, with a warning");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "csv+svg"}));

    auto* run = app.add_subcommand("run", "Run an experiment from a config file or by name with defaults");
    std::string config;
    std::vector<std::string> sets;
    run->add_option("config", config, "Config file (key = value) or experiment name")->required();
    run->add_option("--set", sets, "Override a config key: KEY=VALUE");

    auto* verify = app.add_subcommand("verify", "Run property suites");
    std::string suite = "all";
    verify->add_option("suite", suite, "all | fock | channel | metrics | asymptotics");

    auto* eval = app.add_subcommand("eval", "Evaluate one operation");
    std::string op_name;
    std::vector<double> op_args;
    eval->add_option("op", op_name, "Operation name (see info)")->required();
    eval->add_option("args", op_args, "Numeric arguments");

    app.add_subcommand("info", "Formula, experiment and operation catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("info")) {
            print_info();
            return kOk;
        }
        if (app.got_subcommand("eval")) {
            const OpSpec& op = find_op(op_name);
            if (op_args.size() != op.args.size()) {
                std::string sig;
                for (const auto& a : op.args) sig += " <" + a + ">";
                throw ConfigError("usage: eval " + op.name + sig);
            }
            const auto out = op.fn(op_args);
            for (std::size_t i = 0; i < out.size(); ++i) std::cout << op.outputs[i] << " = " << format_number(out[i]) << "\n";
            return kOk;
        }
        if (app.got_subcommand("verify")) {
            const auto entries = run_verify(suite, seed, jobs);
            print_report(std::cout, entries);
            for (const auto& e : entries) {
                if (!e.pass) return kCheckFailed;
            }
            return kOk;
        }

        ExperimentConfig cfg = is_experiment(config) ? default_config(config) : load_config_file(config);
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + s + "'");
            apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
        }
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (app.count("--jobs")) cfg.jobs = jobs;
        if (app.count("--seed")) cfg.seed = seed;
        if (force) cfg.force = true;
        if (!format.empty()) cfg.format = format;

        const RunResult r = run_experiment(cfg);
        const auto files = write_outputs(r, cfg);
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
        for (const auto& c : r.checks) {
            std::printf("%s %s measured=%.6g reference=%.6g\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                        c.tolerance);
        }
        for (const auto& [k, v] : r.fitted) std::printf("fitted %s = %.6g\n", k.c_str(), v);
        std::printf("wrote %zu files to %s\n", files.size(), cfg.out_dir.c_str());
        return r.pass() ? kOk : kCheckFailed;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const ctd::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
