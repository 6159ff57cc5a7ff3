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


#ifndef CTD_TOOLS_CONFIG_H_
#define CTD_TOOLS_CONFIG_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctd::tools {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::string experiment;
    // Named parameter grids: n_th, alpha, gamma_in, gamma_out, n, R, L, ...
    std::map<std::string, std::vector<double>> grids;
    std::string op;  // custom only
    std::string out_dir = "results";
    int jobs = 1;
    std::uint64_t seed = 1;
    bool force = false;
    std::string format = "csv";

    const std::vector<double>& grid(const std::string& key) const;
    // Settings that affect output bytes; out_dir and jobs are excluded.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

const std::vector<std::string>& experiment_names();
bool is_experiment(const std::string& name);
ExperimentConfig default_config(const std::string& experiment);

// "a,b,c" or "start:stop:step" (inclusive), or a mix separated by commas.
std::vector<double> parse_list(const std::string& text);
std::string format_number(double v);

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// Flat key = value file, '#' starts a comment. 'experiment' must be set.
ExperimentConfig load_config_file(const std::string& path);

}  // namespace ctd::tools

#endif  // CTD_TOOLS_CONFIG_H_
