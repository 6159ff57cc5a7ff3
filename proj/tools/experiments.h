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


#ifndef CTD_TOOLS_EXPERIMENTS_H_
#define CTD_TOOLS_EXPERIMENTS_H_

#include <string>
#include <vector>

#include "config.h"
#include "output.h"

namespace ctd::tools {

struct ExperimentInfo {
    std::string name;
    std::string summary;
    std::vector<std::string> columns;  // empty for custom (op dependent)
};

const std::vector<ExperimentInfo>& experiment_catalog();

// Throws ConfigError for invalid grids (unless cfg.force relaxes a regime
// guard) and ctd::ResourceError naming the point that exceeded a ceiling.
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace ctd::tools

#endif  // CTD_TOOLS_EXPERIMENTS_H_
