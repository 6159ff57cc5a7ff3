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


#ifndef CTD_TOOLS_OUTPUT_H_
#define CTD_TOOLS_OUTPUT_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "config.h"

namespace ctd::tools {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCsvSchema = "ctd-csv/1";

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Series {
    std::string label;
    std::vector<double> x, y;
    bool dashed = false;
};

struct Plot {
    std::string name;
    std::string title, xlabel, ylabel;
    bool logx = false, logy = false;
    std::vector<Series> series;
};

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0;
    double tolerance = 0;
    std::string detail;
};

struct RunResult {
    std::vector<Table> tables;
    std::vector<Plot> plots;
    std::vector<Check> checks;
    std::map<std::string, double> fitted;
    std::vector<std::string> warnings;

    bool pass() const;
};

void write_csv(std::ostream& os, const Table& t, const ExperimentConfig& cfg);
void write_svg(std::ostream& os, const Plot& p);
void write_summary(std::ostream& os, const RunResult& r, const ExperimentConfig& cfg,
                   const std::vector<std::string>& files);

// Writes every table (and plots for csv+svg) plus summary.json into cfg.out_dir.
std::vector<std::string> write_outputs(const RunResult& r, const ExperimentConfig& cfg);

}  // namespace ctd::tools

#endif  // CTD_TOOLS_OUTPUT_H_
