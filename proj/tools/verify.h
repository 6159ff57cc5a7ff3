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


#ifndef CTD_TOOLS_VERIFY_H_
#define CTD_TOOLS_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ctd::tools {

struct VerifyEntry {
    std::string suite;
    std::string name;
    bool pass = false;
    double residual = 0;
    double tolerance = 0;
};

const std::vector<std::string>& verify_suites();
// suite is one of verify_suites() or "all". Unknown names throw ConfigError.
std::vector<VerifyEntry> run_verify(const std::string& suite, std::uint64_t seed, int jobs);
void print_report(std::ostream& os, const std::vector<VerifyEntry>& entries);

}  // namespace ctd::tools

#endif  // CTD_TOOLS_VERIFY_H_
