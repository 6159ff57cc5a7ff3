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


#ifndef CTD_TOOLS_OPS_H_
#define CTD_TOOLS_OPS_H_

#include <functional>
#include <string>
#include <vector>

namespace ctd::tools {

// A library operation exposed to `eval` and to custom sweeps.
struct OpSpec {
    std::string name;
    std::vector<std::string> args;
    std::vector<std::string> outputs;
    std::string summary;
    std::function<std::vector<double>(const std::vector<double>&)> fn;
};

const std::vector<OpSpec>& op_catalog();
// Throws ConfigError for unknown names.
const OpSpec& find_op(const std::string& name);

}  // namespace ctd::tools

#endif  // CTD_TOOLS_OPS_H_
