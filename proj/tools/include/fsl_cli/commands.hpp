// Copyright 2026 The fsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef FSL_CLI_COMMANDS_HPP
#define FSL_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fsl_cli/report.hpp"

namespace fsl::cli {

/// Suite names accepted by `verify`, excluding "all".
const std::vector<std::string>& SuiteNames();

/// Runs one suite and appends its records.
void RunSuite(const std::string& name, const RunConfig& config, Report& report);

Report Verify(const RunConfig& config);
Report Reduce(const RunConfig& config, const Json& input);
Report EstimateNorm(const RunConfig& config);

/// Full command-line entry point. Writes the JSON report to `out` (or
/// --out), diagnostics to `err`, and returns the exit code.
int RunMain(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace fsl::cli

#endif  // FSL_CLI_COMMANDS_HPP
