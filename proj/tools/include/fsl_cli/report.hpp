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


#ifndef FSL_CLI_REPORT_HPP
#define FSL_CLI_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fsl::cli {

using Json = nlohmann::ordered_json;

/// Bad flags, bad values, unparsable input. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;               // verify | reduce | estimate-norm
  std::string suite = "all";
  std::optional<int> epsilon;
  std::optional<int> d;
  std::optional<int> r;
  std::string family;                // "B3", ...
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;  // overrides only
  std::string cocycle;
  std::optional<int> n;              // b-n degree; cocycle suite degree
  std::string in_path;
  std::string out_path;
  int threads = 1;
  bool refine = true;

  /// Throws UsageError.
  void Validate() const;
  double Tol(std::string_view key) const;
  std::uint64_t TrialsOr(std::uint64_t fallback) const {
    return trials.value_or(fallback);
  }
  Json Echo() const;
};

/// Default thresholds by key.
const std::map<std::string, double, std::less<>>& DefaultTolerances();

struct CheckRecord {
  std::string name;
  std::uint64_t samples = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::optional<double> value;  // informational, e.g. an estimate

  bool pass() const { return max_residual <= threshold; }
};

struct Report {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  Json results = Json::object();
  double wall_seconds = 0.0;
  std::string error;        // set when the command aborted
  std::string error_kind;   // "genericity", "domain", ...
  std::string predicate;    // failing genericity predicate

  bool pass() const;
  const CheckRecord* FirstFailure() const;
  CheckRecord& Add(std::string name, std::uint64_t samples, double max_residual,
                   double threshold);
  Json ToJson(bool with_wall_time = true) const;
  int ExitCode() const { return pass() ? kExitPass : kExitFail; }
};

}  // namespace fsl::cli

#endif  // FSL_CLI_REPORT_HPP
