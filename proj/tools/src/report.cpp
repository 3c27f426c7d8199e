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


#include "fsl_cli/report.hpp"

#include <cmath>

#include "fsl/forms.hpp"
#include "fsl/version.hpp"

namespace fsl::cli {

const std::map<std::string, double, std::less<>>& DefaultTolerances() {
  static const std::map<std::string, double, std::less<>> kDefaults = {
      {"identity", 1e-9},    // cross-ratio, hat and pairing identities
      {"roundtrip", 1e-10},  // pi o Phi
      {"reduce", 1e-8},      // projective residual of reductions
      {"group", 1e-9},
      {"dilog", 1e-10},
      {"max-d", 5e-4},
      {"d3", 1e-9},
      {"cocycle", 1e-8},
      {"invariance", 1e-9},
      {"lift", 1e-10},
      {"closed-form", 1e-8},
      {"per-j", 1e-9},
      {"norm", 0.05},
  };
  return kDefaults;
}

void RunConfig::Validate() const {
  if (trials && *trials < 1) throw UsageError("--trials must be >= 1");
  if (threads < 1) throw UsageError("thread count must be >= 1");
  if (epsilon || d) {
    if (!epsilon || !d) throw UsageError("--eps and --d must be given together");
    try {
      FormParams::Make(*epsilon, *d, r.value_or(3));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (r && *r < 1) throw UsageError("--r must be >= 1");
  const auto& defaults = DefaultTolerances();
  for (const auto& [key, value] : tolerances) {
    if (!defaults.contains(key)) throw UsageError("unknown tolerance '" + key + "'");
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw UsageError("tolerance '" + key + "' must be positive");
    }
  }
  if (n && (*n < 2 || *n > 8)) throw UsageError("--n must be in [2, 8]");
}

double RunConfig::Tol(std::string_view key) const {
  if (auto it = tolerances.find(std::string(key)); it != tolerances.end()) {
    return it->second;
  }
  const auto& defaults = DefaultTolerances();
  auto it = defaults.find(key);
  if (it == defaults.end()) throw std::logic_error("no tolerance key");
  return it->second;
}

Json RunConfig::Echo() const {
  Json j = Json::object();
  j["command"] = command;
  if (command == "verify") j["suite"] = suite;
  if (epsilon) j["epsilon"] = *epsilon;
  if (d) j["d"] = *d;
  if (r) j["r"] = *r;
  if (!family.empty()) j["family"] = family;
  if (trials) j["trials"] = *trials;
  if (n && cocycle.empty()) j["n"] = *n;
  if (!cocycle.empty()) {
    j["cocycle"] = cocycle;
    if (cocycle == "b-n") j["n"] = n.value_or(4);
    j["refine"] = refine;
  }
  if (!tolerances.empty()) {
    Json t = Json::object();
    for (const auto& [k, v] : tolerances) t[k] = v;
    j["tolerances"] = t;
  }
  return j;
}

bool Report::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

const CheckRecord* Report::FirstFailure() const {
  for (const auto& c : checks) {
    if (!c.pass()) return &c;
  }
  return nullptr;
}

CheckRecord& Report::Add(std::string name, std::uint64_t samples,
                         double max_residual, double threshold) {
  checks.push_back({std::move(name), samples, max_residual, threshold, {}});
  return checks.back();
}

namespace {

Json Number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

}  // namespace

Json Report::ToJson(bool with_wall_time) const {
  Json j = Json::object();
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  j["seed"] = seed;
  j["pass"] = pass();
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json r = Json::object();
    r["name"] = c.name;
    r["samples"] = c.samples;
    r["max_residual"] = Number(c.max_residual);
    r["threshold"] = c.threshold;
    r["pass"] = c.pass();
    if (c.value) r["value"] = Number(*c.value);
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  if (const CheckRecord* f = FirstFailure()) j["first_failure"] = f->name;
  if (!error.empty()) {
    Json e = Json::object();
    e["kind"] = error_kind;
    e["message"] = error;
    if (!predicate.empty()) e["predicate"] = predicate;
    j["error"] = std::move(e);
  }
  if (!results.empty()) j["results"] = results;
  if (with_wall_time) j["wall_seconds"] = wall_seconds;
  return j;
}

}  // namespace fsl::cli
