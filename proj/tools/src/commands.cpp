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


#include "fsl_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fsl/dilogarithm.hpp"
#include "fsl/norms.hpp"
#include "fsl/reduction.hpp"
#include "fsl/version.hpp"
#include "fsl_cli/json_io.hpp"

namespace fsl::cli {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Report Begin(const RunConfig& c) {
  Report rep;
  rep.command = c.command;
  rep.config = c.Echo();
  rep.seed = c.seed;
  return rep;
}

void Fail(Report& rep, const char* kind, const std::exception& e) {
  rep.error_kind = kind;
  rep.error = e.what();
}

}  // namespace

Report Verify(const RunConfig& c) {
  Report rep = Begin(c);
  const auto start = Clock::now();
  try {
    if (c.suite == "all") {
      for (const std::string& name : SuiteNames()) RunSuite(name, c, rep);
    } else {
      RunSuite(c.suite, c, rep);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const GenericityError& e) {
    Fail(rep, "genericity", e);
    rep.predicate = e.predicate();
  } catch (const std::exception& e) {
    Fail(rep, "internal", e);
  }
  rep.wall_seconds = Since(start);
  return rep;
}

Report Reduce(const RunConfig& c, const Json& input) {
  Report rep = Begin(c);
  const auto start = Clock::now();
  const TupleInput ti = TupleInputFromJson(input);
  SqrtBranch branch = SqrtBranch::kPrincipal;
  if (input.contains("branch")) {
    const Json& b = input["branch"];
    if (b == "negated") {
      branch = SqrtBranch::kNegated;
    } else if (b != "principal") {
      throw UsageError("$.branch: expected \"principal\" or \"negated\"");
    }
  }
  rep.config["epsilon"] = ti.epsilon;
  rep.config["d"] = ti.d;
  rep.config["r"] = ti.r;
  rep.config["points"] = ti.points.size();

  std::optional<FormedSpace> space;
  std::optional<ConfigTuple> t;
  try {
    space = FormedSpace::Make(ti.epsilon, ti.d, ti.r);
    t = ConfigTuple::Make(*space, ti.points);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("$: ") + e.what());
  }

  try {
    std::optional<ReductionResult> res;
    Json pi = Json::array();
    switch (t->size()) {
      case 3:
        res = ReduceTriple(*t);
        break;
      case 4:
        res = ReduceQuadruple(*t, branch);
        for (Complex z : Pi3(*t)) pi.push_back(ToJson(z));
        break;
      case 5:
        res = ReduceQuintuple(*t, branch);
        for (Complex z : Pi4(*t)) pi.push_back(ToJson(z));
        break;
      default:
        throw UsageError("$.points: reduce takes 3, 4 or 5 points");
    }
    rep.Add("reduction residual", 1, res->residual, c.Tol("reduce"));
    rep.Add("g in G_r", 1, space->GroupResidual(res->g.matrix()), c.Tol("group"));
    rep.results["group"] = space->GroupName();
    rep.results["g"] = MatrixToJson(res->g.matrix());
    rep.results["canonical"] = TupleToJson(res->canonical);
    if (!pi.empty()) rep.results["cross_ratios"] = pi;
    rep.results["residual"] = res->residual;
    rep.results["condition"] = res->condition;
    rep.results["ill_conditioned"] = res->ill_conditioned;
  } catch (const GenericityError& e) {
    Fail(rep, "genericity", e);
    rep.predicate = e.predicate();
  } catch (const DomainError& e) {
    Fail(rep, "domain", e);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  rep.wall_seconds = Since(start);
  return rep;
}

Report EstimateNorm(const RunConfig& c) {
  Report rep = Begin(c);
  const auto start = Clock::now();
  RefineOptions refine;
  if (!c.refine) refine.iterations = 0;
  const double v = MaxBlochWigner();

  SupEstimate est;
  double target = 0.0;
  if (c.cocycle == "vol-p1") {
    est = EstimateSup(VolP1Objective(), VolP1Sampler(), c.TrialsOr(10000), c.seed,
                      "vol-p1", refine, c.threads);
    target = v;
    rep.Add("sup = v", est.trials, std::abs(est.value - target), c.Tol("max-d"))
        .value = est.value;
    rep.Add("sup <= v", est.trials, std::max(0.0, est.value - target), 1e-9);
  } else if (c.cocycle == "b4-so4") {
    est = EstimateSup(B4So4Objective(), B4So4Sampler(), c.TrialsOr(100000), c.seed,
                      "b4-so4", refine, c.threads);
    target = 4.0 * v;
    rep.Add("sup >= 4v - tol", est.trials, std::max(0.0, target - est.value),
            c.Tol("norm"))
        .value = est.value;
    rep.Add("sup <= 4v", est.trials, std::max(0.0, est.value - target), 1e-6);
    const double ratio = est.value / GromovNormBn(4);
    rep.Add("operator norm ratio in [0.39, 0.4001]", est.trials,
            std::max({0.0, 0.39 - ratio, ratio - 0.4001}), 0.0)
        .value = ratio;
    Json op = Json::object();
    op["exact"] = "2/5";
    op["sampled"] = ratio;
    rep.results["operator_norm"] = op;
  } else if (c.cocycle == "b-n") {
    const int n = c.n.value_or(4);
    est = EstimateSup(BnObjective(n), BnSampler(n), c.TrialsOr(1000), c.seed, "b-n",
                      refine, c.threads);
    target = GromovNormBn(n);
    rep.Add("sup <= n(n^2-1)/6 v", est.trials, std::max(0.0, est.value - target), 1e-6)
        .value = est.value;
  } else {
    throw UsageError("unknown cocycle '" + c.cocycle + "'");
  }
  rep.results["estimate"] = est.value;
  rep.results["sampled_value"] = est.sampled_value;
  rep.results["argmax"] = est.argmax;
  rep.results["best_trial"] = est.best_trial;
  rep.results["trials"] = est.trials;
  rep.results["target"] = target;
  rep.results["ratio"] = est.value / target;
  rep.wall_seconds = Since(start);
  return rep;
}

namespace {

int ParseEpsilon(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw UsageError("--eps must be +1 or -1");
}

void ParseTolerances(const std::vector<std::string>& items, RunConfig& c) {
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects KEY=VALUE");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double x = std::strtod(val.c_str(), &end);
    if (val.empty() || end != val.c_str() + val.size()) {
      throw UsageError("--tol " + key + ": not a number");
    }
    c.tolerances[key] = x;
  }
}

int Threads(int requested) {
  int cap = INT_MAX;
  if (std::getenv("FSL_THREADS")) cap = ThreadCount();
  if (requested > 0) return std::min(requested, cap);
  return ThreadCount();
}

std::string ReadAll(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int RunMain(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"fsl: cross-ratios, canonical reductions and volume cocycles"};
  app.name("fsl");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string eps;
  int d = 0, r = 0, n = 0, threads = 0;
  std::uint64_t trials = 0;
  std::vector<std::string> tols;
  bool no_refine = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--trials", trials, "samples per case (>= 1)");
    sub->add_option("--threads", threads, "worker threads, capped by FSL_THREADS");
    sub->add_option("--out", cfg.out_path, "write the JSON report here");
    sub->add_option("--tol", tols, "threshold override KEY=VALUE")
        ->type_name("KEY=VALUE");
  };
  const auto space_opts = [&](CLI::App* sub) {
    sub->add_option("--eps", eps, "form sign, +1 or -1");
    sub->add_option("--d", d, "parity, 0 or 1");
    sub->add_option("--r", r, "Witt index");
  };

  std::vector<std::string> suites = SuiteNames();
  suites.insert(suites.begin(), "all");

  CLI::App* verify = app.add_subcommand("verify", "run identity suites");
  common(verify);
  space_opts(verify);
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  verify->add_option("--n", n, "flag dimension for the cocycle suite");
  verify->add_option("--family", cfg.family, "family tag, e.g. B3");

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a tuple to canonical form");
  common(reduce);
  reduce->add_option("--in", cfg.in_path, "input JSON (default stdin)");

  CLI::App* est = app.add_subcommand("estimate-norm", "Monte Carlo sup of a cocycle");
  common(est);
  est->add_option("--cocycle", cfg.cocycle, "vol-p1 | b4-so4 | b-n")
      ->required()
      ->check(CLI::IsMember({"vol-p1", "b4-so4", "b-n"}));
  est->add_option("--n", n, "dimension for b-n");
  est->add_flag("--no-refine", no_refine, "skip local refinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << "fsl: " << e.what() << "\n";
    return kExitUsage;
  }

  Report rep;
  try {
    ParseTolerances(tols, cfg);
    if (!eps.empty()) cfg.epsilon = ParseEpsilon(eps);
    const auto given = [&](const std::string& name) {
      for (CLI::App* sub : {verify, reduce, est}) {
        if (sub->parsed() && sub->get_option_no_throw(name) != nullptr &&
            sub->count(name) > 0) {
          return true;
        }
      }
      return false;
    };
    if (given("--d")) cfg.d = d;
    if (given("--r")) cfg.r = r;
    if (given("--n")) cfg.n = n;
    if (given("--trials")) cfg.trials = trials;
    cfg.refine = !no_refine;
    if (given("--threads") && threads < 1) throw UsageError("--threads must be >= 1");
    cfg.threads = Threads(threads);

    if (verify->parsed()) {
      cfg.command = "verify";
      cfg.Validate();
      if (!cfg.family.empty()) FamilyTag::Parse(cfg.family);
      rep = Verify(cfg);
    } else if (reduce->parsed()) {
      cfg.command = "reduce";
      cfg.Validate();
      std::string text;
      std::string source = "<stdin>";
      if (!cfg.in_path.empty()) {
        std::ifstream f(cfg.in_path);
        if (!f) throw UsageError("cannot read " + cfg.in_path);
        text = ReadAll(f);
        source = cfg.in_path;
      } else {
        text = ReadAll(in);
      }
      rep = Reduce(cfg, ParseJson(text, source));
    } else {
      cfg.command = "estimate-norm";
      cfg.Validate();
      rep = EstimateNorm(cfg);
    }
  } catch (const UsageError& e) {
    err << "fsl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "fsl: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = rep.ToJson().dump(2) + "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f || !(f << text)) {
      err << "fsl: cannot write " << cfg.out_path << "\n";
      return kExitUsage;
    }
  } else {
    out << text;
  }

  if (!rep.error.empty()) {
    err << "FAIL: " << rep.error_kind << ": " << rep.error << "\n";
  } else if (const CheckRecord* f = rep.FirstFailure()) {
    err << "FAIL: " << f->name << " (max residual " << f->max_residual << " > "
        << f->threshold << ")\n";
  } else {
    err << "PASS: " << rep.checks.size() << " checks\n";
  }
  return rep.ExitCode();
}

}  // namespace fsl::cli
