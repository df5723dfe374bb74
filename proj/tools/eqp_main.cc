// Copyright 2026 The eqp Authors
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

// eqp: solve, benchmark and audit equilibrium problems.
//
//   eqp solve  --instance FILE [--x0 FILE] [--alpha0 100] [--lambda 0.5]
//              [--max-iter 1000] [--tol-err1 1e-4] [--tol-err2 1e-1]
//              [--history FILE]
//   eqp bench  --example {1|2|3} --dim N [--dim M ...] --count 100 --seed S
//              --out report.csv
//   eqp verify --instance FILE --mode {fejer|star|err3|grid} [--samples 100]
//              [--seed S]
//
// Exit codes: 0 success, 1 usage or input error, 2 solver failure,
// 3 verification failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqp/bench.h"
#include "eqp/errors.h"
#include "eqp/io.h"
#include "eqp/solver.h"
#include "eqp/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerify = 3;

constexpr double kFejerTol = 1e-9;
constexpr double kStarTol = 1e-10;
constexpr double kErr3Floor = -1e-9;

struct SolverFlags {
  double alpha0 = 100.0;
  double lambda = 0.5;
  int max_iter = 1000;
  double tol_err1 = 1e-4;
  double tol_err2 = 1e-1;

  void Register(CLI::App* app) {
    app->add_option("--alpha0", alpha0, "Step size numerator: alpha_k = alpha0/(k+1)")
        ->capture_default_str();
    app->add_option("--lambda", lambda, "Relaxation parameter in (0,1)")
        ->capture_default_str();
    app->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    app->add_option("--tol-err1", tol_err1, "Successive-iterate tolerance")
        ->capture_default_str();
    app->add_option("--tol-err2", tol_err2, "Feasibility residual tolerance")
        ->capture_default_str();
  }

  eqp::SolverConfig Config() const {
    eqp::SolverConfig config;
    config.schedule.alpha0 = alpha0;
    config.schedule.lambda = lambda;
    config.max_iter = max_iter;
    config.tol_err1 = tol_err1;
    config.tol_err2 = tol_err2;
    return config;
  }
};

void PrintVector(const char* label, const Eigen::VectorXd& v) {
  std::printf("%s [", label);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::printf("%s%.10g", i ? ", " : "", v[i]);
  }
  std::printf("]\n");
}

void PrintOutcome(const eqp::SolveOutcome& outcome) {
  std::printf("status %s\n",
              std::string(eqp::SolveStatusName(outcome.status)).c_str());
  std::printf("iterations %d\n", outcome.iterations);
  std::printf("err1 %.6e\nerr2 %.6e\n", outcome.final_err1, outcome.final_err2);
  std::printf("elapsed_s %.6f\n", outcome.elapsed_seconds);
  PrintVector("x", outcome.x_final);
}

Eigen::VectorXd StartPoint(const std::string& x0_path, int dim) {
  if (x0_path.empty()) return eqp::DefaultStart(dim);
  Eigen::VectorXd x0 = eqp::ReadVector(x0_path);
  if (x0.size() != dim) {
    throw eqp::Error(eqp::ErrorCode::kDimensionMismatch,
                     "x0 has dimension " + std::to_string(x0.size()) +
                         ", instance has dimension " + std::to_string(dim));
  }
  return x0;
}

int RunSolve(const std::string& instance_path, const std::string& x0_path,
             const SolverFlags& flags, const std::string& history_path) {
  const eqp::Instance instance = eqp::ReadInstance(instance_path);
  const Eigen::VectorXd x0 = StartPoint(x0_path, instance.set.dimension());
  eqp::SolverConfig config = flags.Config();
  config.record_history = !history_path.empty();
  eqp::SolveOutcome outcome;
  try {
    const eqp::FractionalBifunction bifunction(instance.data);
    outcome = eqp::Solve(bifunction, instance.set, x0, config);
  } catch (const eqp::Error& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  }
  PrintOutcome(outcome);
  if (!history_path.empty()) eqp::WriteTrajectory(outcome.history, history_path);
  return kExitOk;
}

int RunBench(int example, const std::vector<int>& dims, int count,
             std::uint64_t seed, const SolverFlags& flags,
             const std::string& out_path) {
  std::vector<eqp::BenchReport> reports;
  for (int dim : dims) {
    const eqp::ExampleSpec spec{example, dim, seed};
    eqp::BenchReport report = eqp::RunBenchmark(spec, count, flags.Config());
    std::printf(
        "example %d n=%d count=%d failures=%d mean_time_s=%.6f "
        "mean_err1=%.6e mean_err2=%.6e",
        report.example_id, report.dim, report.problem_count,
        report.failure_count, report.mean_elapsed_seconds, report.mean_err1,
        report.mean_err2);
    if (report.mean_err3) std::printf(" mean_err3=%.6e", *report.mean_err3);
    std::printf(" solved_fraction=%.3f monotone_fraction=%.3f\n",
                report.solved_fraction, report.monotone_fraction);
    for (const eqp::InstanceResult& r : report.instances) {
      if (r.failed) std::fprintf(stderr, "instance %d failed: %s\n", r.index,
                                 r.failure.c_str());
    }
    reports.push_back(std::move(report));
  }
  if (!out_path.empty()) eqp::WriteReport(reports, out_path);
  for (const eqp::BenchReport& r : reports) {
    if (r.failure_count > 0) return kExitSolver;
  }
  return kExitOk;
}

int RunVerify(const std::string& instance_path, const std::string& mode,
              int samples, std::uint64_t seed, double resolution,
              double grid_tol, const SolverFlags& flags) {
  const eqp::Instance instance = eqp::ReadInstance(instance_path);
  const eqp::FractionalBifunction bifunction(instance.data);
  eqp::SolverConfig config = flags.Config();
  config.record_history = mode == "fejer";
  eqp::SolveOutcome outcome;
  try {
    outcome = eqp::Solve(bifunction, instance.set,
                         eqp::DefaultStart(instance.set.dimension()), config);
  } catch (const eqp::Error& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  }
  PrintOutcome(outcome);

  std::optional<double> fejer, star, err3;
  bool passed = true;
  if (mode == "fejer") {
    fejer = eqp::FejerAudit(outcome.history, instance.set, samples, seed);
    passed = *fejer <= kFejerTol;
    std::printf("fejer: %zu iterations x %d feasible samples, max violation "
                "%.3e (limit %.0e)\n",
                outcome.history.size(), samples, *fejer, kFejerTol);
  } else if (mode == "star") {
    const eqp::StarAuditResult r =
        eqp::StarDefinitionAudit(bifunction, outcome.x_final, samples, seed);
    star = r.worst_inner;
    passed = r.worst_inner < kStarTol;
    if (r.kept == 0) {
      std::printf("star: warning: no sample in the strict level set\n");
    }
    std::printf("star: %d/%d samples in the strict level set, worst inner "
                "%.3e (limit %.0e); advisory Lipschitz estimate %.4g, bound "
                "violation %.3e\n",
                r.kept, r.sampled, r.worst_inner, kStarTol,
                r.lipschitz_estimate, r.lipschitz_bound_violation);
  } else if (mode == "err3") {
    const eqp::Err3Result r =
        eqp::Err3Gap(bifunction, outcome.x_final, instance.set);
    err3 = r.value;
    passed = r.value >= kErr3Floor;
    std::printf("err3: %s gap %.6e (g(x,x)=%.6g, min=%.6g)\n",
                r.absolute ? "absolute" : "relative", r.value,
                r.value_at_projection, r.min_value);
  } else {
    const double min_f = eqp::GridSolutionCheck(bifunction, instance.set,
                                                outcome.x_final, resolution);
    passed = min_f >= -grid_tol;
    std::printf("grid: min f(x, y) over feasible grid = %.6e (limit -%.3g)\n",
                min_f, grid_tol);
  }
  std::printf("%s\n", eqp::FormatAuditLine(fejer, star, err3).c_str());
  std::printf("%s\n", passed ? "PASS" : "FAIL");
  return passed ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-subgradient projection solver for equilibrium "
               "problems"};
  app.require_subcommand(1);

  SolverFlags solve_flags;
  std::string instance_path, x0_path, history_path;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("--instance", instance_path, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--x0", x0_path, "Start point (JSON array)")
      ->check(CLI::ExistingFile);
  solve->add_option("--history", history_path, "Write trajectory CSV");
  solve_flags.Register(solve);

  SolverFlags bench_flags;
  int example = 1;
  std::vector<int> dims;
  int count = 100;
  std::uint64_t bench_seed = 0;
  std::string out_path;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark batch");
  bench->add_option("--example", example, "Example recipe")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  bench->add_option("--dim", dims, "Problem dimension(s)")->required();
  bench->add_option("--count", count, "Instances per dimension")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Generator seed")->capture_default_str();
  bench->add_option("--out", out_path, "Report CSV path");
  bench_flags.Register(bench);

  SolverFlags verify_flags;
  std::string verify_instance, mode;
  int samples = 100;
  std::uint64_t verify_seed = 0;
  double resolution = 0.01;
  double grid_tol = 0.05;
  CLI::App* verify = app.add_subcommand("verify", "Audit a solver run");
  verify->add_option("--instance", verify_instance, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--mode", mode, "Audit to run")
      ->required()
      ->check(CLI::IsMember({"fejer", "star", "err3", "grid"}));
  verify->add_option("--samples", samples, "Samples for fejer/star audits")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Sampling seed")->capture_default_str();
  verify->add_option("--resolution", resolution, "Grid spacing (grid mode)")
      ->capture_default_str();
  verify->add_option("--grid-tol", grid_tol, "Accept when min f >= -grid-tol")
      ->capture_default_str();
  verify_flags.Register(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      return RunSolve(instance_path, x0_path, solve_flags, history_path);
    }
    if (*bench) {
      return RunBench(example, dims, count, bench_seed, bench_flags, out_path);
    }
    return RunVerify(verify_instance, mode, samples, verify_seed, resolution,
                     grid_tol, verify_flags);
  } catch (const eqp::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
}
