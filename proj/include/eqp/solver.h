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

// Parallel star-subgradient projection method for equilibrium problems over
// an intersection of convex sets. Each iteration takes a normalized
// star-subgradient step, projects independently onto every component set,
// averages the projections and relaxes:
//
//   x_{k+1} = (1 - lambda_k) x_k + lambda_k P_w(x_k - alpha_k g_k).
//
// With sum alpha_k = inf, sum alpha_k^2 < inf and lambda_k bounded away from
// 0 and 1, the iterates accumulate at solutions when the bifunction is
// pseudomonotone and paramonotone and the iterates stay bounded (bounded
// averaged set, or Lipschitz f(x, .) with a common solution). Neither
// condition is checked at run time; a non-finite iterate raises kNonFinite.

#ifndef EQP_SOLVER_H_
#define EQP_SOLVER_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "eqp/geometry.h"
#include "eqp/problem.h"

namespace eqp {

// alpha_k = alpha0 / (k + 1); lambda_k constant unless lambda_rule is set, in
// which case lambda_rule(k) must stay inside [lambda_min, lambda_max].
struct StepSchedule {
  double alpha0 = 100.0;
  double lambda = 0.5;
  std::function<double(int)> lambda_rule;
  double lambda_min = 1e-3;
  double lambda_max = 1.0 - 1e-3;
};

void ValidateSchedule(const StepSchedule& schedule);
double AlphaAt(const StepSchedule& schedule, int k);
double LambdaAt(const StepSchedule& schedule, int k);

struct SolverConfig {
  StepSchedule schedule;
  int max_iter = 1000;
  double tol_err1 = 1e-4;
  double tol_err2 = 1e-1;
  double grad_zero_tol = 1e-12;
  double membership_tol = kDefaultMembershipTol;
  bool record_history = false;
};

void ValidateConfig(const SolverConfig& config);

enum class SolveStatus {
  kSolvedStationary,
  kSolvedFixedPoint,
  kToleranceStop,
  kMaxIterations,
};

std::string_view SolveStatusName(SolveStatus status);

struct IterationRecord {
  int k = 0;
  Eigen::VectorXd x;       // x_k
  Eigen::VectorXd x_next;  // x_{k+1}; equals x_k on a stationary stop
  Eigen::VectorXd g;       // normalized star-subgradient, or exactly zero
  double alpha = 0.0;
  double lambda = 0.0;
  double err1 = 0.0;  // ||x_k - x_{k+1}||
  double err2 = 0.0;  // feasibility residual at x_k
};

struct StepResult {
  Eigen::VectorXd next_x;
  IterationRecord record;
  std::optional<SolveStatus> terminal;
};

// One iteration from x_k. If the star-subgradient vanishes while x_k is
// outside C, the step uses g = 0, i.e. a pure relaxed averaged-projection
// step toward C.
StepResult Step(const Eigen::VectorXd& x, int k,
                const EquilibriumBifunction& bifunction,
                const IntersectionSet& set, const SolverConfig& config);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kMaxIterations;
  Eigen::VectorXd x_final;
  int iterations = 0;  // updates applied; 0 for a stationary start
  double final_err1 = 0.0;
  double final_err2 = 0.0;
  std::vector<IterationRecord> history;
  double elapsed_seconds = 0.0;
};

// Iterates Step until a terminal status, err1 < tol_err1 and err2 < tol_err2
// (kToleranceStop), or max_iter steps (kMaxIterations).
SolveOutcome Solve(const EquilibriumBifunction& bifunction,
                   const IntersectionSet& set, const Eigen::VectorXd& x0,
                   const SolverConfig& config);

}  // namespace eqp

#endif  // EQP_SOLVER_H_
