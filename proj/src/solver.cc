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

#include "eqp/solver.h"

#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "eqp/errors.h"

namespace eqp {

void ValidateSchedule(const StepSchedule& schedule) {
  if (!(schedule.alpha0 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha0 must be positive");
  }
  if (!(schedule.lambda_min > 0.0 && schedule.lambda_min <= schedule.lambda_max &&
        schedule.lambda_max < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda bounds must satisfy 0 < min <= max < 1");
  }
  if (!schedule.lambda_rule &&
      !(schedule.lambda > 0.0 && schedule.lambda < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must lie in (0, 1)");
  }
}

double AlphaAt(const StepSchedule& schedule, int k) {
  return schedule.alpha0 / (static_cast<double>(k) + 1.0);
}

double LambdaAt(const StepSchedule& schedule, int k) {
  if (!schedule.lambda_rule) return schedule.lambda;
  const double lambda = schedule.lambda_rule(k);
  if (!(lambda >= schedule.lambda_min && lambda <= schedule.lambda_max)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda_rule(" + std::to_string(k) + ") = " +
                    std::to_string(lambda) + " leaves its bounds");
  }
  return lambda;
}

void ValidateConfig(const SolverConfig& config) {
  ValidateSchedule(config.schedule);
  if (config.max_iter < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iter must be >= 1");
  }
  if (!(config.tol_err1 > 0.0 && config.tol_err2 > 0.0 &&
        config.grad_zero_tol > 0.0 && config.membership_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolvedStationary:
      return "SolvedStationary";
    case SolveStatus::kSolvedFixedPoint:
      return "SolvedFixedPoint";
    case SolveStatus::kToleranceStop:
      return "ToleranceStop";
    case SolveStatus::kMaxIterations:
      return "MaxIterations";
  }
  return "Unknown";
}

StepResult Step(const Eigen::VectorXd& x, int k,
                const EquilibriumBifunction& bifunction,
                const IntersectionSet& set, const SolverConfig& config) {
  if (x.size() != set.dimension() || x.size() != bifunction.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "iterate, set and bifunction dimensions differ");
  }
  if (!x.allFinite()) {
    throw Error(ErrorCode::kNonFinite,
                "iterate x_" + std::to_string(k) + " is not finite");
  }

  StepResult result;
  IterationRecord& record = result.record;
  record.k = k;
  record.x = x;
  record.alpha = AlphaAt(config.schedule, k);
  record.lambda = LambdaAt(config.schedule, k);
  record.err2 = FeasibilityResidual(x, set);
  const bool feasible = record.err2 <= config.membership_tol;

  const Eigen::VectorXd g = bifunction.StarSubgradient(x);
  const double g_norm = g.norm();
  if (!std::isfinite(g_norm)) {
    throw Error(ErrorCode::kNonFinite, "star-subgradient is not finite");
  }
  if (g_norm <= config.grad_zero_tol) {
    record.g = Eigen::VectorXd::Zero(x.size());
    if (feasible) {
      result.next_x = x;
      record.x_next = x;
      record.err1 = 0.0;
      result.terminal = SolveStatus::kSolvedStationary;
      return result;
    }
  } else {
    record.g = g / g_norm;
  }

  const Eigen::VectorXd target =
      AveragedProjection(x - record.alpha * record.g, set);
  result.next_x = (1.0 - record.lambda) * x + record.lambda * target;
  if (!result.next_x.allFinite()) {
    throw Error(ErrorCode::kNonFinite,
                "iterate x_" + std::to_string(k + 1) + " is not finite");
  }
  record.x_next = result.next_x;
  record.err1 = (result.next_x - x).norm();
  if (record.err1 <= config.grad_zero_tol && feasible) {
    result.terminal = SolveStatus::kSolvedFixedPoint;
  }
  return result;
}

SolveOutcome Solve(const EquilibriumBifunction& bifunction,
                   const IntersectionSet& set, const Eigen::VectorXd& x0,
                   const SolverConfig& config) {
  ValidateConfig(config);
  const auto start = std::chrono::steady_clock::now();

  SolveOutcome outcome;
  Eigen::VectorXd x = x0;
  for (int k = 0;; ++k) {
    if (k >= config.max_iter) {
      outcome.status = SolveStatus::kMaxIterations;
      break;
    }
    StepResult step = Step(x, k, bifunction, set, config);
    outcome.iterations = step.terminal ? k : k + 1;
    outcome.final_err1 = step.record.err1;
    outcome.final_err2 = step.record.err2;
    if (config.record_history) outcome.history.push_back(step.record);

    if (step.terminal) {
      outcome.status = *step.terminal;
      // x_k itself is the certified point.
      break;
    }
    x = std::move(step.next_x);
    if (step.record.err1 < config.tol_err1 &&
        step.record.err2 < config.tol_err2) {
      outcome.status = SolveStatus::kToleranceStop;
      break;
    }
  }
  outcome.x_final = std::move(x);
  outcome.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return outcome;
}

}  // namespace eqp
