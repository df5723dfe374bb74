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

#include <cmath>
#include <limits>
#include <random>

#include "eqp/bench.h"
#include "eqp/errors.h"
#include "eqp/verify.h"
#include "gtest/gtest.h"

namespace eqp {
namespace {

Eigen::VectorXd Vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

FractionalData LinearReduction(int n, Eigen::VectorXd b) {
  return FractionalData{Eigen::MatrixXd::Identity(n, n),
                        Eigen::MatrixXd::Identity(n, n), std::move(b),
                        Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), 1.0};
}

IntersectionSet BoxBall(int n) {
  return IntersectionSet({BoxSet{Eigen::VectorXd::Constant(n, 1.0),
                                 Eigen::VectorXd::Constant(n, 3.0)},
                          BallSet{Eigen::VectorXd::Zero(n), 3.0}});
}

TEST(StepScheduleTest, AlphaRule) {
  StepSchedule s;
  EXPECT_EQ(AlphaAt(s, 0), 100.0);
  EXPECT_EQ(AlphaAt(s, 99), 1.0);
  s.alpha0 = 1.0;
  EXPECT_EQ(AlphaAt(s, 3), 0.25);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_GT(AlphaAt(s, k), AlphaAt(s, k + 1));
    EXPECT_GT(AlphaAt(s, k + 1), 0.0);
  }
}

TEST(StepScheduleTest, ValidatesParameters) {
  StepSchedule s;
  s.alpha0 = 0.0;
  EXPECT_THROW(ValidateSchedule(s), Error);
  s = StepSchedule{};
  s.lambda = 1.0;
  EXPECT_THROW(ValidateSchedule(s), Error);
  s = StepSchedule{};
  s.lambda_rule = [](int k) { return k < 3 ? 0.5 : 0.9999999; };
  EXPECT_EQ(LambdaAt(s, 0), 0.5);
  EXPECT_THROW(LambdaAt(s, 5), Error);
  SolverConfig config;
  config.max_iter = 0;
  EXPECT_THROW(ValidateConfig(config), Error);
}

TEST(StepTest, StationaryFeasiblePointStops) {
  const FractionalBifunction f(LinearReduction(2, Vec({-2, -2})));
  const StepResult r = Step(Vec({2, 2}), 0, f, BoxBall(2), SolverConfig{});
  ASSERT_TRUE(r.terminal.has_value());
  EXPECT_EQ(*r.terminal, SolveStatus::kSolvedStationary);
  EXPECT_EQ(r.next_x, Vec({2, 2}));
  EXPECT_EQ(r.record.g, Eigen::VectorXd::Zero(2));
}

TEST(StepTest, OneDimensionalHandTrace) {
  // g = A1'(Ax + b) = x > 0, so the normalized direction is +1.
  const FractionalBifunction f(LinearReduction(1, Vec({0})));
  const IntersectionSet set({BoxSet{Vec({1}), Vec({3})}, BallSet{Vec({0}), 3.0}});
  SolverConfig config;
  config.schedule.alpha0 = 1.0;
  const StepResult r = Step(Vec({5}), 0, f, set, config);
  EXPECT_FALSE(r.terminal.has_value());
  EXPECT_EQ(r.record.g[0], 1.0);
  // y = 4, both projections 3, average 3, relaxed (5 + 3) / 2.
  EXPECT_DOUBLE_EQ(r.next_x[0], 4.0);
  EXPECT_DOUBLE_EQ(r.record.err1, 1.0);
  EXPECT_DOUBLE_EQ(r.record.err2, 4.0);
}

TEST(StepTest, ZeroSubgradientOutsideSetTakesFeasibilityStep) {
  const FractionalBifunction f(LinearReduction(2, Vec({-5, -5})));
  const IntersectionSet set = BoxBall(2);
  const Eigen::VectorXd x = Vec({5, 5});
  const StepResult r = Step(x, 0, f, set, SolverConfig{});
  EXPECT_FALSE(r.terminal.has_value());
  EXPECT_EQ(r.record.g, Eigen::VectorXd::Zero(2));
  const Eigen::VectorXd expected = 0.5 * x + 0.5 * AveragedProjection(x, set);
  EXPECT_LE((r.next_x - expected).norm(), 1e-15);
  EXPECT_LT(FeasibilityResidual(r.next_x, set), FeasibilityResidual(x, set));
}

TEST(StepTest, NextIterateLiesOnRelaxationSegment) {
  // x in C, nonzero direction pointing out of C.
  const FractionalBifunction f(LinearReduction(2, Vec({-0.5, -0.5})));
  const IntersectionSet set = BoxBall(2);
  const Eigen::VectorXd x = Vec({1, 1});
  const StepResult r = Step(x, 4, f, set, SolverConfig{});
  const Eigen::VectorXd target = AveragedProjection(x - r.record.alpha * r.record.g, set);
  EXPECT_LE((r.next_x - (0.5 * x + 0.5 * target)).norm(), 1e-12);
  EXPECT_LE(FejerGap(r.record, set, x), 1e-9);
}

TEST(StepTest, RejectsNonFiniteIterate) {
  const FractionalBifunction f(LinearReduction(2, Vec({0, 0})));
  try {
    Step(Vec({std::numeric_limits<double>::infinity(), 1}), 0, f, BoxBall(2),
         SolverConfig{});
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinite);
  }
}

TEST(SolveTest, StationaryStartStopsWithoutSteps) {
  const FractionalBifunction f(LinearReduction(2, Vec({-2, -2})));
  const SolveOutcome out = Solve(f, BoxBall(2), Vec({2, 2}), SolverConfig{});
  EXPECT_EQ(out.status, SolveStatus::kSolvedStationary);
  EXPECT_EQ(out.iterations, 0);
  EXPECT_EQ(out.x_final, Vec({2, 2}));
  EXPECT_LE(FeasibilityResidual(out.x_final, BoxBall(2)), kDefaultMembershipTol);
}

TEST(SolveTest, LinearReductionApproachesInteriorSolution) {
  const FractionalBifunction f(LinearReduction(2, Vec({-2, -2})));
  const IntersectionSet set = BoxBall(2);
  SolverConfig config;
  config.schedule.alpha0 = 1.0;
  const SolveOutcome out = Solve(f, set, Vec({1, 3}), config);
  EXPECT_LT((out.x_final - Vec({2, 2})).norm(), 0.05);
  EXPECT_GE(GridSolutionCheck(f, set, out.x_final, 0.01), -0.05);
}

TEST(SolveTest, MaxIterationsAndHistory) {
  const Instance inst = GenerateInstance({1, 5, 42}, 2);
  const FractionalBifunction f(inst.data);
  SolverConfig config;
  config.max_iter = 25;
  config.record_history = true;
  const SolveOutcome out = Solve(f, inst.set, DefaultStart(5), config);
  EXPECT_EQ(out.status, SolveStatus::kMaxIterations);
  EXPECT_EQ(out.iterations, 25);
  ASSERT_EQ(out.history.size(), 25u);
  EXPECT_EQ(out.history.back().x_next, out.x_final);
  for (std::size_t k = 0; k + 1 < out.history.size(); ++k) {
    EXPECT_EQ(out.history[k].x_next, out.history[k + 1].x);
  }
}

TEST(SolveTest, ToleranceStopWhenBothErrorsSmall) {
  // Loose tolerances make the practical stop fire early.
  const Instance inst = GenerateInstance({3, 5, 9}, 2);
  const FractionalBifunction f(inst.data);
  SolverConfig config;
  config.tol_err1 = 10.0;
  config.tol_err2 = 10.0;
  config.record_history = true;
  const SolveOutcome out = Solve(f, inst.set, DefaultStart(5), config);
  EXPECT_EQ(out.status, SolveStatus::kToleranceStop);
  ASSERT_EQ(out.iterations, static_cast<int>(out.history.size()));
  ASSERT_LT(out.iterations, 1000);
  for (std::size_t k = 0; k < out.history.size(); ++k) {
    const IterationRecord& r = out.history[k];
    const bool small = r.err1 < 10.0 && r.err2 < 10.0;
    EXPECT_EQ(small, k + 1 == out.history.size()) << "k=" << k;
  }
  EXPECT_EQ(out.x_final, out.history.back().x_next);
}

TEST(SolveTest, TrajectoryInvariants) {
  int audited = 0;
  for (int example = 1; example <= 3; ++example) {
    for (int index = 0; index < 3; ++index) {
      const Instance inst = GenerateInstance({example, 5, 77}, index);
      const FractionalBifunction f(inst.data);
      SolverConfig config;
      config.record_history = true;
      SolveOutcome out;
      try {
        out = Solve(f, inst.set, DefaultStart(5), config);
      } catch (const Error& e) {
        // The iteration may leave the region where c'x + d > 0.
        ASSERT_EQ(e.code(), ErrorCode::kDenominatorNonPositive);
        continue;
      }
      ++audited;
      for (const IterationRecord& r : out.history) {
        const double g_norm = r.g.norm();
        EXPECT_TRUE(g_norm == 0.0 || std::abs(g_norm - 1.0) <= 1e-12);
        const Eigen::VectorXd target = AveragedProjection(r.x - r.alpha * r.g, inst.set);
        EXPECT_LE(((r.x_next - r.x) - r.lambda * (target - r.x)).norm(), 1e-12);
        const double movement_bound =
            r.lambda * ((r.x - AveragedProjection(r.x, inst.set)).norm() + r.alpha);
        EXPECT_LE(r.err1, movement_bound + 1e-12);
      }
    }
  }
  EXPECT_GE(audited, 4);
}

TEST(SolveTest, Deterministic) {
  const Instance inst = GenerateInstance({2, 6, 5}, 3);
  const FractionalBifunction f(inst.data);
  SolverConfig config;
  config.record_history = true;
  const SolveOutcome a = Solve(f, inst.set, DefaultStart(6), config);
  const SolveOutcome b = Solve(f, inst.set, DefaultStart(6), config);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t k = 0; k < a.history.size(); ++k) {
    EXPECT_EQ(a.history[k].x, b.history[k].x);
  }
  EXPECT_EQ(a.x_final, b.x_final);
}

TEST(SolveTest, LambdaRuleIsHonored) {
  const Instance inst = GenerateInstance({1, 3, 1}, 1);
  const FractionalBifunction f(inst.data);
  SolverConfig config;
  config.max_iter = 10;
  config.record_history = true;
  config.schedule.lambda_rule = [](int k) { return k % 2 == 0 ? 0.25 : 0.75; };
  const SolveOutcome out = Solve(f, inst.set, DefaultStart(3), config);
  for (const IterationRecord& r : out.history) {
    EXPECT_EQ(r.lambda, r.k % 2 == 0 ? 0.25 : 0.75);
  }
}

}  // namespace
}  // namespace eqp
