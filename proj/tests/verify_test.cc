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

#include "eqp/verify.h"

#include <cmath>
#include <limits>

#include "eqp/bench.h"
#include "eqp/errors.h"
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

FractionalData Scalar() {
  return FractionalData{Eigen::MatrixXd::Constant(1, 1, 2.0),
                        Eigen::MatrixXd::Constant(1, 1, 1.0), Vec({1.0}),
                        Vec({0.0}), Vec({1.0}), 1.0};
}

SolveOutcome SolveWithHistory(const Instance& inst) {
  const FractionalBifunction f(inst.data);
  SolverConfig config;
  config.record_history = true;
  return Solve(f, inst.set, DefaultStart(inst.set.dimension()), config);
}

TEST(SampleFeasiblePointsTest, PointsAreInsideAndSeeded) {
  const IntersectionSet set = ExampleSet({2, 4, 0});
  const auto a = SampleFeasiblePoints(set, 50, 9);
  const auto b = SampleFeasiblePoints(set, 50, 9);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(FeasibilityResidual(a[i], set), 0.0);
    EXPECT_EQ(a[i], b[i]);
  }
}

TEST(SampleFeasiblePointsTest, FailsOnEmptyOrUnboundedSets) {
  // [1,3]^10 misses the radius-3 ball.
  try {
    SampleFeasiblePoints(ExampleSet({1, 10, 0}), 1, 0);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSamplingFailure);
  }
  EXPECT_THROW(SampleFeasiblePoints(IntersectionSet({HalfspaceSet{Vec({1, 1}), 0}}), 1, 0),
               Error);
}

TEST(FejerAuditTest, HoldsOnSolverTrajectory) {
  const Instance inst = GenerateInstance({1, 5, 123}, 0);
  const SolveOutcome out = SolveWithHistory(inst);
  EXPECT_LE(FejerAudit(out.history, inst.set, 100, 1), 1e-9);
}

TEST(FejerAuditTest, HoldsAtFinalFeasibleIterate) {
  const Instance inst = GenerateInstance({3, 5, 8}, 1);
  const SolveOutcome out = SolveWithHistory(inst);
  const Eigen::VectorXd z = ProjectIntersectionDykstra(out.x_final, inst.set);
  ASSERT_LE(FeasibilityResidual(z, inst.set), 1e-9);
  const std::vector<Eigen::VectorXd> points = {z};
  EXPECT_LE(FejerViolation(out.history, inst.set, points), 1e-9);
}

TEST(FejerAuditTest, DetectsCorruptedTrajectory) {
  const Instance inst = GenerateInstance({1, 5, 123}, 0);
  SolveOutcome out = SolveWithHistory(inst);
  ASSERT_GT(out.history.size(), 10u);
  // Throw the iterate far beyond the step length.
  out.history[5].x_next[0] += 50.0;
  const std::vector<IterationRecord> one = {out.history[5]};
  EXPECT_GT(FejerAudit(one, inst.set, 100, 1), 0.0);
}

TEST(StarAuditTest, LinearReductionHalfspaceLevelSet) {
  const FractionalBifunction f(LinearReduction(2, Vec({0, 0})));
  const StarAuditResult r = StarDefinitionAudit(f, Vec({1, 2}), 2000, 3);
  EXPECT_GT(r.kept, 0);
  EXPECT_LT(r.worst_inner, 1e-10);
}

TEST(StarAuditTest, ScalarFractionalInstance) {
  // f(1, y) = 3 (y / (y + 1) - 1/2) < 0 exactly for -1 < y < 1, and g = 1.5,
  // so every kept sample has y - x < 0.
  const FractionalBifunction f(Scalar());
  const StarAuditResult r = StarDefinitionAudit(f, Vec({1.0}), 2000, 5, 1.5);
  EXPECT_GT(r.kept, 0);
  EXPECT_LT(r.worst_inner, 1e-10);
  EXPECT_GT(r.lipschitz_estimate, 0.0);
}

TEST(StarAuditTest, StationaryPointHasEmptyLevelSet) {
  const FractionalBifunction f(LinearReduction(2, Vec({-1, -1})));
  const StarAuditResult r = StarDefinitionAudit(f, Vec({1, 1}), 500, 7);
  EXPECT_EQ(r.kept, 0);
  EXPECT_EQ(r.worst_inner, -std::numeric_limits<double>::infinity());
}

TEST(Err3Test, OneDimensionalClosedForm) {
  // x_hat = 2, g(2, y) = 5 y / (y + 1), increasing on [1, 3], so the minimum
  // is 5/2 at y = 1 and g(2, 2) = 10/3.
  const FractionalBifunction f(Scalar());
  const IntersectionSet set({BoxSet{Vec({1}), Vec({3})}});
  const Err3Result r = Err3Gap(f, Vec({2.0}), set);
  EXPECT_FALSE(r.absolute);
  EXPECT_NEAR(r.minimizer[0], 1.0, 1e-12);
  EXPECT_NEAR(r.min_value, 2.5, 1e-12);
  EXPECT_NEAR(r.value_at_projection, 10.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.value, (10.0 / 3.0 - 2.5) / (10.0 / 3.0), 1e-9);

  // Projection first: x_k = 5 maps to 3.
  const Err3Result outside = Err3Gap(f, Vec({5.0}), set);
  EXPECT_NEAR(outside.projected[0], 3.0, 1e-10);
}

TEST(Err3Test, ZeroAtConstrainedMinimizer) {
  const FractionalBifunction f(Scalar());
  const IntersectionSet set({BoxSet{Vec({1}), Vec({3})}});
  EXPECT_NEAR(Err3Gap(f, Vec({1.0}), set).value, 0.0, 1e-12);
}

TEST(Err3Test, AbsoluteGapWhenValueVanishes) {
  // q = x - 1 vanishes at x = 1, so g(x, .) = 0 identically there.
  const FractionalBifunction f(LinearReduction(1, Vec({-1})));
  const IntersectionSet set({BoxSet{Vec({1}), Vec({3})}});
  const Err3Result r = Err3Gap(f, Vec({1.0}), set);
  EXPECT_TRUE(r.absolute);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(Err3Test, RejectsBall) {
  const Instance inst = GenerateInstance({1, 3, 0}, 0);
  try {
    Err3Gap(FractionalBifunction(inst.data), DefaultStart(3), inst.set);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPolyhedralSet);
  }
}

TEST(Err3Test, NonnegativeOnExampleThreeRuns) {
  int checked = 0;
  for (int index = 0; index < 12; ++index) {
    const Instance inst = GenerateInstance({3, 5, 2024}, index);
    const FractionalBifunction f(inst.data);
    SolveOutcome out;
    try {
      out = Solve(f, inst.set, DefaultStart(5), SolverConfig{});
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kDenominatorNonPositive);
      continue;
    }
    ++checked;
    const Err3Result r = Err3Gap(f, out.x_final, inst.set);
    EXPECT_GE(r.value, -1e-9);
    EXPECT_LE(FeasibilityResidual(r.minimizer, inst.set), 1e-8);
  }
  EXPECT_GE(checked, 5);
}

TEST(GridSolutionCheckTest, StationaryCandidateIsMinimizer) {
  const FractionalBifunction f(LinearReduction(2, Vec({-2, -2})));
  const IntersectionSet set({BoxSet{Vec({1, 1}), Vec({3, 3})}, BallSet{Vec({0, 0}), 3.0}});
  EXPECT_GE(GridSolutionCheck(f, set, Vec({2, 2}), 0.05), -1e-9);
}

TEST(GridSolutionCheckTest, InfeasibleCandidateStillMinimizesOverC) {
  const FractionalBifunction f(LinearReduction(2, Vec({0, 0})));
  const IntersectionSet set({BoxSet{Vec({1, 1}), Vec({3, 3})}});
  // f(x, y) = <x, y - x> with x = (0, 0) is identically zero.
  EXPECT_EQ(GridSolutionCheck(f, set, Vec({0, 0}), 0.1), 0.0);
  // With x = (4, 4) the minimum over C is at y = (1, 1): <x, y - x> = -24.
  EXPECT_NEAR(GridSolutionCheck(f, set, Vec({4, 4}), 0.1), -24.0, 1e-12);
}

TEST(GridSolutionCheckTest, RejectsHighDimension) {
  const FractionalBifunction f(LinearReduction(4, Eigen::VectorXd::Zero(4)));
  const IntersectionSet set({BoxSet{Eigen::VectorXd::Zero(4), Eigen::VectorXd::Ones(4)}});
  try {
    GridSolutionCheck(f, set, Eigen::VectorXd::Zero(4), 0.1);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
  }
}

TEST(AuditLineTest, Format) {
  EXPECT_EQ(FormatAuditLine(1e-12, std::nullopt, 0.25),
            "AUDIT fejer max_violation=1.000000e-12 star worst_inner=na "
            "err3=2.500000e-01");
}

}  // namespace
}  // namespace eqp
