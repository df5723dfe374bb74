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

// Independent checks on solver output: the per-iteration Fejér-type
// inequality, the star-subgradient definition, the relative optimality gap
// of the frozen fractional subproblem (err3), and brute-force grid checks of
// the equilibrium condition.

#ifndef EQP_VERIFY_H_
#define EQP_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "eqp/geometry.h"
#include "eqp/problem.h"
#include "eqp/simplex.h"
#include "eqp/solver.h"

namespace eqp {

inline constexpr long kMaxRejectionDraws = 100000;

// Draws `count` points of the intersection by rejection from its bounding
// box. Accepted points satisfy every component constraint exactly. Throws
// kSamplingFailure when the bounding box is unbounded or when
// kMaxRejectionDraws consecutive draws miss the set.
std::vector<Eigen::VectorXd> SampleFeasiblePoints(const IntersectionSet& set,
                                                  int count,
                                                  std::uint64_t seed);

// LHS - RHS of
//   ||x_{k+1} - z||^2 <= ||x_k - z||^2 + 2 lambda alpha <g, z - x_k>
//                        + lambda alpha^2
//                        - lambda (1 - lambda) ||x_k - P_w(x_k - alpha g)||^2
// for one recorded iteration; nonpositive (up to rounding) when z is in C.
double FejerGap(const IterationRecord& record, const IntersectionSet& set,
                const Eigen::VectorXd& z);

// Maximum FejerGap over every record and every point of `points`.
double FejerViolation(std::span<const IterationRecord> history,
                      const IntersectionSet& set,
                      std::span<const Eigen::VectorXd> points);

// FejerViolation against `z_samples` seeded feasible samples.
double FejerAudit(std::span<const IterationRecord> history,
                  const IntersectionSet& set, int z_samples,
                  std::uint64_t seed);

struct StarAuditResult {
  // max <g/||g||, y - x> over samples with f(x, y) < -1e-9; -inf if none.
  double worst_inner = 0.0;
  int kept = 0;
  int sampled = 0;
  // Advisory: largest sampled difference quotient of f(x, .), and the largest
  // violation of L <g, y - x> <= f(x, y) - f(x, x) over the closed level set.
  double lipschitz_estimate = 0.0;
  double lipschitz_bound_violation = 0.0;
};

// Samples y uniformly in the box x +- radius. Points where the bifunction is
// not defined (kDenominatorNonPositive) are skipped.
StarAuditResult StarDefinitionAudit(const EquilibriumBifunction& bifunction,
                                    const Eigen::VectorXd& x, int samples,
                                    std::uint64_t seed, double radius = 1.0);

// Rows G y <= h describing a box/halfspace intersection. Throws
// kNonPolyhedralSet if a ball is present.
void PolyhedralRows(const IntersectionSet& set, Eigen::MatrixXd& G,
                    Eigen::VectorXd& h);

struct Err3Result {
  double value = 0.0;
  // True when g(x, x) was too close to zero and `value` is the absolute gap.
  bool absolute = false;
  Eigen::VectorXd projected;  // P_C(x_k)
  Eigen::VectorXd minimizer;  // argmin_{y in C} g(P_C(x_k), y)
  double value_at_projection = 0.0;
  double min_value = 0.0;
};

// With x = P_C(x_k) (Dykstra) and g(x, y) = <Ax + b, (A1 y + b1)/(c'y + d)>:
//   err3 = (g(x, x) - min_{y in C} g(x, y)) / g(x, x).
// The inner minimum is a linear-fractional program over the polytope C,
// solved by Charnes-Cooper + simplex. Throws kLpNotOptimal if the LP is
// not solved to optimality.
Err3Result Err3Gap(const FractionalBifunction& bifunction,
                   const Eigen::VectorXd& xk, const IntersectionSet& set,
                   const DykstraOptions& dykstra = {});

inline constexpr int kMaxGridDimension = 3;

// min f(x_cand, y) over grid points y of C's bounding box (spacing
// `resolution`) with feasibility residual <= membership_tol. Returns +inf if
// no grid point is feasible. Throws kDimensionTooLarge above three
// dimensions.
double GridSolutionCheck(const EquilibriumBifunction& bifunction,
                         const IntersectionSet& set,
                         const Eigen::VectorXd& x_cand, double resolution,
                         double membership_tol = kDefaultMembershipTol);

// `AUDIT fejer max_violation=<v> star worst_inner=<w> err3=<e>`; values not
// computed print as "na".
std::string FormatAuditLine(std::optional<double> fejer_violation,
                            std::optional<double> star_worst_inner,
                            std::optional<double> err3);

}  // namespace eqp

#endif  // EQP_VERIFY_H_
