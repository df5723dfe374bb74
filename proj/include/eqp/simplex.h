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

// Dense two-phase primal simplex with Bland's rule, and the Charnes-Cooper
// reduction of a linear-fractional program over a polytope to an LP.
// Intended for desk-scale problems (tens of rows and columns).

#ifndef EQP_SIMPLEX_H_
#define EQP_SIMPLEX_H_

#include <string_view>
#include <vector>

#include "Eigen/Core"

namespace eqp {

// minimize objective'v
// subject to eq_matrix v = eq_rhs, ineq_matrix v <= ineq_rhs,
//            v_j >= 0 for every j with nonneg_mask[j] (free otherwise).
// An empty nonneg_mask means every variable is sign-constrained.
struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd eq_matrix;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_matrix;
  Eigen::VectorXd ineq_rhs;
  std::vector<bool> nonneg_mask;

  int num_variables() const { return static_cast<int>(objective.size()); }
};

// Throws kDimensionMismatch / kInvalidArgument on malformed programs.
void ValidateLinearProgram(const LinearProgram& lp);

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

std::string_view LpStatusName(LpStatus status);

struct SimplexOptions {
  double pivot_tol = 1e-9;
  // 0 selects 1e5 * (rows + columns of the standard form).
  long max_pivots = 0;
};

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;     // valid when kOptimal
  Eigen::VectorXd point;  // vertex solution when kOptimal
  long pivots = 0;
};

// Throws kMaxPivots if the pivot budget runs out, which indicates a bug
// rather than a property of the program.
LpResult SimplexSolve(const LinearProgram& lp,
                      const SimplexOptions& options = {});

// minimize (num'y + num0) / (den'y + den0) subject to G y <= h. The
// denominator must be positive on the polytope.
struct FractionalProgram {
  Eigen::VectorXd num;
  double num0 = 0.0;
  Eigen::VectorXd den;
  double den0 = 0.0;
  Eigen::MatrixXd G;
  Eigen::VectorXd h;

  double Ratio(const Eigen::VectorXd& y) const;
};

// LP over (v, t) = (y t, t) with t = 1 / (den'y + den0):
//   minimize num'v + num0 t
//   subject to G v - h t <= 0, den'v + den0 t = 1, t >= 0.
// Variables are ordered v_1..v_n, t. Recover maps an LP point back to y.
struct CharnesCooperProgram {
  LinearProgram lp;
  int dimension = 0;

  // y = v / t. Requires t > 0.
  Eigen::VectorXd Recover(const Eigen::VectorXd& lp_point) const;
};

// Throws kDegenerateDenominator when den and den0 are all zero.
CharnesCooperProgram CharnesCooper(const FractionalProgram& fp);

struct FractionalResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  Eigen::VectorXd point;  // y
};

// Solves through CharnesCooper + SimplexSolve. Throws
// kDenominatorNonPositive if the recovered vertex has a nonpositive
// denominator.
FractionalResult SolveFractional(const FractionalProgram& fp,
                                 const SimplexOptions& options = {});

}  // namespace eqp

#endif  // EQP_SIMPLEX_H_
