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

#include "eqp/simplex.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "eqp/errors.h"

namespace eqp {
namespace {

// Dense tableau. The last row holds reduced costs, the last column the
// right-hand side; the objective value is -(bottom-right entry).
class Tableau {
 public:
  Tableau(int rows, int cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)),
                                basis_(rows, -1) {}

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double& at(int r, int c) { return t_(r, c); }
  double at(int r, int c) const { return t_(r, c); }
  double& rhs(int r) { return t_(r, cols()); }
  double rhs(int r) const { return t_(r, cols()); }
  double& cost(int c) { return t_(rows(), c); }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }

  void Pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i <= rows(); ++i) {
      if (i == r) continue;
      const double factor = t_(i, c);
      if (factor != 0.0) t_.row(i) -= factor * t_.row(r);
    }
    basis_[r] = c;
  }

  // Resets the cost row to `costs` (size cols()) and prices out the basis.
  void SetCosts(const Eigen::VectorXd& costs) {
    t_.row(rows()).setZero();
    t_.row(rows()).head(cols()) = costs.transpose();
    for (int r = 0; r < rows(); ++r) {
      const double cb = costs[basis_[r]];
      if (cb != 0.0) t_.row(rows()) -= cb * t_.row(r);
    }
  }

  double objective() const { return -t_(rows(), cols()); }

 private:
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

enum class PhaseOutcome { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column enters; among minimum-ratio
// rows the one whose basic variable has the lowest index leaves.
PhaseOutcome RunPhase(Tableau& tab, int allowed_cols, double tol,
                      long max_pivots, long& pivots) {
  for (;;) {
    int enter = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      if (tab.cost(j) < -tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return PhaseOutcome::kOptimal;

    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < tab.rows(); ++r) {
      const double coef = tab.at(r, enter);
      if (coef <= tol) continue;
      const double ratio = tab.rhs(r) / coef;
      if (leave < 0 || ratio < best - 1e-12 * (1.0 + std::abs(best))) {
        leave = r;
        best = ratio;
      } else if (std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best)) &&
                 tab.basis(r) < tab.basis(leave)) {
        leave = r;
        best = std::min(best, ratio);
      }
    }
    if (leave < 0) return PhaseOutcome::kUnbounded;

    if (++pivots > max_pivots) {
      throw Error(ErrorCode::kMaxPivots,
                  "simplex exceeded " + std::to_string(max_pivots) + " pivots");
    }
    tab.Pivot(leave, enter);
  }
}

}  // namespace

void ValidateLinearProgram(const LinearProgram& lp) {
  const Eigen::Index n = lp.objective.size();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "LP has no variables");
  }
  if (lp.eq_matrix.rows() != lp.eq_rhs.size() ||
      (lp.eq_matrix.rows() > 0 && lp.eq_matrix.cols() != n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP equality block has inconsistent dimensions");
  }
  if (lp.ineq_matrix.rows() != lp.ineq_rhs.size() ||
      (lp.ineq_matrix.rows() > 0 && lp.ineq_matrix.cols() != n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP inequality block has inconsistent dimensions");
  }
  if (!lp.nonneg_mask.empty() &&
      lp.nonneg_mask.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP nonneg_mask size differs from the variable count");
  }
  bool any_bound = lp.nonneg_mask.empty();
  for (bool b : lp.nonneg_mask) any_bound = any_bound || b;
  if (lp.eq_rhs.size() + lp.ineq_rhs.size() == 0 && !any_bound) {
    throw Error(ErrorCode::kInvalidArgument,
                "LP has neither constraint rows nor sign bounds");
  }
}

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kUnbounded:
      return "Unbounded";
    case LpStatus::kInfeasible:
      return "Infeasible";
  }
  return "Unknown";
}

LpResult SimplexSolve(const LinearProgram& lp, const SimplexOptions& options) {
  ValidateLinearProgram(lp);
  const int n = lp.num_variables();
  const int m_eq = static_cast<int>(lp.eq_rhs.size());
  const int m_in = static_cast<int>(lp.ineq_rhs.size());
  const int m = m_eq + m_in;
  const double tol = options.pivot_tol;

  // Free variables are split as v = v_plus - v_minus.
  std::vector<int> plus_col(n), minus_col(n, -1);
  int num_struct = 0;
  for (int j = 0; j < n; ++j) plus_col[j] = num_struct++;
  for (int j = 0; j < n; ++j) {
    const bool nonneg = lp.nonneg_mask.empty() || lp.nonneg_mask[j];
    if (!nonneg) minus_col[j] = num_struct++;
  }
  const int slack_start = num_struct;
  const int art_start = slack_start + m_in;
  const int total_cols = art_start + m;

  Tableau tab(m, total_cols);
  auto fill_row = [&](int r, const Eigen::RowVectorXd& coeffs, double rhs) {
    for (int j = 0; j < n; ++j) {
      tab.at(r, plus_col[j]) = coeffs[j];
      if (minus_col[j] >= 0) tab.at(r, minus_col[j]) = -coeffs[j];
    }
    tab.rhs(r) = rhs;
  };
  for (int i = 0; i < m_eq; ++i) {
    fill_row(i, lp.eq_matrix.row(i), lp.eq_rhs[i]);
  }
  for (int i = 0; i < m_in; ++i) {
    fill_row(m_eq + i, lp.ineq_matrix.row(i), lp.ineq_rhs[i]);
    tab.at(m_eq + i, slack_start + i) = 1.0;
  }
  for (int r = 0; r < m; ++r) {
    if (tab.rhs(r) < 0.0) {
      for (int c = 0; c < art_start; ++c) tab.at(r, c) = -tab.at(r, c);
      tab.rhs(r) = -tab.rhs(r);
    }
    tab.at(r, art_start + r) = 1.0;
    tab.set_basis(r, art_start + r);
  }

  const long max_pivots = options.max_pivots > 0
                              ? options.max_pivots
                              : 100000L * static_cast<long>(m + total_cols);
  LpResult result;

  // Phase 1: minimize the sum of artificials.
  Eigen::VectorXd phase1_costs = Eigen::VectorXd::Zero(total_cols);
  phase1_costs.tail(m).setOnes();
  tab.SetCosts(phase1_costs);
  RunPhase(tab, total_cols, tol, max_pivots, result.pivots);
  double rhs_scale = 1.0;
  for (int r = 0; r < m; ++r) rhs_scale = std::max(rhs_scale, tab.rhs(r));
  if (tab.objective() > tol * rhs_scale) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Pivot remaining (zero-level) artificials out where possible. A row with
  // no usable column is redundant; its artificial stays basic at zero and can
  // never re-enter because phase 2 excludes artificial columns.
  for (int r = 0; r < m; ++r) {
    if (tab.basis(r) < art_start) continue;
    int best = -1;
    for (int c = 0; c < art_start; ++c) {
      if (std::abs(tab.at(r, c)) > tol &&
          (best < 0 || std::abs(tab.at(r, c)) > std::abs(tab.at(r, best)))) {
        best = c;
      }
    }
    if (best >= 0) {
      tab.Pivot(r, best);
      ++result.pivots;
    }
  }

  // Phase 2.
  Eigen::VectorXd costs = Eigen::VectorXd::Zero(total_cols);
  for (int j = 0; j < n; ++j) {
    costs[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) costs[minus_col[j]] = -lp.objective[j];
  }
  tab.SetCosts(costs);
  if (RunPhase(tab, art_start, tol, max_pivots, result.pivots) ==
      PhaseOutcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  Eigen::VectorXd column_values = Eigen::VectorXd::Zero(total_cols);
  for (int r = 0; r < m; ++r) column_values[tab.basis(r)] = tab.rhs(r);
  result.point.resize(n);
  for (int j = 0; j < n; ++j) {
    result.point[j] = column_values[plus_col[j]];
    if (minus_col[j] >= 0) result.point[j] -= column_values[minus_col[j]];
  }
  result.status = LpStatus::kOptimal;
  result.value = lp.objective.dot(result.point);
  return result;
}

double FractionalProgram::Ratio(const Eigen::VectorXd& y) const {
  return (num.dot(y) + num0) / (den.dot(y) + den0);
}

Eigen::VectorXd CharnesCooperProgram::Recover(
    const Eigen::VectorXd& lp_point) const {
  if (lp_point.size() != dimension + 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "Charnes-Cooper point has the wrong dimension");
  }
  const double t = lp_point[dimension];
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "Charnes-Cooper scale variable t is not positive");
  }
  return lp_point.head(dimension) / t;
}

CharnesCooperProgram CharnesCooper(const FractionalProgram& fp) {
  const Eigen::Index n = fp.num.size();
  if (fp.den.size() != n || fp.G.cols() != n || fp.G.rows() != fp.h.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "fractional program has inconsistent dimensions");
  }
  if (fp.den0 == 0.0 && (fp.den.array() == 0.0).all()) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "denominator is identically zero");
  }
  CharnesCooperProgram cc;
  cc.dimension = static_cast<int>(n);
  LinearProgram& lp = cc.lp;
  lp.objective.resize(n + 1);
  lp.objective << fp.num, fp.num0;
  lp.ineq_matrix.resize(fp.G.rows(), n + 1);
  lp.ineq_matrix << fp.G, -fp.h;
  lp.ineq_rhs = Eigen::VectorXd::Zero(fp.G.rows());
  lp.eq_matrix.resize(1, n + 1);
  lp.eq_matrix << fp.den.transpose(), fp.den0;
  lp.eq_rhs = Eigen::VectorXd::Ones(1);
  lp.nonneg_mask.assign(n + 1, false);
  lp.nonneg_mask[n] = true;
  return cc;
}

FractionalResult SolveFractional(const FractionalProgram& fp,
                                 const SimplexOptions& options) {
  const CharnesCooperProgram cc = CharnesCooper(fp);
  const LpResult lp = SimplexSolve(cc.lp, options);
  FractionalResult result;
  result.status = lp.status;
  if (lp.status != LpStatus::kOptimal) return result;
  result.point = cc.Recover(lp.point);
  const double den = fp.den.dot(result.point) + fp.den0;
  if (!(den > 0.0)) {
    throw Error(ErrorCode::kDenominatorNonPositive,
                "denominator is not positive at the optimal vertex");
  }
  result.value = lp.value;
  return result;
}

}  // namespace eqp
