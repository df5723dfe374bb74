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

#include "eqp/problem.h"

#include <string>
#include <utility>

#include "Eigen/Eigenvalues"
#include "eqp/errors.h"

namespace eqp {

FractionalBifunction::FractionalBifunction(FractionalData data,
                                           double denominator_tol)
    : data_(std::move(data)), denominator_tol_(denominator_tol) {
  const Eigen::Index n = data_.b.size();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "fractional data is empty");
  }
  if (data_.A.rows() != n || data_.A.cols() != n || data_.A1.rows() != n ||
      data_.A1.cols() != n || data_.b1.size() != n || data_.c.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "fractional data shapes are inconsistent with n = " +
                    std::to_string(n));
  }
}

void FractionalBifunction::CheckDimension(const Eigen::VectorXd& x) const {
  if (x.size() != data_.b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has dimension " + std::to_string(x.size()) +
                    ", bifunction has dimension " +
                    std::to_string(data_.b.size()));
  }
}

double FractionalBifunction::Denominator(const Eigen::VectorXd& x) const {
  CheckDimension(x);
  return data_.c.dot(x) + data_.d;
}

double FractionalBifunction::CheckedDenominator(
    const Eigen::VectorXd& x) const {
  const double den = Denominator(x);
  if (!(den > denominator_tol_)) {
    throw Error(ErrorCode::kDenominatorNonPositive,
                "c'x + d = " + std::to_string(den) + " is not positive");
  }
  return den;
}

double FractionalBifunction::Evaluate(const Eigen::VectorXd& x,
                                      const Eigen::VectorXd& y) const {
  const double den_x = CheckedDenominator(x);
  const double den_y = CheckedDenominator(y);
  const Eigen::VectorXd q = data_.A * x + data_.b;
  const Eigen::VectorXd ratio_y = (data_.A1 * y + data_.b1) / den_y;
  const Eigen::VectorXd ratio_x = (data_.A1 * x + data_.b1) / den_x;
  return q.dot(ratio_y - ratio_x);
}

Eigen::VectorXd FractionalBifunction::StarSubgradient(
    const Eigen::VectorXd& x) const {
  const double den = CheckedDenominator(x);
  const Eigen::VectorXd q = data_.A * x + data_.b;
  const double kappa = q.dot(data_.A1 * x + data_.b1) / den;
  return data_.A1.transpose() * q - kappa * data_.c;
}

double FractionalBifunction::FrozenRatio(const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y) const {
  CheckDimension(x);
  const double den_y = CheckedDenominator(y);
  return (data_.A * x + data_.b).dot(data_.A1 * y + data_.b1) / den_y;
}

Eigen::MatrixXd MonotonicityMatrix(const FractionalData& data,
                                   const Eigen::VectorXd& x) {
  const Eigen::Index n = data.b.size();
  if (x.size() != n || data.A.rows() != n || data.A.cols() != n ||
      data.A1.rows() != n || data.A1.cols() != n || data.b1.size() != n ||
      data.c.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "MonotonicityMatrix: inconsistent dimensions");
  }
  const double cx = data.c.dot(x);
  const Eigen::MatrixXd first =
      data.A1 * cx - (data.A1 * x) * data.c.transpose();
  const Eigen::MatrixXd second = data.A1 * data.d - data.b1 * data.c.transpose();
  return data.A.transpose() * (first + second);
}

MonotonicityDiagnostic DiagnoseMonotonicity(const Eigen::MatrixXd& matrix) {
  const Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym,
                                                     Eigen::EigenvaluesOnly);
  MonotonicityDiagnostic diag;
  diag.min_symmetric_eigenvalue = eig.eigenvalues().minCoeff();
  diag.asymmetry_norm = (matrix - matrix.transpose()).norm();
  return diag;
}

}  // namespace eqp
