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

// Equilibrium bifunctions f(x, y) with a star-subgradient oracle, and the
// affine-fractional benchmark family
//
//   f(x, y) = <Ax + b, (A1 y + b1) / (c'y + d) - (A1 x + b1) / (c'x + d)>.

#ifndef EQP_PROBLEM_H_
#define EQP_PROBLEM_H_

#include "Eigen/Core"

namespace eqp {

inline constexpr double kDefaultDenominatorTol = 1e-12;

// f(x, .) is quasiconvex and f(x, x) = 0. StarSubgradient(x) returns some g
// with <g, y - x> < 0 for every y in the strict level set {y : f(x, y) < 0}.
// When the level set is nonsmooth any element may be returned. The returned
// vector is not normalized.
class EquilibriumBifunction {
 public:
  virtual ~EquilibriumBifunction() = default;

  virtual int dimension() const = 0;
  virtual double Evaluate(const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) const = 0;
  virtual Eigen::VectorXd StarSubgradient(const Eigen::VectorXd& x) const = 0;
};

struct FractionalData {
  Eigen::MatrixXd A;
  Eigen::MatrixXd A1;
  Eigen::VectorXd b;
  Eigen::VectorXd b1;
  Eigen::VectorXd c;
  double d = 0.0;
};

class FractionalBifunction final : public EquilibriumBifunction {
 public:
  // Throws kDimensionMismatch when the data shapes disagree.
  explicit FractionalBifunction(FractionalData data,
                                double denominator_tol = kDefaultDenominatorTol);

  int dimension() const override { return static_cast<int>(data_.b.size()); }
  const FractionalData& data() const { return data_; }

  // Both require c'x + d > denominator_tol (and likewise for y), otherwise
  // throw kDenominatorNonPositive.
  double Evaluate(const Eigen::VectorXd& x,
                  const Eigen::VectorXd& y) const override;

  // With q = Ax + b and kappa = <q, A1 x + b1> / (c'x + d), f(x, .) is the
  // ratio of a(y) = q'(A1 y + b1) - kappa (c'y + d) over c'y + d, and a(x) = 0.
  // The gradient of the affine numerator, A1'q - kappa c, is a
  // star-subgradient of f(x, .) at x.
  Eigen::VectorXd StarSubgradient(const Eigen::VectorXd& x) const override;

  // <Ax + b, (A1 y + b1) / (c'y + d)>: f(x, y) plus a term constant in y.
  double FrozenRatio(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  double Denominator(const Eigen::VectorXd& x) const;

 private:
  double CheckedDenominator(const Eigen::VectorXd& x) const;
  void CheckDimension(const Eigen::VectorXd& x) const;

  FractionalData data_;
  double denominator_tol_;
};

// A'[A1 (c'x) - (A1 x) c'] + A'[A1 d - b1 c']. The bifunction is monotone on C
// iff this is positive semidefinite on C; symmetry gives paramonotonicity.
Eigen::MatrixXd MonotonicityMatrix(const FractionalData& data,
                                   const Eigen::VectorXd& x);

struct MonotonicityDiagnostic {
  double min_symmetric_eigenvalue = 0.0;
  double asymmetry_norm = 0.0;  // Frobenius norm of M - M'.
  bool positive_semidefinite(double tol = 1e-10) const {
    return min_symmetric_eigenvalue >= -tol;
  }
};

MonotonicityDiagnostic DiagnoseMonotonicity(const Eigen::MatrixXd& matrix);

}  // namespace eqp

#endif  // EQP_PROBLEM_H_
