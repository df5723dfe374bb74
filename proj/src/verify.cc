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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <variant>

#include "eqp/errors.h"

namespace eqp {
namespace {

constexpr double kStrictLevel = -1e-9;

bool ExactlyInside(const Eigen::VectorXd& x, const IntersectionSet& set) {
  for (const ConvexSet& component : set.components()) {
    if (Project(x, component) != x) return false;
  }
  return true;
}

}  // namespace

std::vector<Eigen::VectorXd> SampleFeasiblePoints(const IntersectionSet& set,
                                                  int count,
                                                  std::uint64_t seed) {
  const Bounds bounds = IntersectionBounds(set);
  if (!bounds.IsFinite()) {
    throw Error(ErrorCode::kSamplingFailure,
                "intersection has no finite bounding box");
  }
  if ((bounds.lower.array() > bounds.upper.array()).any()) {
    throw Error(ErrorCode::kSamplingFailure, "bounding box is empty");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::VectorXd> points;
  points.reserve(count);
  Eigen::VectorXd y(set.dimension());
  long misses = 0;
  while (static_cast<int>(points.size()) < count) {
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      y[i] = bounds.lower[i] + unit(rng) * (bounds.upper[i] - bounds.lower[i]);
    }
    if (ExactlyInside(y, set)) {
      points.push_back(y);
      misses = 0;
    } else if (++misses >= kMaxRejectionDraws) {
      throw Error(ErrorCode::kSamplingFailure,
                  "no feasible point in " + std::to_string(kMaxRejectionDraws) +
                      " rejection draws");
    }
  }
  return points;
}

double FejerGap(const IterationRecord& record, const IntersectionSet& set,
                const Eigen::VectorXd& z) {
  const double lambda = record.lambda;
  const double alpha = record.alpha;
  const Eigen::VectorXd target = AveragedProjection(record.x - alpha * record.g, set);
  const double lhs = (record.x_next - z).squaredNorm();
  const double rhs = (record.x - z).squaredNorm() +
                     2.0 * lambda * alpha * record.g.dot(z - record.x) +
                     lambda * alpha * alpha -
                     lambda * (1.0 - lambda) * (record.x - target).squaredNorm();
  return lhs - rhs;
}

double FejerViolation(std::span<const IterationRecord> history,
                      const IntersectionSet& set,
                      std::span<const Eigen::VectorXd> points) {
  if (history.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Fejér audit needs a history");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (const IterationRecord& record : history) {
    for (const Eigen::VectorXd& z : points) {
      worst = std::max(worst, FejerGap(record, set, z));
    }
  }
  return worst;
}

double FejerAudit(std::span<const IterationRecord> history,
                  const IntersectionSet& set, int z_samples,
                  std::uint64_t seed) {
  const std::vector<Eigen::VectorXd> points =
      SampleFeasiblePoints(set, z_samples, seed);
  return FejerViolation(history, set, points);
}

StarAuditResult StarDefinitionAudit(const EquilibriumBifunction& bifunction,
                                    const Eigen::VectorXd& x, int samples,
                                    std::uint64_t seed, double radius) {
  StarAuditResult result;
  result.worst_inner = -std::numeric_limits<double>::infinity();
  const Eigen::VectorXd g = bifunction.StarSubgradient(x);
  const double g_norm = g.norm();
  const Eigen::VectorXd g_hat =
      g_norm > 0.0 ? Eigen::VectorXd(g / g_norm)
                   : Eigen::VectorXd(Eigen::VectorXd::Zero(x.size()));
  const double f_xx = bifunction.Evaluate(x, x);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  struct Sample {
    Eigen::VectorXd y;
    double f;
  };
  std::vector<Sample> kept_closed;
  std::optional<Sample> previous;
  Eigen::VectorXd y(x.size());
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = x[i] + radius * unit(rng);
    double f = 0.0;
    try {
      f = bifunction.Evaluate(x, y);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDenominatorNonPositive) continue;
      throw;
    }
    ++result.sampled;
    const double dist_x = (y - x).norm();
    if (dist_x > 0.0) {
      result.lipschitz_estimate =
          std::max(result.lipschitz_estimate, std::abs(f - f_xx) / dist_x);
    }
    if (previous) {
      const double dist = (y - previous->y).norm();
      if (dist > 0.0) {
        result.lipschitz_estimate = std::max(
            result.lipschitz_estimate, std::abs(f - previous->f) / dist);
      }
    }
    previous = Sample{y, f};
    if (f <= f_xx) kept_closed.push_back(Sample{y, f});
    if (f < kStrictLevel) {
      ++result.kept;
      result.worst_inner = std::max(result.worst_inner, g_hat.dot(y - x));
    }
  }
  for (const Sample& sample : kept_closed) {
    const double lower = result.lipschitz_estimate * g_hat.dot(sample.y - x);
    result.lipschitz_bound_violation = std::max(
        result.lipschitz_bound_violation, lower - (sample.f - f_xx));
  }
  return result;
}

void PolyhedralRows(const IntersectionSet& set, Eigen::MatrixXd& G,
                    Eigen::VectorXd& h) {
  const int n = set.dimension();
  std::vector<Eigen::RowVectorXd> rows;
  std::vector<double> rhs;
  for (const ConvexSet& component : set.components()) {
    if (const auto* box = std::get_if<BoxSet>(&component)) {
      for (int i = 0; i < n; ++i) {
        Eigen::RowVectorXd upper = Eigen::RowVectorXd::Zero(n);
        upper[i] = 1.0;
        rows.push_back(upper);
        rhs.push_back(box->upper[i]);
        rows.push_back(-upper);
        rhs.push_back(-box->lower[i]);
      }
    } else if (const auto* half = std::get_if<HalfspaceSet>(&component)) {
      rows.push_back(-half->normal.transpose());
      rhs.push_back(-half->offset);
    } else {
      throw Error(ErrorCode::kNonPolyhedralSet,
                  "err3 needs a polyhedral feasible set; found a ball");
    }
  }
  G.resize(static_cast<Eigen::Index>(rows.size()), n);
  h.resize(static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    G.row(static_cast<Eigen::Index>(r)) = rows[r];
    h[static_cast<Eigen::Index>(r)] = rhs[r];
  }
}

Err3Result Err3Gap(const FractionalBifunction& bifunction,
                   const Eigen::VectorXd& xk, const IntersectionSet& set,
                   const DykstraOptions& dykstra) {
  FractionalProgram fp;
  PolyhedralRows(set, fp.G, fp.h);

  Err3Result result;
  result.projected = ProjectIntersectionDykstra(xk, set, dykstra);
  const FractionalData& data = bifunction.data();
  const Eigen::VectorXd q = data.A * result.projected + data.b;
  fp.num = data.A1.transpose() * q;
  fp.num0 = q.dot(data.b1);
  fp.den = data.c;
  fp.den0 = data.d;

  const FractionalResult inner = SolveFractional(fp);
  if (inner.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kLpNotOptimal,
                "err3 subproblem is " + std::string(LpStatusName(inner.status)));
  }
  result.minimizer = inner.point;
  result.min_value = inner.value;
  result.value_at_projection =
      bifunction.FrozenRatio(result.projected, result.projected);
  const double gap = result.value_at_projection - result.min_value;
  if (std::abs(result.value_at_projection) < 1e-12) {
    result.absolute = true;
    result.value = gap;
  } else {
    result.value = gap / result.value_at_projection;
  }
  return result;
}

double GridSolutionCheck(const EquilibriumBifunction& bifunction,
                         const IntersectionSet& set,
                         const Eigen::VectorXd& x_cand, double resolution,
                         double membership_tol) {
  const int n = set.dimension();
  if (n > kMaxGridDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "grid check supports at most " +
                    std::to_string(kMaxGridDimension) + " dimensions, got " +
                    std::to_string(n));
  }
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid resolution must be > 0");
  }
  const Bounds bounds = IntersectionBounds(set);
  if (!bounds.IsFinite()) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid check needs a bounded feasible set");
  }
  std::vector<long> steps(n);
  for (int i = 0; i < n; ++i) {
    const double span = bounds.upper[i] - bounds.lower[i];
    steps[i] = span <= 0.0
                   ? 0
                   : static_cast<long>(std::ceil(span / resolution - 1e-9));
  }
  double min_f = std::numeric_limits<double>::infinity();
  std::vector<long> index(n, 0);
  Eigen::VectorXd y(n);
  for (;;) {
    for (int i = 0; i < n; ++i) {
      y[i] = std::min(bounds.lower[i] + static_cast<double>(index[i]) * resolution,
                      bounds.upper[i]);
    }
    if (FeasibilityResidual(y, set) <= membership_tol) {
      min_f = std::min(min_f, bifunction.Evaluate(x_cand, y));
    }
    int axis = 0;
    while (axis < n && ++index[axis] > steps[axis]) index[axis++] = 0;
    if (axis == n) break;
  }
  return min_f;
}

std::string FormatAuditLine(std::optional<double> fejer_violation,
                            std::optional<double> star_worst_inner,
                            std::optional<double> err3) {
  auto fmt = [](std::optional<double> v) -> std::string {
    if (!v) return "na";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", *v);
    return buf;
  };
  return "AUDIT fejer max_violation=" + fmt(fejer_violation) +
         " star worst_inner=" + fmt(star_worst_inner) +
         " err3=" + fmt(err3);
}

}  // namespace eqp
