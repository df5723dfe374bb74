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

#include "eqp/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "eqp/errors.h"

namespace eqp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckDimension(const Eigen::VectorXd& x, Eigen::Index expected,
                    const char* what) {
  if (x.size() != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": point has dimension " +
                    std::to_string(x.size()) + ", set has dimension " +
                    std::to_string(expected));
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void ValidateSet(const ConvexSet& set) {
  std::visit(
      Overloaded{
          [](const BoxSet& box) {
            if (box.lower.size() != box.upper.size()) {
              throw Error(ErrorCode::kDimensionMismatch,
                          "box lower/upper dimensions differ");
            }
            if (box.lower.size() == 0) {
              throw Error(ErrorCode::kInvalidArgument, "box is empty");
            }
            for (Eigen::Index i = 0; i < box.lower.size(); ++i) {
              if (!(box.lower[i] <= box.upper[i])) {
                throw Error(ErrorCode::kInvalidArgument,
                            "box lower bound exceeds upper bound at index " +
                                std::to_string(i));
              }
            }
          },
          [](const BallSet& ball) {
            if (ball.center.size() == 0) {
              throw Error(ErrorCode::kInvalidArgument, "ball is empty");
            }
            if (!(ball.radius >= 0.0) || !std::isfinite(ball.radius)) {
              throw Error(ErrorCode::kInvalidArgument,
                          "ball radius must be finite and nonnegative");
            }
          },
          [](const HalfspaceSet& halfspace) {
            if (halfspace.normal.size() == 0) {
              throw Error(ErrorCode::kInvalidArgument, "halfspace is empty");
            }
            if (!(halfspace.normal.squaredNorm() > 0.0)) {
              throw Error(ErrorCode::kInvalidArgument,
                          "halfspace normal vector is zero");
            }
          },
      },
      set);
}

int SetDimension(const ConvexSet& set) {
  return std::visit(
      Overloaded{
          [](const BoxSet& box) { return static_cast<int>(box.lower.size()); },
          [](const BallSet& ball) {
            return static_cast<int>(ball.center.size());
          },
          [](const HalfspaceSet& h) {
            return static_cast<int>(h.normal.size());
          },
      },
      set);
}

Eigen::VectorXd ProjectBox(const Eigen::VectorXd& x, const BoxSet& box) {
  CheckDimension(x, box.lower.size(), "ProjectBox");
  return x.cwiseMax(box.lower).cwiseMin(box.upper);
}

Eigen::VectorXd ProjectBall(const Eigen::VectorXd& x, const BallSet& ball) {
  CheckDimension(x, ball.center.size(), "ProjectBall");
  const Eigen::VectorXd offset = x - ball.center;
  const double dist = offset.norm();
  if (dist <= ball.radius) return x;
  return ball.center + (ball.radius / dist) * offset;
}

Eigen::VectorXd ProjectHalfspace(const Eigen::VectorXd& x,
                                 const HalfspaceSet& halfspace) {
  CheckDimension(x, halfspace.normal.size(), "ProjectHalfspace");
  const double norm_sq = halfspace.normal.squaredNorm();
  if (!(norm_sq > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "halfspace normal vector is zero");
  }
  const double value = halfspace.normal.dot(x);
  if (value >= halfspace.offset) return x;
  return x + ((halfspace.offset - value) / norm_sq) * halfspace.normal;
}

Eigen::VectorXd Project(const Eigen::VectorXd& x, const ConvexSet& set) {
  return std::visit(
      Overloaded{
          [&x](const BoxSet& box) { return ProjectBox(x, box); },
          [&x](const BallSet& ball) { return ProjectBall(x, ball); },
          [&x](const HalfspaceSet& h) { return ProjectHalfspace(x, h); },
      },
      set);
}

double DistanceToSet(const Eigen::VectorXd& x, const ConvexSet& set) {
  return (x - Project(x, set)).norm();
}

bool Bounds::IsFinite() const {
  return lower.allFinite() && upper.allFinite();
}

Bounds SetBounds(const ConvexSet& set) {
  return std::visit(
      Overloaded{
          [](const BoxSet& box) { return Bounds{box.lower, box.upper}; },
          [](const BallSet& ball) {
            return Bounds{ball.center.array() - ball.radius,
                          ball.center.array() + ball.radius};
          },
          [](const HalfspaceSet& h) {
            // Only a halfspace whose normal is a coordinate axis bounds one
            // coordinate; anything else is unbounded in every direction.
            const Eigen::Index n = h.normal.size();
            Bounds bounds{Eigen::VectorXd::Constant(n, -kInf),
                          Eigen::VectorXd::Constant(n, kInf)};
            Eigen::Index nonzero = 0;
            Eigen::Index axis = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
              if (h.normal[i] != 0.0) {
                ++nonzero;
                axis = i;
              }
            }
            if (nonzero == 1) {
              const double bound = h.offset / h.normal[axis];
              if (h.normal[axis] > 0.0) {
                bounds.lower[axis] = bound;
              } else {
                bounds.upper[axis] = bound;
              }
            }
            return bounds;
          },
      },
      set);
}

IntersectionSet::IntersectionSet(std::vector<ConvexSet> components)
    : IntersectionSet(
          std::move(components),
          Eigen::VectorXd::Constant(
              static_cast<Eigen::Index>(std::max<std::size_t>(components.size(), 1)),
              1.0 / static_cast<double>(
                        std::max<std::size_t>(components.size(), 1)))) {}

IntersectionSet::IntersectionSet(std::vector<ConvexSet> components,
                                 Eigen::VectorXd weights)
    : components_(std::move(components)), weights_(std::move(weights)) {
  if (components_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "intersection needs at least one component set");
  }
  if (weights_.size() != static_cast<Eigen::Index>(components_.size())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "intersection has " + std::to_string(components_.size()) +
                    " components but " + std::to_string(weights_.size()) +
                    " weights");
  }
  for (const ConvexSet& set : components_) ValidateSet(set);
  dimension_ = SetDimension(components_.front());
  for (const ConvexSet& set : components_) {
    if (SetDimension(set) != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "component sets have different dimensions");
    }
  }
  if (size() == 1) {
    if (weights_[0] != 1.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "a single component set must have weight 1");
    }
  } else {
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
      if (!(weights_[i] > 0.0 && weights_[i] < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "weights must lie strictly between 0 and 1");
      }
    }
  }
  if (std::abs(weights_.sum() - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "weights must sum to 1");
  }
}

Eigen::VectorXd AveragedProjection(const Eigen::VectorXd& x,
                                   const IntersectionSet& set) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(x.size());
  for (int i = 0; i < set.size(); ++i) {
    sum += set.weights()[i] * Project(x, set.component(i));
  }
  return sum;
}

double FeasibilityResidual(const Eigen::VectorXd& x,
                           const IntersectionSet& set) {
  double residual = 0.0;
  for (const ConvexSet& component : set.components()) {
    residual += DistanceToSet(x, component);
  }
  return residual;
}

bool IsMember(const Eigen::VectorXd& x, const IntersectionSet& set,
              double membership_tol) {
  return FeasibilityResidual(x, set) <= membership_tol;
}

Bounds IntersectionBounds(const IntersectionSet& set) {
  const int n = set.dimension();
  Bounds bounds{Eigen::VectorXd::Constant(n, -kInf),
                Eigen::VectorXd::Constant(n, kInf)};
  for (const ConvexSet& component : set.components()) {
    const Bounds b = SetBounds(component);
    bounds.lower = bounds.lower.cwiseMax(b.lower);
    bounds.upper = bounds.upper.cwiseMin(b.upper);
  }
  return bounds;
}

Eigen::VectorXd ProjectIntersectionDykstra(const Eigen::VectorXd& x,
                                           const IntersectionSet& set,
                                           const DykstraOptions& options) {
  if (!(options.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Dykstra tolerance must be > 0");
  }
  if (x.size() != set.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "ProjectIntersectionDykstra: dimension mismatch");
  }
  const int m = set.size();
  Eigen::VectorXd y = x;
  std::vector<Eigen::VectorXd> corrections(m, Eigen::VectorXd::Zero(x.size()));
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    double displacement = 0.0;
    for (int i = 0; i < m; ++i) {
      const Eigen::VectorXd shifted = y + corrections[i];
      Eigen::VectorXd projected = Project(shifted, set.component(i));
      corrections[i] = shifted - projected;
      displacement =
          std::max(displacement, (projected - y).lpNorm<Eigen::Infinity>());
      y = std::move(projected);
    }
    if (displacement < options.tol) return y;
  }
  throw Error(ErrorCode::kNonConvergence,
              "Dykstra projection did not converge within " +
                  std::to_string(options.max_sweeps) + " sweeps");
}

}  // namespace eqp
