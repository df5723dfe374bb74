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

// Closed convex sets with closed-form Euclidean projections, the weighted
// averaged projector over an intersection, and Dykstra's method for the exact
// projection onto that intersection.
//
// All functions here are pure; they may be called concurrently.

#ifndef EQP_GEOMETRY_H_
#define EQP_GEOMETRY_H_

#include <optional>
#include <variant>
#include <vector>

#include "Eigen/Core"

namespace eqp {

inline constexpr double kDefaultMembershipTol = 1e-9;

// {x : lower <= x <= upper} componentwise.
struct BoxSet {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

// {x : ||x - center|| <= radius}.
struct BallSet {
  Eigen::VectorXd center;
  double radius = 0.0;
};

// {x : <normal, x> >= offset}. The normal must be nonzero.
struct HalfspaceSet {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

using ConvexSet = std::variant<BoxSet, BallSet, HalfspaceSet>;

// Throws kInvalidArgument when a set violates its invariants.
void ValidateSet(const ConvexSet& set);
int SetDimension(const ConvexSet& set);

Eigen::VectorXd ProjectBox(const Eigen::VectorXd& x, const BoxSet& box);
Eigen::VectorXd ProjectBall(const Eigen::VectorXd& x, const BallSet& ball);
Eigen::VectorXd ProjectHalfspace(const Eigen::VectorXd& x,
                                 const HalfspaceSet& halfspace);
Eigen::VectorXd Project(const Eigen::VectorXd& x, const ConvexSet& set);

double DistanceToSet(const Eigen::VectorXd& x, const ConvexSet& set);

// Axis-aligned bounds of a set; infinite entries where the set is unbounded.
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  bool IsFinite() const;
};
Bounds SetBounds(const ConvexSet& set);

// C = C_1 ∩ ... ∩ C_m with averaging weights w. The weights lie in (0, 1) and
// sum to one (w = {1} when m = 1). Construction validates every invariant.
class IntersectionSet {
 public:
  // Uniform weights 1/m.
  explicit IntersectionSet(std::vector<ConvexSet> components);
  IntersectionSet(std::vector<ConvexSet> components, Eigen::VectorXd weights);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(components_.size()); }
  const std::vector<ConvexSet>& components() const { return components_; }
  const ConvexSet& component(int i) const { return components_[i]; }
  const Eigen::VectorXd& weights() const { return weights_; }

 private:
  std::vector<ConvexSet> components_;
  Eigen::VectorXd weights_;
  int dimension_ = 0;
};

// Sum_i w_i P_{C_i}(x), accumulated in component order.
Eigen::VectorXd AveragedProjection(const Eigen::VectorXd& x,
                                   const IntersectionSet& set);

// Sum_i ||x - P_{C_i}(x)||.
double FeasibilityResidual(const Eigen::VectorXd& x,
                           const IntersectionSet& set);

bool IsMember(const Eigen::VectorXd& x, const IntersectionSet& set,
              double membership_tol = kDefaultMembershipTol);

// Intersection of the component bounds (the tightest component bounding box).
Bounds IntersectionBounds(const IntersectionSet& set);

struct DykstraOptions {
  double tol = 1e-10;
  int max_sweeps = 10000;
};

// Projects x onto the intersection using Dykstra's cyclic projections with
// correction terms. Stops once a full sweep moves the iterate by less than
// tol in the max norm. Throws kNonConvergence after max_sweeps.
// The intersection must be nonempty; emptiness is reported only as
// non-convergence.
Eigen::VectorXd ProjectIntersectionDykstra(const Eigen::VectorXd& x,
                                           const IntersectionSet& set,
                                           const DykstraOptions& options = {});

}  // namespace eqp

#endif  // EQP_GEOMETRY_H_
