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

// Random benchmark instances (affine-fractional bifunctions over box, ball
// and halfspace intersections) and batch runs that aggregate solver metrics
// per problem size.

#ifndef EQP_BENCH_H_
#define EQP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "eqp/geometry.h"
#include "eqp/problem.h"
#include "eqp/solver.h"

namespace eqp {

// Uniform [0, 1) doubles from a counter-based generator keyed by
// (seed, stream). Streams with different keys are independent, so instance
// i can be drawn without drawing instances 0..i-1.
class KeyedUniform {
 public:
  KeyedUniform(std::uint64_t seed, std::uint64_t stream);

  double Next();
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Example 1: [1,3]^n ∩ {||x|| <= 3}
// Example 2: [1,3]^n ∩ {||x|| <= 3} ∩ {sum_i x_i >= n + 1}
// Example 3: [1,3]^n ∩ {x_1 + x_2 + x_3 >= 3}
struct ExampleSpec {
  int example_id = 1;
  int dim = 5;
  std::uint64_t seed = 0;
};

void ValidateExampleSpec(const ExampleSpec& spec);

struct Instance {
  FractionalData data;
  IntersectionSet set;
};

IntersectionSet ExampleSet(const ExampleSpec& spec);

// Every entry of A, A1, b, b1, c and d is uniform on [0, 1], drawn in that
// order (matrices row-major). A draw with c = 0 and d = 0 is discarded and
// redrawn.
Instance GenerateInstance(const ExampleSpec& spec, int instance_index);

// The box center (2, ..., 2).
Eigen::VectorXd DefaultStart(int dim);

struct InstanceResult {
  int index = 0;
  bool failed = false;
  std::string failure;
  SolveStatus status = SolveStatus::kMaxIterations;
  int iterations = 0;
  double elapsed_seconds = 0.0;
  double err1 = 0.0;
  double err2 = 0.0;
  std::optional<double> err3;
  bool err3_absolute = false;
  // Monotonicity diagnostic of the generated data at the start point.
  bool monotone_at_start = false;
};

struct BenchReport {
  int example_id = 0;
  int dim = 0;
  int problem_count = 0;
  int failure_count = 0;
  double mean_elapsed_seconds = 0.0;
  double mean_err1 = 0.0;
  double mean_err2 = 0.0;
  std::optional<double> mean_err3;
  double solved_fraction = 0.0;
  double monotone_fraction = 0.0;
  std::uint64_t seed = 0;
  SolverConfig config;
  std::vector<InstanceResult> instances;
};

// Threads used by RunBenchmark: EQP_THREADS if set and positive, otherwise
// the hardware concurrency.
int DefaultThreadCount();

// Solves `count` generated instances from DefaultStart. Means are over
// instances that did not fail; solved_fraction counts instances that stopped
// before max_iter. Instances may run concurrently (threads <= 0 selects
// DefaultThreadCount()); aggregation is in index order.
BenchReport RunBenchmark(const ExampleSpec& spec, int count,
                         const SolverConfig& config, int threads = 0);

}  // namespace eqp

#endif  // EQP_BENCH_H_
