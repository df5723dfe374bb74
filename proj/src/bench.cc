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

#include "eqp/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include "eqp/errors.h"
#include "eqp/verify.h"

namespace eqp {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t SplitMix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

InstanceResult SolveInstance(const ExampleSpec& spec, int index,
                             const SolverConfig& config) {
  InstanceResult result;
  result.index = index;
  try {
    const Instance instance = GenerateInstance(spec, index);
    const FractionalBifunction bifunction(instance.data);
    const Eigen::VectorXd x0 = DefaultStart(spec.dim);
    result.monotone_at_start =
        DiagnoseMonotonicity(MonotonicityMatrix(instance.data, x0))
            .positive_semidefinite();
    const SolveOutcome outcome = Solve(bifunction, instance.set, x0, config);
    result.status = outcome.status;
    result.iterations = outcome.iterations;
    result.elapsed_seconds = outcome.elapsed_seconds;
    result.err1 = outcome.final_err1;
    result.err2 = outcome.final_err2;
    if (spec.example_id == 3) {
      const Err3Result err3 = Err3Gap(bifunction, outcome.x_final, instance.set);
      result.err3 = err3.value;
      result.err3_absolute = err3.absolute;
    }
  } catch (const Error& e) {
    result.failed = true;
    result.failure = e.what();
  }
  return result;
}

}  // namespace

KeyedUniform::KeyedUniform(std::uint64_t seed, std::uint64_t stream)
    : key_(SplitMix64(seed ^ SplitMix64(stream + kGolden))) {}

double KeyedUniform::Next() {
  const std::uint64_t bits = SplitMix64(key_ + kGolden * counter_++);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

void ValidateExampleSpec(const ExampleSpec& spec) {
  if (spec.example_id < 1 || spec.example_id > 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "example id must be 1, 2 or 3, got " +
                    std::to_string(spec.example_id));
  }
  const int min_dim = spec.example_id == 3 ? 3 : 1;
  if (spec.dim < min_dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "example " + std::to_string(spec.example_id) +
                    " needs dimension >= " + std::to_string(min_dim));
  }
}

IntersectionSet ExampleSet(const ExampleSpec& spec) {
  ValidateExampleSpec(spec);
  const int n = spec.dim;
  std::vector<ConvexSet> sets;
  sets.push_back(BoxSet{Eigen::VectorXd::Constant(n, 1.0),
                        Eigen::VectorXd::Constant(n, 3.0)});
  if (spec.example_id == 1 || spec.example_id == 2) {
    sets.push_back(BallSet{Eigen::VectorXd::Zero(n), 3.0});
  }
  if (spec.example_id == 2) {
    sets.push_back(HalfspaceSet{Eigen::VectorXd::Ones(n), n + 1.0});
  }
  if (spec.example_id == 3) {
    Eigen::VectorXd normal = Eigen::VectorXd::Zero(n);
    normal.head(3).setOnes();
    sets.push_back(HalfspaceSet{std::move(normal), 3.0});
  }
  return IntersectionSet(std::move(sets));
}

Instance GenerateInstance(const ExampleSpec& spec, int instance_index) {
  ValidateExampleSpec(spec);
  const int n = spec.dim;
  KeyedUniform rng(spec.seed, static_cast<std::uint64_t>(instance_index));
  FractionalData data;
  for (;;) {
    data.A.resize(n, n);
    data.A1.resize(n, n);
    data.b.resize(n);
    data.b1.resize(n);
    data.c.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) data.A(i, j) = rng.Next();
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) data.A1(i, j) = rng.Next();
    }
    for (int i = 0; i < n; ++i) data.b[i] = rng.Next();
    for (int i = 0; i < n; ++i) data.b1[i] = rng.Next();
    for (int i = 0; i < n; ++i) data.c[i] = rng.Next();
    data.d = rng.Next();
    if (data.d != 0.0 || (data.c.array() != 0.0).any()) break;
  }
  return Instance{std::move(data), ExampleSet(spec)};
}

Eigen::VectorXd DefaultStart(int dim) {
  return Eigen::VectorXd::Constant(dim, 2.0);
}

int DefaultThreadCount() {
  if (const char* env = std::getenv("EQP_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<int>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

BenchReport RunBenchmark(const ExampleSpec& spec, int count,
                         const SolverConfig& config, int threads) {
  ValidateExampleSpec(spec);
  ValidateConfig(config);
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  }
  if (threads <= 0) threads = DefaultThreadCount();
  threads = std::min(threads, count);

  SolverConfig run_config = config;
  run_config.record_history = false;

  std::vector<InstanceResult> results(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      results[i] = SolveInstance(spec, i, run_config);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchReport report;
  report.example_id = spec.example_id;
  report.dim = spec.dim;
  report.problem_count = count;
  report.seed = spec.seed;
  report.config = config;
  int completed = 0;
  int solved = 0;
  int monotone = 0;
  double err3_sum = 0.0;
  for (const InstanceResult& r : results) {
    if (r.failed) {
      ++report.failure_count;
      continue;
    }
    ++completed;
    report.mean_elapsed_seconds += r.elapsed_seconds;
    report.mean_err1 += r.err1;
    report.mean_err2 += r.err2;
    if (r.err3) err3_sum += *r.err3;
    if (r.status != SolveStatus::kMaxIterations) ++solved;
    if (r.monotone_at_start) ++monotone;
  }
  if (completed > 0) {
    report.mean_elapsed_seconds /= completed;
    report.mean_err1 /= completed;
    report.mean_err2 /= completed;
    if (spec.example_id == 3) report.mean_err3 = err3_sum / completed;
    report.monotone_fraction = static_cast<double>(monotone) / completed;
  }
  report.solved_fraction = static_cast<double>(solved) / count;
  report.instances = std::move(results);
  return report;
}

}  // namespace eqp
