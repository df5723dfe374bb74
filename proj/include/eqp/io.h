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

// File formats: JSON set and instance records, the benchmark report CSV and
// the trajectory CSV.
//
// Instance file:
//   {"A": [[...], ...], "A1": [[...], ...], "b": [...], "b1": [...],
//    "c": [...], "d": r,
//    "set": {"components": [{"type": "box", "lower": [...], "upper": [...]},
//                           {"type": "ball", "center": [...], "radius": r},
//                           {"type": "halfspace", "normal": [...],
//                            "offset": b}],
//            "weights": [...]}}          // weights optional, default 1/m
// Matrices are row-major lists of rows. Doubles are written in shortest
// round-trip form, so read(write(x)) reproduces x bit for bit.

#ifndef EQP_IO_H_
#define EQP_IO_H_

#include <span>
#include <string>

#include "Eigen/Core"
#include "eqp/bench.h"
#include "eqp/geometry.h"
#include "eqp/problem.h"
#include "eqp/solver.h"
#include "json.hpp"

namespace eqp {

nlohmann::json SetToJson(const ConvexSet& set);
ConvexSet SetFromJson(const nlohmann::json& j);

nlohmann::json IntersectionToJson(const IntersectionSet& set);
IntersectionSet IntersectionFromJson(const nlohmann::json& j);

nlohmann::json InstanceToJson(const Instance& instance);
// Parse errors (kParseError) name the offending field.
Instance InstanceFromJson(const nlohmann::json& j);

void WriteInstance(const Instance& instance, const std::string& path);
Instance ReadInstance(const std::string& path);

// A JSON array of numbers.
Eigen::VectorXd ReadVector(const std::string& path);

inline constexpr const char* kReportHeader =
    "example,dim,count,mean_time_s,mean_err1,mean_err2,mean_err3,"
    "solved_fraction,seed";

// Header plus one row per report; mean_err3 is empty when absent.
std::string FormatReportCsv(std::span<const BenchReport> reports);
void WriteReport(std::span<const BenchReport> reports, const std::string& path);

// Columns k, err1, err2, alpha, gnorm, x0 .. x{n-1}.
std::string FormatTrajectoryCsv(std::span<const IterationRecord> history);
void WriteTrajectory(std::span<const IterationRecord> history,
                     const std::string& path);

}  // namespace eqp

#endif  // EQP_IO_H_
