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

#include "eqp/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include "eqp/errors.h"

namespace eqp {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParseError, "field \"" + field + "\": " + what);
}

const json& Field(const json& j, const std::string& name,
                  const std::string& context) {
  if (!j.is_object()) ParseFail(context, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) {
    ParseFail(context.empty() ? name : context + "." + name, "missing");
  }
  return *it;
}

std::string Join(const std::string& context, const std::string& name) {
  return context.empty() ? name : context + "." + name;
}

double ToDouble(const json& j, const std::string& field) {
  if (!j.is_number()) ParseFail(field, "expected a number");
  return j.get<double>();
}

Eigen::VectorXd ToVector(const json& j, const std::string& field) {
  if (!j.is_array()) ParseFail(field, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] =
        ToDouble(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

Eigen::MatrixXd ToMatrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) ParseFail(field, "expected a list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) ParseFail(field + "[0]", "expected an array");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const Eigen::VectorXd row = ToVector(j[r], row_field);
    if (static_cast<std::size_t>(row.size()) != cols) {
      ParseFail(row_field, "ragged row");
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json FromVector(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json FromMatrix(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out.push_back(FromVector(m.row(r).transpose()));
  }
  return out;
}

json ParseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void WriteText(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ConvexSet SetFromJsonAt(const json& j, const std::string& context) {
  const json& type = Field(j, "type", context);
  if (!type.is_string()) ParseFail(Join(context, "type"), "expected a string");
  const std::string kind = type.get<std::string>();
  ConvexSet set;
  if (kind == "box") {
    set = BoxSet{ToVector(Field(j, "lower", context), Join(context, "lower")),
                 ToVector(Field(j, "upper", context), Join(context, "upper"))};
  } else if (kind == "ball") {
    set = BallSet{
        ToVector(Field(j, "center", context), Join(context, "center")),
        ToDouble(Field(j, "radius", context), Join(context, "radius"))};
  } else if (kind == "halfspace") {
    set = HalfspaceSet{
        ToVector(Field(j, "normal", context), Join(context, "normal")),
        ToDouble(Field(j, "offset", context), Join(context, "offset"))};
  } else {
    ParseFail(Join(context, "type"), "unknown set type \"" + kind + "\"");
  }
  try {
    ValidateSet(set);
  } catch (const Error& e) {
    ParseFail(context.empty() ? "set" : context, e.what());
  }
  return set;
}

IntersectionSet IntersectionFromJsonAt(const json& j,
                                       const std::string& context) {
  const json& comps = Field(j, "components", context);
  const std::string comps_field = Join(context, "components");
  if (!comps.is_array() || comps.empty()) {
    ParseFail(comps_field, "expected a nonempty array");
  }
  std::vector<ConvexSet> sets;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    sets.push_back(
        SetFromJsonAt(comps[i], comps_field + "[" + std::to_string(i) + "]"));
  }
  try {
    if (auto it = j.find("weights"); it != j.end() && !it->is_null()) {
      return IntersectionSet(std::move(sets),
                             ToVector(*it, Join(context, "weights")));
    }
    return IntersectionSet(std::move(sets));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    ParseFail(context.empty() ? "components" : context, e.what());
  }
}

}  // namespace

json SetToJson(const ConvexSet& set) {
  if (const auto* box = std::get_if<BoxSet>(&set)) {
    return json{{"type", "box"},
                {"lower", FromVector(box->lower)},
                {"upper", FromVector(box->upper)}};
  }
  if (const auto* ball = std::get_if<BallSet>(&set)) {
    return json{{"type", "ball"},
                {"center", FromVector(ball->center)},
                {"radius", ball->radius}};
  }
  const auto& half = std::get<HalfspaceSet>(set);
  return json{{"type", "halfspace"},
              {"normal", FromVector(half.normal)},
              {"offset", half.offset}};
}

ConvexSet SetFromJson(const json& j) { return SetFromJsonAt(j, ""); }

json IntersectionToJson(const IntersectionSet& set) {
  json comps = json::array();
  for (const ConvexSet& c : set.components()) comps.push_back(SetToJson(c));
  return json{{"components", comps}, {"weights", FromVector(set.weights())}};
}

IntersectionSet IntersectionFromJson(const json& j) {
  return IntersectionFromJsonAt(j, "");
}

json InstanceToJson(const Instance& instance) {
  const FractionalData& d = instance.data;
  return json{{"A", FromMatrix(d.A)},   {"A1", FromMatrix(d.A1)},
              {"b", FromVector(d.b)},   {"b1", FromVector(d.b1)},
              {"c", FromVector(d.c)},   {"d", d.d},
              {"set", IntersectionToJson(instance.set)}};
}

Instance InstanceFromJson(const json& j) {
  FractionalData data;
  data.A = ToMatrix(Field(j, "A", ""), "A");
  data.A1 = ToMatrix(Field(j, "A1", ""), "A1");
  data.b = ToVector(Field(j, "b", ""), "b");
  data.b1 = ToVector(Field(j, "b1", ""), "b1");
  data.c = ToVector(Field(j, "c", ""), "c");
  data.d = ToDouble(Field(j, "d", ""), "d");
  IntersectionSet set = IntersectionFromJsonAt(Field(j, "set", ""), "set");
  try {
    FractionalBifunction check(data);
  } catch (const Error& e) {
    ParseFail("A", e.what());
  }
  if (set.dimension() != data.b.size()) {
    ParseFail("set", "dimension differs from the bifunction dimension");
  }
  return Instance{std::move(data), std::move(set)};
}

void WriteInstance(const Instance& instance, const std::string& path) {
  WriteText(InstanceToJson(instance).dump(2) + "\n", path);
}

Instance ReadInstance(const std::string& path) {
  const json j = ParseFile(path);
  try {
    return InstanceFromJson(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Eigen::VectorXd ReadVector(const std::string& path) {
  return ToVector(ParseFile(path), path);
}

std::string FormatReportCsv(std::span<const BenchReport> reports) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const BenchReport& r : reports) {
    out << r.example_id << ',' << r.dim << ',' << r.problem_count << ','
        << Num(r.mean_elapsed_seconds) << ',' << Num(r.mean_err1) << ','
        << Num(r.mean_err2) << ',' << (r.mean_err3 ? Num(*r.mean_err3) : "")
        << ',' << Num(r.solved_fraction) << ',' << r.seed << "\n";
  }
  return out.str();
}

void WriteReport(std::span<const BenchReport> reports,
                 const std::string& path) {
  WriteText(FormatReportCsv(reports), path);
}

std::string FormatTrajectoryCsv(std::span<const IterationRecord> history) {
  std::ostringstream out;
  out << "k,err1,err2,alpha,gnorm";
  const Eigen::Index n = history.empty() ? 0 : history.front().x.size();
  for (Eigen::Index i = 0; i < n; ++i) out << ",x" << i;
  out << "\n";
  for (const IterationRecord& r : history) {
    out << r.k << ',' << Num(r.err1) << ',' << Num(r.err2) << ','
        << Num(r.alpha) << ',' << Num(r.g.norm());
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out << ',' << Num(r.x[i]);
    out << "\n";
  }
  return out.str();
}

void WriteTrajectory(std::span<const IterationRecord> history,
                     const std::string& path) {
  WriteText(FormatTrajectoryCsv(history), path);
}

}  // namespace eqp
