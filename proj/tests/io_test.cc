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

#include <fstream>
#include <sstream>
#include <string>

#include "eqp/errors.h"
#include "gtest/gtest.h"

namespace eqp {
namespace {

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/" + name;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int CountLines(const std::string& text) {
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  return lines;
}

TEST(InstanceIoTest, RoundTripIsBitwise) {
  for (int ex = 1; ex <= 3; ++ex) {
    const Instance inst = GenerateInstance({ex, 5, 31}, 2);
    const std::string path = TempPath("roundtrip.json");
    WriteInstance(inst, path);
    const Instance back = ReadInstance(path);
    EXPECT_EQ(back.data.A, inst.data.A);
    EXPECT_EQ(back.data.A1, inst.data.A1);
    EXPECT_EQ(back.data.b, inst.data.b);
    EXPECT_EQ(back.data.b1, inst.data.b1);
    EXPECT_EQ(back.data.c, inst.data.c);
    EXPECT_EQ(back.data.d, inst.data.d);
    ASSERT_EQ(back.set.size(), inst.set.size());
    EXPECT_EQ(back.set.weights(), inst.set.weights());
    EXPECT_EQ(SetToJson(back.set.component(1)),
              SetToJson(inst.set.component(1)));
  }
}

TEST(InstanceIoTest, MissingFieldIsNamed) {
  const nlohmann::json j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  nlohmann::json broken = j;
  broken.erase("A1");
  try {
    InstanceFromJson(broken);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("\"A1\""), std::string::npos);
  }
}

TEST(InstanceIoTest, NestedFieldErrors) {
  nlohmann::json j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  j["set"]["components"][1].erase("radius");
  try {
    InstanceFromJson(j);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("set.components[1].radius"),
              std::string::npos);
  }
  j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  j["b"][0] = "x";
  EXPECT_THROW(InstanceFromJson(j), Error);
  j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  j["set"]["components"][0]["type"] = "cone";
  EXPECT_THROW(InstanceFromJson(j), Error);
  j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  j["A"][1] = nlohmann::json::array({1.0});
  EXPECT_THROW(InstanceFromJson(j), Error);
}

TEST(InstanceIoTest, DefaultWeightsAreUniform) {
  nlohmann::json j = InstanceToJson(GenerateInstance({2, 3, 0}, 0));
  j["set"].erase("weights");
  const Instance inst = InstanceFromJson(j);
  EXPECT_EQ(inst.set.weights(), Eigen::VectorXd::Constant(3, 1.0 / 3.0));
}

TEST(InstanceIoTest, BadWeightsAreParseErrors) {
  nlohmann::json j = InstanceToJson(GenerateInstance({1, 2, 0}, 0));
  j["set"]["weights"] = nlohmann::json::array({0.9, 0.9});
  try {
    InstanceFromJson(j);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(InstanceIoTest, FileErrors) {
  try {
    ReadInstance(TempPath("does_not_exist.json"));
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
  const std::string path = TempPath("garbage.json");
  std::ofstream(path) << "{ not json";
  try {
    ReadInstance(path);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(VectorIoTest, ReadsArray) {
  const std::string path = TempPath("x0.json");
  std::ofstream(path) << "[1.5, 2, -3e-2]\n";
  Eigen::VectorXd expected(3);
  expected << 1.5, 2.0, -0.03;
  EXPECT_EQ(ReadVector(path), expected);
}

TEST(ReportCsvTest, HeaderAndOneRowPerDimension) {
  std::vector<BenchReport> reports;
  for (int dim : {5, 10, 20, 50}) {
    BenchReport r;
    r.example_id = 1;
    r.dim = dim;
    r.problem_count = 100;
    r.mean_err1 = 1e-4;
    r.mean_err2 = 0.25;
    r.solved_fraction = 0.5;
    r.seed = 7;
    reports.push_back(r);
  }
  const std::string csv = FormatReportCsv(reports);
  EXPECT_EQ(CountLines(csv), 5);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kReportHeader);
  EXPECT_NE(csv.find("\n1,50,100,0,0.0001,0.25,,0.5,7\n"), std::string::npos);

  const std::string path = TempPath("report.csv");
  WriteReport(reports, path);
  EXPECT_EQ(Slurp(path), csv);
}

TEST(ReportCsvTest, Err3ColumnFilledForExampleThree) {
  BenchReport r;
  r.example_id = 3;
  r.dim = 5;
  r.problem_count = 1;
  r.mean_err3 = 0.125;
  const std::vector<BenchReport> reports = {r};
  EXPECT_NE(FormatReportCsv(reports).find(",0.125,"), std::string::npos);
}

TEST(TrajectoryCsvTest, ColumnsAndRows) {
  const Instance inst = GenerateInstance({1, 3, 0}, 0);
  SolverConfig config;
  config.max_iter = 4;
  config.record_history = true;
  const SolveOutcome out = Solve(FractionalBifunction(inst.data), inst.set,
                                 DefaultStart(3), config);
  const std::string csv = FormatTrajectoryCsv(out.history);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,err1,err2,alpha,gnorm,x0,x1,x2");
  EXPECT_EQ(CountLines(csv), 1 + static_cast<int>(out.history.size()));
  EXPECT_NE(csv.find("\n0,"), std::string::npos);
}

}  // namespace
}  // namespace eqp
