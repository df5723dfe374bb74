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

#include "eqp/errors.h"

namespace eqp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDenominatorNonPositive:
      return "DenominatorNonPositive";
    case ErrorCode::kNonConvergence:
      return "NonConvergence";
    case ErrorCode::kNonFinite:
      return "NonFinite";
    case ErrorCode::kSamplingFailure:
      return "SamplingFailure";
    case ErrorCode::kDegenerateDenominator:
      return "DegenerateDenominator";
    case ErrorCode::kNonPolyhedralSet:
      return "NonPolyhedralSet";
    case ErrorCode::kMaxPivots:
      return "MaxPivots";
    case ErrorCode::kLpNotOptimal:
      return "LpNotOptimal";
    case ErrorCode::kDimensionTooLarge:
      return "DimensionTooLarge";
    case ErrorCode::kDegenerateDraw:
      return "DegenerateDraw";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace eqp
