// Copyright 2026 The qprog Authors
//
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

#include "qprog/error.hpp"

namespace qprog {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::InvalidW: return "InvalidW";
    case ErrorCode::InvalidZeta: return "InvalidZeta";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::TooManyParts: return "TooManyParts";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::MixedAxes: return "MixedAxes";
    case ErrorCode::NoCertifiedNet: return "NoCertifiedNet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Numeric: return "NumericFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qprog
