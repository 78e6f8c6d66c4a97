// Copyright 2026 The hecke-rewrite Authors.
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

#include "hecke/error.hpp"

namespace hecke {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "Parse";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorKind::kLetterMismatch:
      return "LetterMismatch";
    case ErrorKind::kFuelExhausted:
      return "FuelExhausted";
    case ErrorKind::kReduceFail:
      return "ReduceFail";
    case ErrorKind::kLeadingTermViolation:
      return "LeadingTermViolation";
    case ErrorKind::kSupportViolation:
      return "SupportViolation";
    case ErrorKind::kInfinite:
      return "Infinite";
    case ErrorKind::kFixture:
      return "Fixture";
    case ErrorKind::kUnknownGroup:
      return "UnknownGroup";
    case ErrorKind::kStepMismatch:
      return "StepMismatch";
    case ErrorKind::kGlueMismatch:
      return "GlueMismatch";
    case ErrorKind::kDegreeCap:
      return "DegreeCapReached";
    case ErrorKind::kVerification:
      return "Verification";
  }
  return "Unknown";
}

}  // namespace hecke
