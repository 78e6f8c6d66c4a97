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

#ifndef HECKE_ERROR_HPP_
#define HECKE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kIndexOutOfRange,
  kLetterMismatch,
  kFuelExhausted,
  kReduceFail,
  kLeadingTermViolation,
  kSupportViolation,
  kInfinite,
  kFixture,
  kUnknownGroup,
  kStepMismatch,
  kGlueMismatch,
  kDegreeCap,
  kVerification,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hecke

#endif  // HECKE_ERROR_HPP_
