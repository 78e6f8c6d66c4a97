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

#ifndef HECKE_SOUNDNESS_HPP_
#define HECKE_SOUNDNESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/garside.hpp"
#include "hecke/group.hpp"
#include "hecke/lincomb.hpp"

namespace hecke {

// One checked item: a trace step or a glue link.
struct CheckVerdict {
  std::string label;  // move text or link name
  bool passed = false;
  std::string witness;
};

struct RuleVerdict {
  int id = 0;
  std::string method;  // "trace", "tail-glue", "order relation", "braid"
  bool passed = false;
  std::optional<ErrorKind> failure;
  std::string witness;
  std::vector<CheckVerdict> checks;
};

// Applies one move to the term of `expr` whose word is move.term. Throws
// kStepMismatch when the term is absent or the move does not apply there
// (wrong letters, invalid braid substitution, out-of-range position).
LinComb apply_move(const LinComb& expr, const Move& move,
                   const GroupSpec& group, const DihedralArtin& artin);

// The trace must open with the left-hand side; each step's recomputed value
// must equal the recorded expression; the final expression must match the
// evaluated right-hand side after free reduction.
RuleVerdict check_trace(const FixtureRule& rule, const GroupSpec& group);

// Tail-chain certificate for rules of the form red(sum of tails + word):
//   (i)   red(x_1) is braid-equal to the left-hand side,
//   (ii)  head(x_i, I_i) is braid-equal to red(x_{i+1}),
//   (iii) head(x_k, I_k) is braid-equal to red(final word).
// Rules without tails must be an order relation or a braid-equal word.
RuleVerdict verify_tail_rule(const FixtureRule& rule, const GroupSpec& group);

// Dispatch: traced rules go through check_trace, the rest through
// verify_tail_rule.
RuleVerdict verify_rule(const FixtureRule& rule, const GroupSpec& group);

}  // namespace hecke

#endif  // HECKE_SOUNDNESS_HPP_
