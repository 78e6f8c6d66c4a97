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

#ifndef HECKE_REWRITE_HPP_
#define HECKE_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/fixtures.hpp"
#include "hecke/group.hpp"
#include "hecke/lincomb.hpp"
#include "hecke/pattern.hpp"
#include "hecke/word.hpp"

namespace hecke {

// A rule lhs ~> rhs whose right-hand side is supported on pattern-avoiding
// words, each deglex-smaller than lhs.
struct Rule {
  int id = 0;
  Word lhs;
  LinComb rhs;
};

// Ordered rule list together with the full set of dominant terms. The
// dominant terms decide basis membership even while the list is still being
// built; the rule left-hand sides drive rewriting.
class RuleList {
 public:
  explicit RuleList(std::vector<Word> dominant_terms);

  void append(Rule rule);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const std::vector<Word>& dominant_terms() const {
    return obstructions_.patterns();
  }
  std::vector<Word> leading_terms() const;

  const PatternMatcher& leading_matcher() const { return leading_; }
  const PatternMatcher& obstruction_matcher() const { return obstructions_; }

  // True when the rule left-hand sides are exactly the dominant terms.
  bool is_complete() const;

  // Rule right-hand sides as flat (word, coefficient) arrays, indexed like
  // rules().
  const std::vector<std::pair<std::string, Poly>>& flat_rhs(
      std::size_t k) const {
    return flat_[k];
  }

  // "rule <id> <lhs>" followed by "  <word> : <poly>" lines and "end".
  std::string serialize() const;
  static RuleList parse(std::string_view text,
                        std::vector<Word> dominant_terms);

 private:
  std::vector<Rule> rules_;
  std::vector<std::vector<std::pair<std::string, Poly>>> flat_;
  PatternMatcher leading_;
  PatternMatcher obstructions_;
};

// Which left-hand side rewrites a reducible word. kFirstRule takes the first
// rule in list order that occurs anywhere; kFirstOccurrence scans the word
// and takes the occurrence that starts first (last, with kRightmost).
enum class RuleSelection { kFirstRule, kFirstOccurrence };

// kGreedy commits to the selected occurrence. kBacktrack is for incomplete
// rule lists: when a branch runs into a word that contains a dominant term
// but no rule, the next occurrence is tried instead, in position order
// (reversed under kRightmost). Results are memoized per word.
enum class Search { kGreedy, kBacktrack };

struct ReduceOptions {
  std::uint64_t fuel = 1'000'000;  // elementary rewrites per call
  Occurrence occurrence = Occurrence::kLeftmost;
  RuleSelection selection = RuleSelection::kFirstRule;
  Search search = Search::kGreedy;
};

struct ReduceStats {
  std::uint64_t rewrites = 0;
  std::size_t positive_terms = 0;  // support size after positivation
};

// The reduction algorithm: positivation first, then every positive word is
// rewritten with the selected rule occurrence until only pattern-avoiding
// words remain. With a complete list all choices give the same result.
//
// Greedy mode processes words from the deglex-largest down with their
// coefficients aggregated; since rules are deglex-decreasing this visits each
// word once and yields the same result as term-by-term recursion.
//
// Throws kFuelExhausted when the budget runs out and kReduceFail when a word
// matches no rule yet still contains a dominant term.
LinComb reduce(const LinComb& x, const RuleList& rules, const GroupSpec& group,
               const ReduceOptions& options = {}, ReduceStats* stats = nullptr);

// Literal evaluation of a right-hand side expression with "w" bound to `lhs`.
LinComb eval_rhs(const RhsExpr& expr, const Word& lhs,
                 const std::map<std::string, Word>& bindings,
                 const GroupSpec& group);

struct RuleCompileInfo {
  int id = 0;
  std::size_t raw_terms = 0;       // terms of the evaluated expression
  std::size_t compiled_terms = 0;  // terms of the basis-supported result
  std::uint64_t rewrites = 0;
  bool unchanged = false;  // evaluated expression was already reduced
};

struct CompileResult {
  RuleList rules;
  std::vector<RuleCompileInfo> info;
};

// Incremental compilation: each raw rule's expression is evaluated, reduced
// with the rules compiled so far and appended. Greedy reduction of a raw
// right-hand side can lead back to the rule's own left-hand side (G20 rule 13
// does so under every fixed choice), so the default options backtrack. Throws
// kLeadingTermViolation / kSupportViolation when a compiled right-hand side
// breaks the rule invariants, and kFixture when a left-hand side is not a
// dominant term or repeats.
CompileResult compile_rules(const GroupSpec& group,
                            const std::vector<FixtureRule>& raw,
                            const std::vector<Word>& dominant_terms,
                            const ReduceOptions& options = {
                                .search = Search::kBacktrack});

}  // namespace hecke

#endif  // HECKE_REWRITE_HPP_
