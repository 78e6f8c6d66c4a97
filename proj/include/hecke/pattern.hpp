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

#ifndef HECKE_PATTERN_HPP_
#define HECKE_PATTERN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hecke/word.hpp"

namespace hecke {

enum class Occurrence { kLeftmost, kRightmost };

struct PatternMatch {
  std::size_t index = 0;     // 0-based position in the pattern list
  std::size_t position = 0;  // 0-based offset of the occurrence
  friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

// Aho-Corasick automaton over {1, 2} for an ordered list of positive
// patterns. Immutable after construction.
//
// find_first() implements the priority rule "first pattern in list order that
// occurs anywhere", returning the leftmost (or rightmost) occurrence of that
// pattern. Barred letters never match and reset the automaton.
class PatternMatcher {
 public:
  using State = std::uint32_t;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  PatternMatcher() : PatternMatcher(std::vector<Word>{}) {}
  explicit PatternMatcher(std::vector<Word> patterns);

  const std::vector<Word>& patterns() const { return patterns_; }

  std::optional<PatternMatch> find_first(
      std::string_view word, Occurrence mode = Occurrence::kLeftmost) const;
  std::optional<PatternMatch> find_first(
      const Word& word, Occurrence mode = Occurrence::kLeftmost) const {
    return find_first(word.letters(), mode);
  }
  // Occurrence-first selection: the occurrence starting leftmost (or
  // rightmost) in the word, whichever pattern it belongs to. On a factor-free
  // pattern set no two occurrences share a start position.
  std::optional<PatternMatch> find_earliest(
      std::string_view word, Occurrence mode = Occurrence::kLeftmost) const;

  // Every occurrence of every pattern, ordered by position and then by
  // pattern index. Duplicate patterns report the first copy only.
  std::vector<PatternMatch> find_all(std::string_view word) const;

  bool matches_any(std::string_view word) const;
  bool matches_any(const Word& word) const {
    return matches_any(word.letters());
  }

  // Raw automaton access for enumeration.
  State root() const { return 0; }
  State next(State s, char letter) const {
    return is_positive_letter(letter) ? delta_[s][letter == kTwo ? 1 : 0] : 0;
  }
  // Smallest pattern index ending at this state, or kNone.
  std::size_t best_output(State s) const { return best_[s]; }
  std::size_t state_count() const { return delta_.size(); }

 private:
  std::vector<Word> patterns_;
  std::vector<std::array<State, 2>> delta_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> longest_;  // longest pattern ending here, or kNone
  std::vector<std::size_t> own_;      // pattern spelled by this state, or kNone
  std::vector<State> output_link_;    // nearest proper suffix state with own_
};

}  // namespace hecke

#endif  // HECKE_PATTERN_HPP_
