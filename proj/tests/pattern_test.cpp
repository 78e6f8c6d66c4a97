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

#include "hecke/pattern.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hecke/fixtures.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::make_rng;
using hecke_test::random_word;

Word W(const char* s) { return Word::parse(s); }

// Quadratic scan: the first pattern in list order that occurs at all.
std::optional<PatternMatch> naive_first(const std::vector<Word>& patterns,
                                        const std::string& word,
                                        Occurrence mode) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const std::string& p = patterns[i].letters();
    const std::size_t at =
        mode == Occurrence::kLeftmost ? word.find(p) : word.rfind(p);
    if (at != std::string::npos) return PatternMatch{i, at};
  }
  return std::nullopt;
}

std::vector<PatternMatch> naive_all(const std::vector<Word>& patterns,
                                    const std::string& word) {
  std::vector<PatternMatch> out;
  for (std::size_t pos = 0; pos <= word.size(); ++pos) {
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const std::string& p = patterns[i].letters();
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      if (pos + p.size() <= word.size() && word.compare(pos, p.size(), p) == 0)
        out.push_back({i, pos});
    }
  }
  return out;
}

std::vector<Word> random_patterns(std::mt19937_64& rng) {
  std::vector<Word> out;
  for (std::size_t n = 1 + rng() % 4; n > 0; --n) {
    out.push_back(random_word(rng, 1, 4, "12"));
  }
  return out;
}

TEST(PatternMatcher, Examples) {
  const PatternMatcher m({W("111"), W("222"), W("21212")});
  EXPECT_EQ(m.find_first(W("21212")), (PatternMatch{2, 0}));
  EXPECT_FALSE(m.find_first(W("12121")).has_value());
  const PatternMatcher two({W("111"), W("222")});
  EXPECT_EQ(two.find_first(W("111222")), (PatternMatch{0, 0}));
  // Priority is by list order, not by position.
  EXPECT_EQ(two.find_first(W("222111")), (PatternMatch{0, 3}));
  EXPECT_EQ(two.find_first(W("1112111"), Occurrence::kRightmost),
            (PatternMatch{0, 4}));
}

TEST(PatternMatcher, BarredLettersBreakOccurrences) {
  const PatternMatcher m({W("11")});
  EXPECT_FALSE(m.matches_any(W("1A1")));
  EXPECT_TRUE(m.matches_any(W("A11")));
}

TEST(PatternMatcher, EmptyPatternList) {
  const PatternMatcher m;
  EXPECT_FALSE(m.matches_any(W("1212")));
  EXPECT_TRUE(m.find_all("1212").empty());
}

TEST(PatternMatcherProperty, AgreesWithNaiveScan) {
  auto rng = make_rng(40);
  for (int i = 0; i < 2000; ++i) {
    const auto patterns = random_patterns(rng);
    const PatternMatcher m(patterns);
    const Word w = random_word(rng, 0, 15, "1122A");
    for (Occurrence mode : {Occurrence::kLeftmost, Occurrence::kRightmost}) {
      EXPECT_EQ(m.find_first(w, mode), naive_first(patterns, w.letters(), mode))
          << w.to_string();
    }
    EXPECT_EQ(m.find_all(w.letters()), naive_all(patterns, w.letters()))
        << w.to_string();
    EXPECT_EQ(
        m.matches_any(w),
        naive_first(patterns, w.letters(), Occurrence::kLeftmost).has_value());
  }
}

TEST(PatternMatcherProperty, EarliestOccurrenceOnDominantTerms) {
  auto rng = make_rng(41);
  for (const char* name : {"g20", "g21"}) {
    const auto patterns = load_dominant_terms(name);
    const PatternMatcher m(patterns);
    for (int i = 0; i < 1000; ++i) {
      const Word w = random_word(rng, 0, 40, "12");
      const auto all = naive_all(patterns, w.letters());
      const auto left = m.find_earliest(w.letters(), Occurrence::kLeftmost);
      const auto right = m.find_earliest(w.letters(), Occurrence::kRightmost);
      if (all.empty()) {
        EXPECT_FALSE(left.has_value());
        EXPECT_FALSE(right.has_value());
      } else {
        EXPECT_EQ(left, all.front()) << w.to_string();
        EXPECT_EQ(right, all.back()) << w.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace hecke
