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

#include "hecke/basis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::make_rng;
using hecke_test::random_word;

Word W(const char* s) { return Word::parse(s); }

bool avoids(const std::string& w, const std::vector<Word>& patterns) {
  for (const Word& p : patterns) {
    if (w.find(p.letters()) != std::string::npos) return false;
  }
  return true;
}

struct BruteForce {
  bool finite = true;
  std::vector<Word> words;  // deglex-sorted avoiders when finite
};

// With patterns of length <= k the automaton state is determined by the
// last k - 1 letters, so an avoider of length 2^(k-1) + k repeats a state
// and can be pumped. Exhausting shorter words decides everything.
BruteForce brute_force(const std::vector<Word>& patterns) {
  std::size_t k = 0;
  for (const Word& p : patterns) k = std::max(k, p.size());
  const std::size_t limit = (std::size_t{1} << (k - 1)) + k;
  BruteForce out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= limit; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      if (!avoids(w, patterns)) continue;
      if (len == limit) {
        out.finite = false;
        return out;
      }
      out.words.push_back(Word::unchecked(w));
      next.push_back(w + '1');
      next.push_back(w + '2');
    }
    layer = std::move(next);
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

ErrorKind enumerate_error(const std::vector<Word>& patterns) {
  try {
    enumerate_basis(patterns);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kVerification;
}

TEST(Basis, SmallExamples) {
  const BasisSet trivial = enumerate_basis({W("1"), W("2")});
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.words[0], Word());
  EXPECT_EQ(enumerate_error({W("11"), W("22")}), ErrorKind::kInfinite);
  EXPECT_FALSE(avoidance_language_finite({W("11"), W("22")}));
  EXPECT_EQ(enumerate_error({}), ErrorKind::kInvalidArgument);
}

TEST(Basis, G20MatchesTheTabulatedBasis) {
  const BasisSet b = enumerate_basis(load_dominant_terms("g20"));
  ASSERT_EQ(b.size(), 360u);
  const auto table = load_basis_fixture("g20");
  EXPECT_EQ(std::set<Word>(b.words.begin(), b.words.end()),
            std::set<Word>(table.begin(), table.end()));
  for (const char* w : {"e", "1", "2", "11", "12", "21", "22", "121"}) {
    EXPECT_TRUE(b.contains(W(w))) << w;
  }
}

TEST(Basis, G21HasRank720) {
  const auto dominant = load_dominant_terms("g21");
  EXPECT_TRUE(avoidance_language_finite(dominant));
  EXPECT_EQ(enumerate_basis(dominant).size(), 720u);
}

TEST(Basis, OrdinalsFollowDeglex) {
  const BasisSet b = enumerate_basis(load_dominant_terms("g21"));
  EXPECT_TRUE(std::is_sorted(b.words.begin(), b.words.end()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_EQ(b.ordinal(b.words[i]), i);
  }
  EXPECT_FALSE(b.ordinal(W("2121212121")).has_value());
}

TEST(Basis, FactorClosure) {
  for (const char* name : {"g20", "g21"}) {
    EXPECT_TRUE(is_factor_closed(enumerate_basis(load_dominant_terms(name))));
  }
  BasisSet gappy;
  gappy.words = {Word(), W("12")};
  gappy.index = {{Word(), 0}, {W("12"), 1}};
  EXPECT_FALSE(is_factor_closed(gappy));
}

TEST(BasisProperty, AgreesWithBruteForce) {
  auto rng = make_rng(50);
  int finite = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Word> patterns;
    for (std::size_t n = 1 + rng() % 5; n > 0; --n) {
      patterns.push_back(random_word(rng, 1, 4, "12"));
    }
    const BruteForce oracle = brute_force(patterns);
    EXPECT_EQ(avoidance_language_finite(patterns), oracle.finite);
    if (oracle.finite) {
      ++finite;
      const BasisSet b = enumerate_basis(patterns);
      EXPECT_EQ(b.words, oracle.words);
      EXPECT_TRUE(is_factor_closed(b));
    } else {
      EXPECT_EQ(enumerate_error(patterns), ErrorKind::kInfinite);
    }
  }
  EXPECT_GT(finite, 20);
}

}  // namespace
}  // namespace hecke
