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

#include "hecke/lincomb.hpp"

#include <gtest/gtest.h>

#include "hecke/rewrite.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::group_data;
using hecke_test::make_rng;
using hecke_test::random_word;

LinComb L(const char* s) { return LinComb::parse(s); }
LinComb L(const Word& w) { return LinComb(w, Poly(1)); }

TEST(LinComb, ParseRenderRoundTrip) {
  for (const char* text :
       {"q.1 + e", "22 - a.2 - b.e", "(a - b).121 + 3.e", "0", "-12"}) {
    const LinComb x = L(text);
    EXPECT_EQ(L(x.to_string().c_str()), x) << text;
  }
  EXPECT_TRUE(L("12 - 12").is_zero());
}

TEST(LinComb, ProductConcatenatesWords) {
  EXPECT_EQ(L("1 + a.2") * L("2 - e"), L("12 - 1 + a.22 - a.2"));
  EXPECT_EQ(L("1").prepend(Word::parse("2")), L("21"));
  EXPECT_EQ(L("1").append(Word::parse("2")), L("12"));
}

TEST(LinComb, FreeReductionIsLinear) {
  EXPECT_EQ(red(L("1A2 + 3.B2 - 2")), L("3.e"));
}

TEST(Positivation, Examples) {
  const GroupSpec& g21 = group_data("g21").spec;
  const GroupSpec& g20 = group_data("g20").spec;
  EXPECT_EQ(pos(L("A"), g21), L("1 - q.e"));
  EXPECT_EQ(pos(L("B"), g21), L("22 - a.2 - b.e"));
  EXPECT_EQ(pos(L("A"), g20), L("11 - a.1 - b.e"));
  EXPECT_EQ(pos(L("B"), g20), L("22 - a.2 - b.e"));
  EXPECT_EQ(pos(L("12"), g20), L("12"));
}

// s-bar really is the inverse of s: both products reduce to the empty word
// under the compiled rules.
TEST(Positivation, BarredLettersAreInverses) {
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group_data(name);
    for (const char* w : {"A1", "1A", "B2", "2B", "AB21", "12BA"}) {
      EXPECT_EQ(reduce(pos(L(w), d.spec), d.compiled.rules, d.spec), L("e"))
          << name << " " << w;
    }
  }
}

TEST(PositivationProperty, OutputIsPositiveAndMultiplicative) {
  auto rng = make_rng(20);
  for (const char* name : {"g20", "g21"}) {
    const GroupSpec& g = group_data(name).spec;
    for (int i = 0; i < 300; ++i) {
      const Word u = random_word(rng, 0, 6, "12AB");
      const Word v = random_word(rng, 0, 6, "12AB");
      const LinComb pu = pos(L(u), g);
      EXPECT_TRUE(pu.is_positive()) << u.to_string();
      EXPECT_EQ(pos(L(u + v), g), pu * pos(L(v), g));
    }
  }
}

// At a = b = q = 0 the algebra is the group algebra, so x-bar x reduces to
// the empty word.
TEST(PositivationProperty, GroupAlgebraSanity) {
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group_data(name);
    for (const char* w : {"A1", "B2", "1A", "2B"}) {
      EXPECT_EQ(
          reduce(pos(L(w), d.spec).specialize_zero(), d.compiled.rules, d.spec)
              .specialize_zero(),
          L("e"))
          << name << " " << w;
    }
  }
}

}  // namespace
}  // namespace hecke
