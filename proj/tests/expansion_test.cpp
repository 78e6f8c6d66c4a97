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

#include "hecke/expansion.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/garside.hpp"
#include "hecke/rewrite.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::group_data;
using hecke_test::make_rng;
using hecke_test::random_word;

Word W(const char* s) { return Word::parse(s); }
LinComb L(const char* s) { return LinComb::parse(s); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kVerification;
}

TEST(Expansion, EmptyIndexSetIsIdentity) {
  const GroupSpec& g = group_data("g21").spec;
  const Expansion x = expand(W("12"), {}, g);
  EXPECT_TRUE(x.tail.is_zero());
  EXPECT_EQ(x.head, W("12"));
}

TEST(Expansion, SingleSteps) {
  const GroupSpec& g = group_data("g21").spec;
  const Expansion one = expand(W("12"), {1}, g);
  EXPECT_EQ(one.tail, L("q.2"));
  EXPECT_EQ(one.head, W("A2"));
  const Expansion two = expand(W("221"), {1}, g);
  EXPECT_EQ(two.tail, L("a.21 + b.1"));
  EXPECT_EQ(two.head, W("B1"));
}

TEST(Expansion, OriginalPositionsSurviveMerges) {
  const GroupSpec& g = group_data("g21").spec;
  // Index 12 only exists in the original word once 9,10 and 7,8 merged.
  const Word h = head(W("212121221221"), {7, 9, 10, 12}, g);
  EXPECT_EQ(h, W("212121BABA"));
  EXPECT_TRUE(braid_equal(h, W("ABAB121212"), g.artin_m));
}

TEST(Expansion, TailOfRuleFourArgumentIsDefined) {
  const GroupSpec& g = group_data("g21").spec;
  const Word arg = W("A1") + W("21212121221");
  EXPECT_NO_THROW(expand(arg, {11}, g));
}

TEST(Expansion, Partiality) {
  const GroupSpec& g21 = group_data("g21").spec;
  const GroupSpec& g20 = group_data("g20").spec;
  EXPECT_EQ(kind_of([&] { expand(W("21"), {1}, g21); }),
            ErrorKind::kLetterMismatch);
  EXPECT_EQ(kind_of([&] { expand(W("A2"), {1}, g21); }),
            ErrorKind::kLetterMismatch);
  // Order 3 needs the letter twice in a row.
  EXPECT_EQ(kind_of([&] { expand(W("12"), {1}, g20); }),
            ErrorKind::kLetterMismatch);
  EXPECT_EQ(kind_of([&] { expand(W("12"), {3}, g21); }),
            ErrorKind::kIndexOutOfRange);
  // Position 2 is swallowed by the merge at 1.
  EXPECT_EQ(kind_of([&] { expand(W("221"), {1, 2}, g21); }),
            ErrorKind::kIndexOutOfRange);
}

// Random positive words with random index sets; where the expansion is
// defined it must satisfy the head-length rule and the algebra identity.
TEST(ExpansionProperty, IdentityAndMarkerDiscipline) {
  auto rng = make_rng(30);
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group_data(name);
    int defined = 0;
    for (int i = 0; i < 400; ++i) {
      const Word y = random_word(rng, 2, 9, "12");
      std::vector<std::size_t> idx;
      for (std::size_t k = 1; k <= y.size(); ++k) {
        if (rng() % 3 == 0) idx.push_back(k);
      }
      Expansion x;
      try {
        x = expand(y, idx, d.spec);
      } catch (const Error&) {
        continue;
      }
      ++defined;
      std::size_t merges = 0;
      for (std::size_t k : idx) {
        if (d.spec.generator(generator_of(y[k - 1])).order == 3) ++merges;
      }
      EXPECT_EQ(x.head.size(), y.size() - merges) << y.to_string();
      const LinComb lhs =
          reduce(x.tail + LinComb(x.head, Poly(1)), d.compiled.rules, d.spec);
      const LinComb rhs = reduce(LinComb(y, Poly(1)), d.compiled.rules, d.spec);
      EXPECT_EQ(lhs, rhs) << name << " " << y.to_string();
      EXPECT_EQ(lhs.specialize_zero(), rhs.specialize_zero());
    }
    EXPECT_GT(defined, 50) << name;
  }
}

void collect_tails(const RhsExpr& e, std::vector<const RhsExpr*>& out) {
  if (e.kind == RhsExpr::Kind::kTail) out.push_back(&e);
  for (const RhsExpr& c : e.children) collect_tails(c, out);
}

// Every tail expression occurring in the G21 rules.
TEST(ExpansionProperty, IdentityOnAllRuleTails) {
  const auto& d = group_data("g21");
  std::size_t checked = 0;
  for (const FixtureRule& r : d.raw) {
    std::vector<const RhsExpr*> tails;
    collect_tails(r.rhs, tails);
    for (const RhsExpr* t : tails) {
      ASSERT_EQ(t->children.size(), 1u);
      const LinComb arg = eval_rhs(t->children[0], r.lhs, r.bindings, d.spec);
      ASSERT_EQ(arg.size(), 1u) << "rule " << r.id;
      const Word y = arg.terms().begin()->first;
      const Expansion x = expand(y, t->indices, d.spec);
      const LinComb lhs =
          reduce(x.tail + LinComb(x.head, Poly(1)), d.compiled.rules, d.spec);
      const LinComb rhs = reduce(arg, d.compiled.rules, d.spec);
      EXPECT_EQ(lhs, rhs) << "rule " << r.id;
      EXPECT_EQ(lhs.specialize_zero(), rhs.specialize_zero())
          << "rule " << r.id;
      ++checked;
    }
  }
  EXPECT_GE(checked, 27u);
}

}  // namespace
}  // namespace hecke
