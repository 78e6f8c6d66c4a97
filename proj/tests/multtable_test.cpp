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

#include "hecke/multtable.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/modular.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::group_data;
using hecke_test::make_rng;
using hecke_test::random_word;
using hecke_test::table;

using Vec = std::vector<std::uint64_t>;

Word W(const char* s) { return Word::parse(s); }
LinComb L(const char* s) { return LinComb::parse(s); }

// Dense oracle: v -> rho_s v at a point modulo p, written out directly from
// the column definition.
Vec apply_letter(const MultTable& t, const Vec& v, int g, const ModPoint& pt,
                 std::uint64_t p) {
  Vec out(t.rank, 0);
  for (std::size_t j = 0; j < t.rank; ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, c] : t.entry(j, g)) {
      out[i] = add_mod(out[i], mul_mod(c.eval_mod(pt, p), v[j], p), p);
    }
  }
  return out;
}

Vec apply_word(const MultTable& t, Vec v, const Word& w, const ModPoint& pt,
               std::uint64_t p) {
  for (char c : w.letters()) v = apply_letter(t, v, generator_of(c), pt, p);
  return v;
}

Vec unit(std::size_t rank, std::size_t j) {
  Vec v(rank, 0);
  v[j] = 1;
  return v;
}

TEST(MultTable, Entries) {
  const auto& d = group_data("g20");
  const MultTable& t = table("g20");
  auto entry = [&](const char* w, int g) {
    return entry_as_lincomb(t, d.basis, *d.basis.ordinal(W(w)), g);
  };
  EXPECT_EQ(entry("e", 1), L("1"));
  EXPECT_EQ(entry("11", 1), L("a.11 + b.1 + e"));
  EXPECT_EQ(entry("12", 1), L("121"));
}

TEST(MultTable, IsTotal) {
  for (const char* name : {"g20", "g21"}) {
    const MultTable& t = table(name);
    EXPECT_EQ(t.rank, group_data(name).basis.size());
    std::size_t entries = 0;
    for (const auto& cols : t.columns) entries += cols.size();
    EXPECT_EQ(entries, 2 * t.rank);
  }
  EXPECT_EQ(table("g20").rank * 2, 720u);
  EXPECT_EQ(table("g21").rank * 2, 1440u);
}

TEST(MultTable, SerializationIsIndependentOfThreads) {
  const auto& d = group_data("g20");
  TableOptions one;
  one.threads = 1;
  EXPECT_EQ(serialize_table(build_table(d.basis, d.compiled.rules, d.spec, one),
                            d.basis),
            serialize_table(table("g20"), d.basis));
}

TEST(MultTable, IncompleteRulesFailToSpan) {
  const auto& d = group_data("g20");
  RuleList partial(d.dominant);
  for (std::size_t k = 0; k < 10; ++k) {
    partial.append(d.compiled.rules.rules()[k]);
  }
  EXPECT_THROW(build_table(d.basis, partial, d.spec), Error);
}

TEST(Relations, AllIdentitiesHold) {
  for (const char* name : {"g20", "g21"}) {
    const RelationReport r =
        check_relations(table(name), group_data(name).spec);
    EXPECT_TRUE(r.passed()) << name;
    // 2 exact order checks, then per prime (zero + 5 random points) x 3.
    EXPECT_EQ(r.verdicts.size(), 2u + 2u * 6u * 3u) << name;
    std::size_t braid = 0;
    for (const auto& v : r.verdicts) {
      EXPECT_TRUE(v.passed) << v.identity << " " << v.witness;
      if (v.identity == "braid") ++braid;
    }
    EXPECT_EQ(braid, 12u);
  }
}

TEST(Relations, OrderTwoAtAFixedPoint) {
  const MultTable& t = table("g21");
  const ModPoint pt{3, 5, 7};
  const std::uint64_t p = kDefaultPrime;
  for (std::size_t j = 0; j < t.rank; ++j) {
    const Vec v = unit(t.rank, j);
    const Vec once = apply_letter(t, v, 1, pt, p);
    const Vec twice = apply_letter(t, once, 1, pt, p);
    for (std::size_t i = 0; i < t.rank; ++i) {
      const std::uint64_t r =
          sub_mod(sub_mod(twice[i], mul_mod(7, once[i], p), p), v[i], p);
      ASSERT_EQ(r, 0u) << "column " << j << " row " << i;
    }
  }
}

TEST(Relations, BraidAtRandomPointsByOracle) {
  auto rng = make_rng(70);
  for (const char* name : {"g20", "g21"}) {
    const MultTable& t = table(name);
    const GroupSpec& g = group_data(name).spec;
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint64_t p = trial % 2 ? kAlternatePrime : kDefaultPrime;
      const ModPoint pt{rng() % p, rng() % p, rng() % p};
      for (std::size_t j = 0; j < t.rank; j += 7) {
        EXPECT_EQ(apply_word(t, unit(t.rank, j), g.braid_upper, pt, p),
                  apply_word(t, unit(t.rank, j), g.braid_lower, pt, p))
            << name << " column " << j;
      }
    }
  }
}

TEST(Relations, GroupAlgebraPowers) {
  for (const char* name : {"g20", "g21"}) {
    const MultTable& t = table(name);
    const GroupSpec& g = group_data(name).spec;
    for (int s = 1; s <= 2; ++s) {
      const Word power = Word(std::string(
          static_cast<std::size_t>(g.generator(s).order), generator_letter(s)));
      for (std::size_t j = 0; j < t.rank; ++j) {
        ASSERT_EQ(apply_word(t, unit(t.rank, j), power, {}, 101),
                  unit(t.rank, j))
            << name << " generator " << s << " column " << j;
      }
    }
  }
}

TEST(Relations, MutatedTableFails) {
  const auto& d = group_data("g20");
  MultTable bad = table("g20");
  // b_j * 2 for the word 11: perturb one coefficient.
  auto& column = bad.columns[1][*d.basis.ordinal(W("11"))];
  ASSERT_FALSE(column.empty());
  column[0].second += Poly::a();
  const RelationReport r = check_relations(bad, d.spec);
  EXPECT_FALSE(r.passed());
  bool has_witness = false;
  for (const auto& v : r.verdicts) {
    if (!v.passed) has_witness |= !v.witness.empty();
  }
  EXPECT_TRUE(has_witness);
}

TEST(Cyclicity, PassesAndDetectsMutation) {
  for (const char* name : {"g20", "g21"}) {
    EXPECT_TRUE(cyclicity_check(table(name), group_data(name).basis).passed);
  }
  const auto& d = group_data("g20");
  MultTable bad = table("g20");
  // 12 * 1 = 121 is a basis word; redirect it.
  const std::size_t j = *d.basis.ordinal(W("12"));
  bad.columns[0][j] = {{*d.basis.ordinal(W("21")), Poly(1)}};
  const CyclicityResult r = cyclicity_check(bad, d.basis);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.witness.find("121"), std::string::npos) << r.witness;
}

TEST(Cyclicity, LettersFromTheEmptyWord) {
  const auto& d = group_data("g20");
  const MultTable& t = table("g20");
  const Vec e = unit(t.rank, 0);
  EXPECT_EQ(apply_word(t, e, W("1"), {}, 101),
            unit(t.rank, *d.basis.ordinal(W("1"))));
  EXPECT_EQ(apply_word(t, e, W("121"), {}, 101),
            unit(t.rank, *d.basis.ordinal(W("121"))));
}

// Applying the table letter by letter agrees with reducing the whole word.
TEST(MultTableProperty, AgreesWithDirectReduction) {
  auto rng = make_rng(71);
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group_data(name);
    const MultTable& t = table(name);
    for (int i = 0; i < 100; ++i) {
      const Word w = random_word(rng, 0, 14, "12");
      const std::uint64_t p = kDefaultPrime;
      const ModPoint pt{rng() % p, rng() % p, rng() % p};
      const LinComb r = reduce(LinComb(w, Poly(1)), d.compiled.rules, d.spec);
      Vec expected(t.rank, 0);
      for (const auto& [u, c] : r.terms()) {
        expected[*d.basis.ordinal(u)] = c.eval_mod(pt, p);
      }
      EXPECT_EQ(apply_word(t, unit(t.rank, 0), w, pt, p), expected)
          << name << " " << w.to_string();
    }
  }
}

}  // namespace
}  // namespace hecke
