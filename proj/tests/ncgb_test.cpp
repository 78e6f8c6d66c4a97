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

#include "hecke/ncgb.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hecke/basis.hpp"
#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::make_rng;
using hecke_test::random_word;

using PPoly = NCPoly<PrimeField>;

PPoly poly(const PrimeField& f,
           std::initializer_list<std::pair<const char*, long long>> terms) {
  PPoly p;
  for (const auto& [w, c] : terms) {
    const std::string word = std::string(w) == "e" ? "" : w;
    p.terms[word] =
        f.add(p.terms.count(word) ? p.terms[word] : 0, f.from_integer(c));
    if (f.is_zero(p.terms[word])) p.terms.erase(word);
  }
  return p;
}

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool has_factor(const PPoly& p, const std::string& w) {
  for (const auto& [u, c] : p.terms) {
    if (u.find(w) != std::string::npos) return true;
  }
  return false;
}

// Presentation data only; the rewriting side is not needed here.
struct Group {
  GroupSpec spec;
  std::vector<Word> dominant;
  BasisSet basis;
};

const Group& group(const std::string& name) {
  static const Group g20{load_group("g20"), load_dominant_terms("g20"),
                         enumerate_basis(load_dominant_terms("g20"))};
  static const Group g21{load_group("g21"), load_dominant_terms("g21"),
                         enumerate_basis(load_dominant_terms("g21"))};
  return name == "g20" ? g20 : g21;
}

GbResult<PrimeField> group_gb(const char* name, const Specialization& pt,
                              const GbOptions& options = {}) {
  const PrimeField f;
  return buchberger(f, defining_relations(f, group(name).spec, pt), options);
}

TEST(Specialization, ParseAndRender) {
  const Specialization s = Specialization::parse("a=3,b=-1,q=7");
  EXPECT_EQ(s.a, 3);
  EXPECT_EQ(s.b, -1);
  EXPECT_EQ(s.q, 7);
  EXPECT_EQ(Specialization::parse(s.to_string()), s);
  EXPECT_EQ(Specialization::parse("b=2"), (Specialization{0, 2, 0}));
  EXPECT_THROW(Specialization::parse("c=1"), Error);
  EXPECT_THROW(Specialization::parse("a=x"), Error);
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(15), Error);
  EXPECT_NO_THROW(PrimeField(101));
}

TEST(NcReduce, Examples) {
  const PrimeField f;
  const std::vector<PPoly> cube = {poly(f, {{"111", 1}, {"e", -1}})};
  EXPECT_EQ(nc_reduce(f, poly(f, {{"111", 1}}), cube).terms,
            poly(f, {{"e", 1}}).terms);
  EXPECT_EQ(nc_reduce(f, poly(f, {{"21111", 1}}), cube).terms,
            poly(f, {{"21", 1}}).terms);
  EXPECT_TRUE(nc_reduce(f, cube[0], cube).is_zero());
}

TEST(NcReduce, BasisWordIsIrreducible) {
  const PrimeField f;
  const auto gb = group_gb("g20", {});
  EXPECT_EQ(nc_reduce(f, poly(f, {{"12121", 1}}), gb.basis).terms,
            poly(f, {{"12121", 1}}).terms);
}

TEST(NcReduceProperty, NoLeadingWordSurvivesAndIdempotent) {
  const PrimeField f;
  const auto gb = group_gb("g21", {});
  auto rng = make_rng(100);
  for (int i = 0; i < 200; ++i) {
    PPoly p;
    for (int k = 0; k < 3; ++k) {
      p.terms[random_word(rng, 0, 14, "12").letters()] = 1 + rng() % 1000;
    }
    const PPoly r = nc_reduce(f, p, gb.basis);
    for (const Word& lt : gb.leading_terms) {
      EXPECT_FALSE(has_factor(r, lt.letters()));
    }
    EXPECT_EQ(nc_reduce(f, r, gb.basis).terms, r.terms);
  }
}

TEST(Buchberger, ToyInput) {
  const PrimeField f;
  const auto gb = buchberger(f, {poly(f, {{"11", 1}, {"e", -1}})});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0].terms, poly(f, {{"11", 1}, {"e", -1}}).terms);
  EXPECT_EQ(gb.leading_terms, std::vector<Word>{Word::parse("11")});
}

TEST(Buchberger, MakesInputsMonicAndInterreduces) {
  const PrimeField f;
  const auto gb = buchberger(
      f, {poly(f, {{"11", 3}, {"e", -3}}), poly(f, {{"111", 1}, {"1", -1}})});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0].leading_coefficient(), 1u);
}

TEST(Buchberger, GroupAlgebraReproducesTheTables) {
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group(name);
    const auto gb = group_gb(name, {});
    EXPECT_EQ(sorted(gb.leading_terms), sorted(d.dominant)) << name;
    EXPECT_LE(gb.stats.max_degree, GbOptions{}.degree_cap);
    const BasisSet standard = enumerate_basis(gb.leading_terms);
    EXPECT_EQ(standard.words, d.basis.words) << name;
  }
  EXPECT_EQ(group_gb("g20", {}).basis.size(), 36u);
  EXPECT_EQ(group_gb("g21", {}).basis.size(), 30u);
}

TEST(Buchberger, SummaryAtRandomPoints) {
  auto rng = make_rng(101);
  for (const char* name : {"g20", "g21"}) {
    const auto& d = group(name);
    for (int i = 0; i < 3; ++i) {
      const Specialization pt{static_cast<long long>(rng() % 2001) - 1000,
                              static_cast<long long>(rng() % 2001) - 1000,
                              static_cast<long long>(rng() % 2001) - 1000};
      const GbSummary s = run_ncgb(d.spec, pt);
      EXPECT_EQ(sorted(s.leading_terms), sorted(d.dominant))
          << name << " at " << pt.to_string();
      EXPECT_TRUE(s.finite);
      EXPECT_EQ(s.standard_words, d.spec.group_order);
    }
  }
}

// The reduced Groebner basis is unique, so stopping early must not change
// it.
TEST(Buchberger, CertificateMatchesFullCompletion) {
  GbOptions full;
  full.module_certificate = false;
  for (const char* name : {"g20", "g21"}) {
    const auto quick = group_gb(name, {});
    const auto slow = group_gb(name, {}, full);
    EXPECT_TRUE(quick.stats.certified);
    EXPECT_FALSE(slow.stats.certified);
    ASSERT_EQ(quick.basis.size(), slow.basis.size()) << name;
    for (std::size_t i = 0; i < quick.basis.size(); ++i) {
      EXPECT_EQ(quick.basis[i].terms, slow.basis[i].terms) << name;
    }
  }
  // A generic point, where the coefficients are dense.
  const Specialization pt = Specialization::parse("a=5,b=-3");
  const auto quick = group_gb("g20", pt);
  const auto slow = group_gb("g20", pt, full);
  ASSERT_EQ(quick.basis.size(), slow.basis.size());
  for (std::size_t i = 0; i < quick.basis.size(); ++i) {
    EXPECT_EQ(quick.basis[i].terms, slow.basis[i].terms);
  }
}

TEST(Buchberger, RationalAndPrimeFieldsAgree) {
  const PrimeField f;
  const RationalField q;
  for (const char* name : {"g20", "g21"}) {
    const GroupSpec& g = group(name).spec;
    const auto mod = buchberger(f, defining_relations(f, g, {}));
    const auto exact = buchberger(q, defining_relations(q, g, {}));
    ASSERT_EQ(mod.leading_terms, exact.leading_terms) << name;
    for (std::size_t i = 0; i < mod.basis.size(); ++i) {
      PPoly mapped;
      for (const auto& [w, c] : exact.basis[i].terms) {
        const auto n = f.from_integer(numerator(c));
        const auto d = f.from_integer(denominator(c));
        mapped.terms[w] = f.mul(n, f.inv(d));
      }
      EXPECT_EQ(mapped.terms, mod.basis[i].terms) << name;
    }
  }
}

TEST(Buchberger, DegreeCapIsEnforced) {
  GbOptions tight;
  tight.degree_cap = 8;
  try {
    group_gb("g21", {}, tight);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegreeCap);
  }
}

}  // namespace
}  // namespace hecke
