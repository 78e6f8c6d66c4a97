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

#include "hecke/poly.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "hecke/error.hpp"
#include "hecke/modular.hpp"
#include "support.hpp"

namespace hecke {
namespace {

using hecke_test::make_rng;

Poly P(const char* s) { return Poly::parse(s); }

Poly random_poly(std::mt19937_64& rng) {
  Poly out;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Poly m(static_cast<long long>(rng() % 41) - 20);
    for (unsigned k = rng() % 4; k > 0; --k) {
      switch (rng() % 3) {
        case 0:
          m *= Poly::a();
          break;
        case 1:
          m *= Poly::b();
          break;
        default:
          m *= Poly::q();
          break;
      }
    }
    out += m;
  }
  return out;
}

TEST(Poly, AdditionExamples) {
  EXPECT_TRUE((Poly::a() + -Poly::a()).is_zero());
  EXPECT_EQ(Poly::a() * Poly::b() + Poly::a() * Poly::b(), P("2*a*b"));
  EXPECT_EQ(Poly::a() * Poly::a() + Poly::b() + Poly::q(), P("a^2 + b + q"));
}

TEST(Poly, MultiplicationExamples) {
  const Poly p = P("3*a*q - b + 7");
  EXPECT_EQ(Poly(1) * p, p);
  EXPECT_EQ((Poly::a() + Poly::b()) * (Poly::a() - Poly::b()), P("a^2 - b^2"));
  EXPECT_TRUE((Poly() * p).is_zero());
}

TEST(Poly, EvaluationExamples) {
  EXPECT_EQ((Poly::a() + Poly::b()).eval_mod({1, 2, 0}, 7), 3u);
  EXPECT_EQ(Poly().eval_mod({4, 5, 6}, 13), 0u);
  EXPECT_EQ((Poly::a() * Poly::q()).eval_mod({3, 0, 5}, 11), 4u);
}

TEST(Poly, RenderingIsGradedAndParsesBack) {
  EXPECT_EQ(P("1 - q + 2*b*a").to_string(), "2*a*b - q + 1");
  EXPECT_EQ(Poly().to_string(), "0");
  auto rng = make_rng(10);
  for (int i = 0; i < 500; ++i) {
    const Poly p = random_poly(rng);
    EXPECT_EQ(Poly::parse(p.to_string()), p) << p.to_string();
  }
}

TEST(Poly, ParseRejectsGarbage) {
  EXPECT_THROW(P("a +"), Error);
  EXPECT_THROW(P("x"), Error);
}

TEST(Poly, CoefficientsDoNotOverflow) {
  Poly p(1);
  for (int i = 0; i < 10; ++i) p *= Poly(1'000'000'007);
  Integer expected = 1;
  for (int i = 0; i < 10; ++i) expected *= 1'000'000'007;
  EXPECT_EQ(p.constant_term(), expected);
  EXPECT_EQ(p.eval_mod({}, kDefaultPrime),
            static_cast<std::uint64_t>(expected % kDefaultPrime));
}

TEST(PolyProperty, NoStoredZeroCoefficients) {
  auto rng = make_rng(11);
  for (int i = 0; i < 500; ++i) {
    const Poly x = random_poly(rng);
    const Poly y = random_poly(rng);
    for (const Poly& r : {x + y, x - y, x * y, x - x}) {
      for (const auto& [m, c] : r.terms()) EXPECT_NE(c, 0);
    }
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(PolyProperty, EvaluationIsARingHomomorphism) {
  auto rng = make_rng(12);
  for (std::uint64_t p : {kDefaultPrime, kAlternatePrime, std::uint64_t{101}}) {
    for (int i = 0; i < 300; ++i) {
      const Poly x = random_poly(rng);
      const Poly y = random_poly(rng);
      const ModPoint pt{rng() % p, rng() % p, rng() % p};
      const std::uint64_t ex = x.eval_mod(pt, p);
      const std::uint64_t ey = y.eval_mod(pt, p);
      EXPECT_EQ((x + y).eval_mod(pt, p), add_mod(ex, ey, p));
      EXPECT_EQ((x - y).eval_mod(pt, p), sub_mod(ex, ey, p));
      EXPECT_EQ((x * y).eval_mod(pt, p), mul_mod(ex, ey, p));
    }
  }
}

TEST(PolyProperty, RingAxioms) {
  auto rng = make_rng(13);
  for (int i = 0; i < 300; ++i) {
    const Poly x = random_poly(rng);
    const Poly y = random_poly(rng);
    const Poly z = random_poly(rng);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x.constant_term() * y.constant_term(), (x * y).constant_term());
  }
}

TEST(Modular, PrimesAndInverses) {
  EXPECT_TRUE(is_prime_u64(kDefaultPrime));
  EXPECT_TRUE(is_prime_u64(kAlternatePrime));
  EXPECT_FALSE(is_prime_u64((std::uint64_t{1} << 61) + 1));
  auto rng = make_rng(14);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t x = 1 + rng() % (kDefaultPrime - 1);
    EXPECT_EQ(mul_mod(x, inv_mod(x, kDefaultPrime), kDefaultPrime), 1u);
  }
  EXPECT_EQ(pow_mod(3, 4, 7), 4u);
}

}  // namespace
}  // namespace hecke
