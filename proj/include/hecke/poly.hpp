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

#ifndef HECKE_POLY_HPP_
#define HECKE_POLY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

enum class Var { kA = 0, kB = 1, kQ = 2 };

// Exponent triple over (a, b, q). The all-zero triple is the unit monomial.
struct Monomial {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t q = 0;

  unsigned total_degree() const { return unsigned{a} + b + q; }

  // Graded order: total degree first, then lexicographic on (a, b, q).
  friend std::strong_ordering operator<=>(const Monomial& x,
                                          const Monomial& y) {
    if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.q <=> y.q;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& other) const;
};

// A point of (Z/p)^3 at which polynomials are evaluated.
struct ModPoint {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t q = 0;
};

// Sparse polynomial in Z[a, b, q] with arbitrary-precision coefficients.
//
// Terms are kept sorted ascending in the graded order with no zero
// coefficient, so structural equality is polynomial equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  Poly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& constant);
  Poly(const Monomial& m, const Integer& coeff);

  static Poly variable(Var v);
  static Poly a() { return variable(Var::kA); }
  static Poly b() { return variable(Var::kB); }
  static Poly q() { return variable(Var::kQ); }

  // Parses the rendering produced by to_string(), e.g. "2*a*b - q + 1",
  // "-a^2*q", "0". Whitespace is ignored.
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  unsigned total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Substitutes a = b = q = 0, i.e. returns the constant term.
  Integer constant_term() const;

  // Value at `point` reduced modulo the prime `modulus` (> 2).
  std::uint64_t eval_mod(const ModPoint& point, std::uint64_t modulus) const;

  // Terms in descending graded order, e.g. "2*a*b - q + 1"; zero is "0".
  std::string to_string() const;

 private:
  void add_scaled(const Poly& other, bool negate);

  std::vector<Term> terms_;
};

std::uint64_t reduce_mod(const Integer& value, std::uint64_t modulus);

}  // namespace hecke

#endif  // HECKE_POLY_HPP_
