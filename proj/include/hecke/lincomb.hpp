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

#ifndef HECKE_LINCOMB_HPP_
#define HECKE_LINCOMB_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

struct GroupSpec;

// Finite formal sum of words with coefficients in Z[a, b, q]: an element of
// the monoid algebra R M(Y). No stored coefficient is zero.
class LinComb {
 public:
  using Map = std::map<Word, Poly>;

  LinComb() = default;
  LinComb(const Word& w);  // NOLINT(google-explicit-constructor)
  LinComb(const Word& w, const Poly& coeff);

  // Text form "a.11 + b.1 + e", "(a - b).121 - 2*q.e", "0".
  static LinComb parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Poly coefficient(const Word& w) const;
  bool is_positive() const;
  // Largest word in deglex order; the combination must be nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }

  void add(const Word& w, const Poly& coeff);
  void add(Word&& w, const Poly& coeff);

  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Poly& scalar);
  // *this += scalar * other without the temporary.
  LinComb& add_scaled(const LinComb& other, const Poly& scalar);
  friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
  friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
  friend LinComb operator*(const Poly& s, LinComb x) { return x *= s; }
  LinComb operator-() const;
  // Concatenation product, extended bilinearly.
  friend LinComb operator*(const LinComb& x, const LinComb& y);
  friend bool operator==(const LinComb&, const LinComb&) = default;

  LinComb prepend(const Word& prefix) const;
  LinComb append(const Word& suffix) const;

  // Substitutes a = b = q = 0 in every coefficient.
  LinComb specialize_zero() const;

  // Terms from the deglex-largest word down.
  std::string to_string() const;

 private:
  Map terms_;
};

// Linear extension of free reduction.
LinComb red(const LinComb& x);

// Positivation: the algebra morphism fixing 1 and 2 and sending each barred
// letter to the positive expression of the inverse forced by the group's
// order relation (for s^3 = a s^2 + b s + 1: s-bar -> ss - a.s - b.e).
LinComb pos(const LinComb& x, const GroupSpec& group);

}  // namespace hecke

#endif  // HECKE_LINCOMB_HPP_
