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

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/modular.hpp"

namespace hecke {

namespace {

std::uint16_t add_exponent(std::uint16_t x, std::uint16_t y) {
  unsigned sum = unsigned{x} + y;
  if (sum > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorKind::kInvalidArgument, "monomial exponent overflow");
  }
  return static_cast<std::uint16_t>(sum);
}

// Merges a list of (possibly repeated, unsorted) terms into canonical form.
std::vector<Poly::Term> canonicalize(std::vector<Poly::Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Poly::Term& x, const Poly::Term& y) {
              return x.first < y.first;
            });
  std::vector<Poly::Term> out;
  out.reserve(raw.size());
  for (auto& term : raw) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Poly parse() {
    if (text_.empty()) fail("empty polynomial");
    Poly result;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly term = parse_term();
      if (negative) term = -term;
      result += term;
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse,
                "cannot parse polynomial '" + text_ + "': " + why);
  }

  unsigned parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digit");
    unsigned long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (value > std::numeric_limits<std::uint16_t>::max()) {
        fail("exponent too large");
      }
    }
    return static_cast<unsigned>(value);
  }

  Poly parse_term() {
    Integer coeff = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          digits.push_back(text_[pos_++]);
        }
        coeff *= Integer(digits);
      } else if (c == 'a' || c == 'b' || c == 'q') {
        ++pos_;
        unsigned exponent = 1;
        if (peek() == '^') {
          ++pos_;
          exponent = parse_uint();
        }
        auto e = static_cast<std::uint16_t>(exponent);
        if (c == 'a') mono.a = add_exponent(mono.a, e);
        if (c == 'b') mono.b = add_exponent(mono.b, e);
        if (c == 'q') mono.q = add_exponent(mono.q, e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return Poly(mono, coeff);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  return Monomial{add_exponent(a, other.a), add_exponent(b, other.b),
                  add_exponent(q, other.q)};
}

Poly::Poly(long long constant) : Poly(Integer(constant)) {}

Poly::Poly(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Poly::Poly(const Monomial& m, const Integer& coeff) {
  if (coeff != 0) terms_.emplace_back(m, coeff);
}

Poly Poly::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::kA:
      m.a = 1;
      break;
    case Var::kB:
      m.b = 1;
      break;
    case Var::kQ:
      m.q = 1;
      break;
  }
  return Poly(m, 1);
}

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} &&
         terms_[0].second == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].first == Monomial{});
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.total_degree();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

void Poly::add_scaled(const Poly& other, bool negate) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  while (it != terms_.end() || jt != other.terms_.end()) {
    if (jt == other.terms_.end() ||
        (it != terms_.end() && it->first < jt->first)) {
      merged.push_back(std::move(*it++));
    } else if (it == terms_.end() || jt->first < it->first) {
      merged.emplace_back(jt->first,
                          negate ? Integer(-jt->second) : jt->second);
      ++jt;
    } else {
      Integer sum = negate ? Integer(it->second - jt->second)
                           : Integer(it->second + jt->second);
      if (sum != 0) merged.emplace_back(it->first, std::move(sum));
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& other) {
  add_scaled(other, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add_scaled(other, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly out;
  if (x.is_zero() || y.is_zero()) return out;
  if (y.terms_.size() == 1 && y.terms_[0].first == Monomial{}) {
    out = x;
    for (auto& term : out.terms_) term.second *= y.terms_[0].second;
    return out;
  }
  if (x.terms_.size() == 1 && x.terms_[0].first == Monomial{}) {
    return y * x;
  }
  std::vector<Poly::Term> raw;
  raw.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      raw.emplace_back(mx * my, cx * cy);
    }
  }
  out.terms_ = canonicalize(std::move(raw));
  return out;
}

Integer Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().first == Monomial{}) {
    return terms_.front().second;
  }
  return 0;
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t Poly::eval_mod(const ModPoint& point,
                             std::uint64_t modulus) const {
  if (modulus <= 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "evaluation modulus must be a prime > 2");
  }
  const std::uint64_t a = point.a % modulus;
  const std::uint64_t b = point.b % modulus;
  const std::uint64_t q = point.q % modulus;
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t v = reduce_mod(c, modulus);
    if (m.a) v = mul_mod(v, pow_mod(a, m.a, modulus), modulus);
    if (m.b) v = mul_mod(v, pow_mod(b, m.b, modulus), modulus);
    if (m.q) v = mul_mod(v, pow_mod(q, m.q, modulus), modulus);
    acc = add_mod(acc, v, modulus);
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = m == Monomial{};
    bool wrote = false;
    if (magnitude != 1 || unit_monomial) {
      out << magnitude;
      wrote = true;
    }
    auto emit = [&](char name, std::uint16_t e) {
      if (e == 0) return;
      if (wrote) out << '*';
      out << name;
      if (e > 1) out << '^' << e;
      wrote = true;
    };
    emit('a', m.a);
    emit('b', m.b);
    emit('q', m.q);
  }
  return out.str();
}

}  // namespace hecke
