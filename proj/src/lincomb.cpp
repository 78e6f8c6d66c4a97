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

#include <cctype>
#include <sstream>
#include <utility>

#include "hecke/error.hpp"
#include "hecke/group.hpp"

namespace hecke {

namespace {

bool is_scalar_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'b' ||
         c == 'q' || c == '*' || c == '^';
}

// Coefficient prefix without its sign; *negative is set when the term should
// be written with a minus.
std::string render_coefficient(const Poly& c, bool* negative) {
  *negative = false;
  if (c.terms().size() == 1) {
    const auto& [m, value] = c.terms().front();
    Poly magnitude = value < 0 ? -c : c;
    *negative = value < 0;
    if (magnitude.is_one()) return "";
    return magnitude.to_string() + ".";
  }
  return "(" + c.to_string() + ").";
}

}  // namespace

LinComb::LinComb(const Word& w) { terms_.emplace(w, Poly(1)); }

LinComb::LinComb(const Word& w, const Poly& coeff) {
  if (!coeff.is_zero()) terms_.emplace(w, coeff);
}

Poly LinComb::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly() : it->second;
}

bool LinComb::is_positive() const {
  for (const auto& [w, c] : terms_) {
    if (!w.is_positive()) return false;
  }
  return true;
}

void LinComb::add(const Word& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LinComb::add(Word&& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

LinComb& LinComb::add_scaled(const LinComb& other, const Poly& scalar) {
  if (scalar.is_one()) return *this += other;
  if ((-scalar).is_one()) return *this -= other;
  for (const auto& [w, c] : other.terms_) add(w, scalar * c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Poly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

LinComb LinComb::operator-() const {
  LinComb out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

LinComb operator*(const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [u, cu] : x.terms_) {
    for (const auto& [v, cv] : y.terms_) out.add(u + v, cu * cv);
  }
  return out;
}

LinComb LinComb::prepend(const Word& prefix) const {
  LinComb out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(prefix + w, c);
  return out;
}

LinComb LinComb::append(const Word& suffix) const {
  LinComb out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w + suffix, c);
  return out;
}

LinComb LinComb::specialize_zero() const {
  LinComb out;
  for (const auto& [w, c] : terms_) out.add(w, Poly(c.constant_term()));
  return out;
}

std::string LinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool negative = false;
    std::string prefix = render_coefficient(it->second, &negative);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    out << prefix << it->first.to_string();
    first = false;
  }
  return out.str();
}

LinComb LinComb::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::kParse, "cannot parse linear combination '" +
                                        std::string(text) + "': " + why);
  };
  LinComb out;
  if (s == "0") return out;
  if (s.empty()) throw fail("empty");
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Poly coeff(1);
    if (i < s.size() && s[i] == '(') {
      int depth = 0;
      std::size_t j = i;
      for (; j < s.size(); ++j) {
        if (s[j] == '(') ++depth;
        if (s[j] == ')' && --depth == 0) break;
      }
      if (j >= s.size() || j + 1 >= s.size() || s[j + 1] != '.') {
        throw fail("parenthesized coefficient must be followed by '.'");
      }
      coeff = Poly::parse(s.substr(i + 1, j - i - 1));
      i = j + 2;
    } else {
      std::size_t j = i;
      while (j < s.size() && is_scalar_char(s[j])) ++j;
      if (j < s.size() && s[j] == '.') {
        coeff = Poly::parse(s.substr(i, j - i));
        i = j + 1;
      }
    }
    std::size_t j = i;
    while (j < s.size() && (is_letter(s[j]) || s[j] == 'e')) ++j;
    if (j == i) throw fail("expected a word at offset " + std::to_string(i));
    Word w = Word::parse(s.substr(i, j - i));
    i = j;
    out.add(w, negative ? -coeff : coeff);
  }
  return out;
}

LinComb red(const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x.terms()) out.add(red(w), c);
  return out;
}

LinComb pos(const LinComb& x, const GroupSpec& group) {
  const std::array<LinComb, 2> images = {group.inverse_image(1),
                                         group.inverse_image(2)};
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    if (w.is_positive()) {
      out.add(w, c);
      continue;
    }
    // Expand left to right, carrying the partial products; maximal runs of
    // positive letters are appended in one step.
    LinComb partial(Word(), c);
    std::string run;
    auto flush = [&] {
      if (!run.empty()) {
        partial = partial.append(Word::unchecked(run));
        run.clear();
      }
    };
    for (char letter : w.letters()) {
      if (is_positive_letter(letter)) {
        run.push_back(letter);
        continue;
      }
      flush();
      partial = partial * images[generator_of(letter) - 1];
    }
    flush();
    out += partial;
  }
  return out;
}

}  // namespace hecke
