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

#include "hecke/garside.hpp"

#include <utility>

#include "hecke/error.hpp"

namespace hecke {

namespace {

char other(char letter) { return letter == kOne ? kTwo : kOne; }

char last_letter(Simple s) {
  return s.length % 2 == 1 ? s.first : other(s.first);
}

}  // namespace

std::string GarsideNF::to_string() const {
  std::string out = "D^" + std::to_string(infimum);
  for (const Simple& s : factors) {
    out += " . ";
    out += alternating(s.first, static_cast<std::size_t>(s.length)).to_string();
  }
  return out;
}

DihedralArtin::DihedralArtin(int m) : m_(m) {
  if (m < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "Artin parameter must be at least 3, got " + std::to_string(m));
  }
}

Simple DihedralArtin::tau(Simple s) const {
  if (m_ % 2 == 1) s.first = other(s.first);
  return s;
}

void DihedralArtin::multiply_simple(GarsideNF& x, Simple y) const {
  // Right-to-left sweep: each factor absorbs what it can of the simple
  // travelling leftwards; the remainder takes the freed slot.
  std::vector<Simple>& f = x.factors;
  f.push_back(Simple{kOne, 0});
  std::size_t i = f.size() - 1;
  Simple carry = y;
  while (i > 0 && carry.length > 0) {
    const Simple left = f[i - 1];
    Simple new_left, new_right;
    if (carry.length == m_) {
      new_left = carry;
      new_right = tau(left);
    } else if (carry.first == last_letter(left)) {
      break;  // already left-weighted
    } else {
      int total = left.length + carry.length;
      if (total <= m_) {
        new_left = {left.first, total};
        new_right = {kOne, 0};
      } else {
        // alt(s, total) = Delta * alt(s', total - m), s' the letter at
        // position m + 1.
        char next = m_ % 2 == 0 ? left.first : other(left.first);
        new_left = {left.first, m_};
        new_right = {next, total - m_};
      }
    }
    f[i] = new_right;
    carry = new_left;
    --i;
  }
  f[i] = carry;

  // Collect the Delta factors, which the sweep leaves at the front, and drop
  // identities.
  std::vector<Simple> kept;
  for (const Simple& s : f) {
    if (s.length == m_ && kept.empty()) {
      ++x.infimum;
    } else if (s.length == m_) {
      // Not expected after a complete sweep; move it left explicitly.
      for (Simple& k : kept) k = tau(k);
      ++x.infimum;
    } else if (s.length > 0) {
      kept.push_back(s);
    }
  }
  f = std::move(kept);
}

void DihedralArtin::multiply(GarsideNF& x, char letter) const {
  if (is_positive_letter(letter)) {
    multiply_simple(x, Simple{letter, 1});
    return;
  }
  // s-bar = Delta^-1 * tau(alt(other(s), m - 1)), and F * Delta^-1 =
  // Delta^-1 * tau(F).
  char s = letter == kOneBar ? kOne : kTwo;
  --x.infimum;
  for (Simple& k : x.factors) k = tau(k);
  multiply_simple(x, tau(Simple{other(s), m_ - 1}));
}

GarsideNF DihedralArtin::nf(const Word& w) const {
  GarsideNF x;
  for (char letter : w.letters()) multiply(x, letter);
  return x;
}

GarsideNF nf(const Word& w, int m) { return DihedralArtin(m).nf(w); }

bool braid_equal(const Word& u, const Word& v, int m) {
  return DihedralArtin(m).equal(u, v);
}

}  // namespace hecke
