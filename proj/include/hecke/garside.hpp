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

#ifndef HECKE_GARSIDE_HPP_
#define HECKE_GARSIDE_HPP_

#include <string>
#include <vector>

#include "hecke/word.hpp"

namespace hecke {

// A simple element of the dihedral Artin monoid with relation
// alt(1, m) = alt(2, m): the alternating word of the given length starting
// with `first`. Length 0 is the identity and length m is Delta.
struct Simple {
  char first = kOne;
  int length = 0;
  friend bool operator==(const Simple&, const Simple&) = default;
};

// Left-greedy normal form Delta^infimum * factors, every factor proper
// (0 < length < m) and every adjacent pair left-weighted. Two words are equal
// in the Artin group iff their normal forms coincide.
struct GarsideNF {
  int infimum = 0;
  std::vector<Simple> factors;
  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;

  // "D^<p>" followed by the factors as words, e.g. "D^-1 . 121 . 21".
  std::string to_string() const;
};

class DihedralArtin {
 public:
  // Throws kInvalidArgument unless m >= 3.
  explicit DihedralArtin(int m);

  int m() const { return m_; }
  GarsideNF nf(const Word& w) const;
  bool equal(const Word& u, const Word& v) const { return nf(u) == nf(v); }

  // Right multiplication of a normal form by one letter, barred or not.
  void multiply(GarsideNF& x, char letter) const;

 private:
  Simple tau(Simple s) const;
  void multiply_simple(GarsideNF& x, Simple y) const;

  int m_;
};

GarsideNF nf(const Word& w, int m);
bool braid_equal(const Word& u, const Word& v, int m);

}  // namespace hecke

#endif  // HECKE_GARSIDE_HPP_
