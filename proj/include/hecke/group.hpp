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

#ifndef HECKE_GROUP_HPP_
#define HECKE_GROUP_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hecke/lincomb.hpp"
#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

// Order relation s^o = c[0] s^(o-1) + ... + c[o-2] s + 1 of one generator.
struct GeneratorSpec {
  int order = 0;
  std::vector<Poly> coefficients;  // o - 1 entries, highest power first
};

// Presentation data of a rank-2 group: two generators with deformed order
// relations and one braid relation alt(2,1;m) = alt(1,2;m).
struct GroupSpec {
  std::string name;
  std::array<GeneratorSpec, 2> generators;
  Word braid_upper;  // deglex-larger side of the braid relation
  Word braid_lower;
  int artin_m = 0;
  std::size_t group_order = 0;

  const GeneratorSpec& generator(int g) const { return generators[g - 1]; }

  // s^o as a word and its right-hand side (a.ss + b.s + e for order 3).
  Word order_word(int g) const;
  LinComb order_rhs(int g) const;
  // The relation s^o - rhs, which vanishes in the Hecke algebra.
  LinComb order_relation(int g) const;
  // Positive expression of s-bar.
  LinComb inverse_image(int g) const;
};

}  // namespace hecke

#endif  // HECKE_GROUP_HPP_
