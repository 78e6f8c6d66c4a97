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

#include "hecke/group.hpp"

#include <string>

namespace hecke {

Word GroupSpec::order_word(int g) const {
  return Word::unchecked(std::string(
      static_cast<std::size_t>(generator(g).order), generator_letter(g)));
}

LinComb GroupSpec::order_rhs(int g) const {
  const GeneratorSpec& spec = generator(g);
  LinComb out{Word{}};
  for (int k = 1; k < spec.order; ++k) {
    // coefficients[0] multiplies s^(o-1), coefficients[o-2] multiplies s.
    const Poly& c =
        spec.coefficients[static_cast<std::size_t>(spec.order - 1 - k)];
    out.add(Word::unchecked(
                std::string(static_cast<std::size_t>(k), generator_letter(g))),
            c);
  }
  return out;
}

LinComb GroupSpec::order_relation(int g) const {
  return LinComb(order_word(g)) - order_rhs(g);
}

LinComb GroupSpec::inverse_image(int g) const {
  // s^o = sum_k c_k s^k + 1 gives s^-1 = s^(o-1) - sum_k c_k s^(k-1).
  const GeneratorSpec& spec = generator(g);
  LinComb out(Word::unchecked(std::string(
      static_cast<std::size_t>(spec.order - 1), generator_letter(g))));
  for (int k = 1; k < spec.order; ++k) {
    const Poly& c =
        spec.coefficients[static_cast<std::size_t>(spec.order - 1 - k)];
    out.add(Word::unchecked(std::string(static_cast<std::size_t>(k - 1),
                                        generator_letter(g))),
            -c);
  }
  return out;
}

}  // namespace hecke
