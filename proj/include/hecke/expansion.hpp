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

#ifndef HECKE_EXPANSION_HPP_
#define HECKE_EXPANSION_HPP_

#include <cstddef>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/lincomb.hpp"
#include "hecke/word.hpp"

namespace hecke {

// exp_I(y) = tail_I(y) + head_I(y).
struct Expansion {
  LinComb tail;
  Word head;
};

// Partially defined expansion of `y` at the original (1-based) positions in
// `indices`, processed in increasing order.
//
// Each letter remembers its original position. For the generator s at the
// requested position, with s^o = c_0 s^(o-1) + ... + c_(o-2) s + 1:
//   - the current word must carry o-1 consecutive letters s starting there
//     (a single 1 for G21's order-2 generator, "22" for an order-3 one);
//   - the identity s^(o-1) = c_0 s^(o-2) + ... + c_(o-2) + s-bar contributes
//     the tail terms c_k . (word with the run replaced by s^(o-2-k));
//   - the run collapses to a single s-bar keeping the original position.
//
// Throws kIndexOutOfRange when a position is absent from the current word
// and kLetterMismatch when the letters there do not form such a run.
Expansion expand(const Word& y, const std::vector<std::size_t>& indices,
                 const GroupSpec& group);

inline LinComb tail(const Word& y, const std::vector<std::size_t>& indices,
                    const GroupSpec& group) {
  return expand(y, indices, group).tail;
}

inline Word head(const Word& y, const std::vector<std::size_t>& indices,
                 const GroupSpec& group) {
  return expand(y, indices, group).head;
}

}  // namespace hecke

#endif  // HECKE_EXPANSION_HPP_
