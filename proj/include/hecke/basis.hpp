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

#ifndef HECKE_BASIS_HPP_
#define HECKE_BASIS_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hecke/word.hpp"

namespace hecke {

// The positive words avoiding every pattern as a factor, deglex-sorted. The
// position of a word in `words` is its ordinal everywhere downstream.
struct BasisSet {
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t> index;

  std::size_t size() const { return words.size(); }
  bool contains(const Word& w) const { return index.count(w) != 0; }
  std::optional<std::size_t> ordinal(const Word& w) const;
};

struct EnumerateOptions {
  // Words longer than this must not survive; defaults to the sum of the
  // pattern lengths, which bounds the longest avoider of a finite language.
  std::optional<std::size_t> length_bound;
};

// Breadth-first growth over {1, 2}* through the pattern automaton, pruning
// at the first completed pattern. Throws kInvalidArgument on an empty pattern
// list and kInfinite when an avoider longer than the bound exists. Without an
// explicit bound, infinite languages are rejected up front by cycle detection.
BasisSet enumerate_basis(const std::vector<Word>& patterns,
                         const EnumerateOptions& options = {});

// Cycle detection on the avoiding part of the pattern automaton: the
// avoidance language is finite iff no cycle is reachable from the root.
bool avoidance_language_finite(const std::vector<Word>& patterns);

// Every contiguous factor of every word is again in the set.
bool is_factor_closed(const BasisSet& basis);

}  // namespace hecke

#endif  // HECKE_BASIS_HPP_
