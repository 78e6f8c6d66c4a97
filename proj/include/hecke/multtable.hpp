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

#ifndef HECKE_MULTTABLE_HPP_
#define HECKE_MULTTABLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/basis.hpp"
#include "hecke/group.hpp"
#include "hecke/lincomb.hpp"
#include "hecke/poly.hpp"
#include "hecke/rewrite.hpp"

namespace hecke {

// Sparse column: (row ordinal, coefficient) pairs sorted by row.
using SparseColumn = std::vector<std::pair<std::size_t, Poly>>;

// Right-multiplication table in basis coordinates. Column j of generator s
// holds the coordinates of b_j * s, so the column-major matrix of generator
// s is the regular-representation matrix rho_s. Applying a word
// s_1 ... s_k to a coordinate vector v means v -> rho_{s_k} ... rho_{s_1} v.
struct MultTable {
  std::size_t rank = 0;
  std::array<std::vector<SparseColumn>, 2> columns;

  const SparseColumn& entry(std::size_t j, int generator) const {
    return columns[static_cast<std::size_t>(generator - 1)][j];
  }
};

struct TableOptions {
  ReduceOptions reduce;
  unsigned threads = 1;
};

// Reduces b_j * s for every basis word and generator. Any reduction failure
// is a spanning failure and is rethrown naming the offending pair.
MultTable build_table(const BasisSet& basis, const RuleList& rules,
                      const GroupSpec& group, const TableOptions& options = {});

LinComb entry_as_lincomb(const MultTable& table, const BasisSet& basis,
                         std::size_t j, int generator);

// One line per pair: "(<word>, <generator>) : <lincomb>".
std::string serialize_table(const MultTable& table, const BasisSet& basis);

struct IdentityVerdict {
  std::string identity;    // e.g. "order(2)" or "braid"
  std::string arithmetic;  // "exact" or "mod <prime>"
  ModPoint point;          // unused for exact checks
  bool passed = false;
  std::string witness;  // first differing matrix entry when failed
};

struct RelationOptions {
  unsigned trials = 5;  // random points per prime, besides the zero point
  std::vector<std::uint64_t> primes;  // empty means both built-in primes
  std::uint64_t seed = 20;
};

struct RelationReport {
  std::vector<IdentityVerdict> verdicts;
  bool passed() const;
};

// Order relations are checked once over Z[a, b, q] and at every sampled
// point; the braid relation only at sampled points. Each prime gets the zero
// point (the group algebra) plus `trials` uniformly random points.
RelationReport check_relations(const MultTable& table, const GroupSpec& group,
                               const RelationOptions& options = {});

struct CyclicityResult {
  bool passed = true;
  std::string witness;
};

// Feeds each basis word letter by letter to the vector of the empty word and
// expects to land on that word's unit vector.
CyclicityResult cyclicity_check(const MultTable& table, const BasisSet& basis);

}  // namespace hecke

#endif  // HECKE_MULTTABLE_HPP_
