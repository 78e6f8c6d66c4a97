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

#ifndef HECKE_FIXTURES_HPP_
#define HECKE_FIXTURES_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/lincomb.hpp"
#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

// Expression tree for rule right-hand sides.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := [scalar '.'] product
//   product := atom ('*' atom)*
//   atom    := WORD | NAME | red(expr) | tail{i,j,..}(expr) | (expr)
//
// NAME is "w" (the rule's left-hand side) or a bound auxiliary such as
// "w'", "w''", "w'''" or "wh". Scalars are polynomials, parenthesized when
// they have more than one term.
struct RhsExpr {
  enum class Kind { kWord, kName, kScale, kSum, kConcat, kTail, kRed };

  Kind kind = Kind::kWord;
  Word word;                         // kWord
  std::string name;                  // kName
  Poly scalar;                       // kScale
  std::vector<std::size_t> indices;  // kTail, 1-based original positions
  std::vector<RhsExpr> children;

  static RhsExpr parse(std::string_view text);
  static RhsExpr literal(const Word& w);

  // Canonical text form; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  friend bool operator==(const RhsExpr&, const RhsExpr&) = default;
};

enum class MoveKind { kBraid, kOrder, kSquare, kInv, kInsert, kCancel };
enum class Direction { kForward, kBackward };

std::string_view move_kind_name(MoveKind kind);

// One rewriting step applied to a single term of a linear combination.
//
//   braid  TERM @P FROM -> TO     replace the factor FROM at P by the
//                                 braid-equivalent word TO
//   order  TERM @P G fwd|bwd      s^o <-> its order-relation expansion
//                                 (bwd inserts s^o - ... in place of e at P)
//   square TERM @P G fwd|bwd      ss <-> a.s + b.e + s-bar  (order 3)
//                                 s  <-> q.e + s-bar        (order 2)
//   inv    TERM @P G fwd|bwd      s-bar <-> pos(s-bar)
//   insert TERM @P X              insert X X-bar at P (X in 1, 2, A, B)
//   cancel TERM @P                delete the cancelling pair at P
//
// Positions are 0-based offsets into TERM.
struct Move {
  MoveKind kind = MoveKind::kBraid;
  Word term;
  std::size_t position = 0;
  char letter = kOne;  // generator for order/square/inv, letter for insert
  Direction direction = Direction::kForward;
  Word from;  // braid
  Word to;    // braid

  static Move parse(std::string_view text);
  std::string to_string() const;
};

struct TraceStep {
  Move move;
  LinComb expression;  // value after the move
};

struct DerivationTrace {
  LinComb start;
  std::vector<TraceStep> steps;
};

struct FixtureRule {
  int id = 0;
  Word lhs;
  std::map<std::string, Word> bindings;
  RhsExpr rhs;
  std::optional<DerivationTrace> trace;
};

// Default fixture directory baked in at build time.
std::filesystem::path default_fixtures_dir();

GroupSpec load_group(std::string_view name,
                     const std::filesystem::path& dir = default_fixtures_dir());
std::vector<Word> load_dominant_terms(
    std::string_view name,
    const std::filesystem::path& dir = default_fixtures_dir());
std::vector<FixtureRule> load_rules(
    std::string_view name,
    const std::filesystem::path& dir = default_fixtures_dir());
// Only G20's basis is tabulated; the result has exactly |W| distinct words.
std::vector<Word> load_basis_fixture(
    std::string_view name,
    const std::filesystem::path& dir = default_fixtures_dir());

// Parsers over in-memory text, shared with the file loaders.
GroupSpec parse_group(std::string_view text);
std::vector<Word> parse_word_list(std::string_view text);
std::vector<FixtureRule> parse_rules(std::string_view text);
std::string serialize_rules(const std::vector<FixtureRule>& rules);

}  // namespace hecke

#endif  // HECKE_FIXTURES_HPP_
