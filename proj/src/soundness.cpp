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

#include "hecke/soundness.hpp"

#include <string>
#include <utility>
#include <vector>

#include "hecke/expansion.hpp"
#include "hecke/rewrite.hpp"

namespace hecke {

namespace {

[[noreturn]] void mismatch(const Move& move, const std::string& why) {
  throw Error(ErrorKind::kStepMismatch, move.to_string() + ": " + why);
}

// Coefficient c_k of s^k in the order relation, 0 <= k <= o - 2.
const Poly& power_coefficient(const GeneratorSpec& gen, int k) {
  return gen.coefficients[gen.order - 1 - k];
}

Word power(char letter, int k) {
  return Word::unchecked(std::string(static_cast<std::size_t>(k), letter));
}

bool has_run(const Word& t, std::size_t pos, char letter, std::size_t len) {
  if (pos + len > t.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (t[i] != letter) return false;
  }
  return true;
}

// u * replacement * v where t = u * (len letters at pos) * v.
LinComb splice(const Word& t, std::size_t pos, std::size_t len,
               const LinComb& replacement) {
  return replacement.prepend(t.substr(0, pos)).append(t.substr(pos + len));
}

// s^(o-1) = c_(o-1) s^(o-2) + ... + c_1 s^0 + s-bar.
LinComb square_expansion(const GeneratorSpec& gen, char s) {
  LinComb out{Word::unchecked(std::string(1, bar(s)))};
  for (int k = 1; k <= gen.order - 1; ++k) {
    out.add(power(s, k - 1), power_coefficient(gen, k));
  }
  return out;
}

}  // namespace

LinComb apply_move(const LinComb& expr, const Move& move,
                   const GroupSpec& group, const DihedralArtin& artin) {
  const Poly coeff = expr.coefficient(move.term);
  if (coeff.is_zero()) mismatch(move, "term is not in the expression");
  const Word& t = move.term;
  const std::size_t p = move.position;
  if (p > t.size()) mismatch(move, "position past the end of the term");

  LinComb replacement;
  switch (move.kind) {
    case MoveKind::kBraid: {
      if (t.substr(p, move.from.size()) != move.from) {
        mismatch(move, "factor not found at the position");
      }
      if (!artin.equal(move.from, move.to)) {
        mismatch(move, "not equal in the Artin group");
      }
      replacement = splice(t, p, move.from.size(), LinComb{move.to});
      break;
    }
    case MoveKind::kOrder: {
      const int g = generator_of(move.letter);
      const GeneratorSpec& gen = group.generator(g);
      const std::size_t o = static_cast<std::size_t>(gen.order);
      if (move.direction == Direction::kForward) {
        if (!has_run(t, p, move.letter, o)) mismatch(move, "no s^o here");
        replacement = splice(t, p, o, group.order_rhs(g));
      } else {
        // e = s^o - c_(o-2) s^(o-1) - ... - c_0 s.
        replacement =
            splice(t, p, 0, LinComb{Word{}} + group.order_relation(g));
      }
      break;
    }
    case MoveKind::kSquare:
    case MoveKind::kInv: {
      const int g = generator_of(move.letter);
      const GeneratorSpec& gen = group.generator(g);
      const char s = generator_letter(g);
      const std::size_t run = static_cast<std::size_t>(gen.order - 1);
      // square fwd and inv bwd turn s^(o-1) into its expansion with s-bar;
      // the other two directions turn s-bar into pos(s-bar).
      const bool collapse = (move.kind == MoveKind::kSquare) ==
                            (move.direction == Direction::kForward);
      if (collapse) {
        if (!has_run(t, p, s, run)) mismatch(move, "no s^(o-1) here");
        replacement = splice(t, p, run, square_expansion(gen, s));
      } else {
        if (p >= t.size() || t[p] != bar(s)) mismatch(move, "no s-bar here");
        replacement = splice(t, p, 1, group.inverse_image(g));
      }
      break;
    }
    case MoveKind::kInsert: {
      const std::string pair{move.letter, bar(move.letter)};
      replacement = splice(t, p, 0, LinComb{Word::unchecked(pair)});
      break;
    }
    case MoveKind::kCancel: {
      if (p + 2 > t.size() || t[p + 1] != bar(t[p])) {
        mismatch(move, "no cancelling pair here");
      }
      replacement = splice(t, p, 2, LinComb{Word{}});
      break;
    }
  }
  LinComb out = expr;
  out.add(t, -coeff);
  out += coeff * replacement;
  return out;
}

RuleVerdict check_trace(const FixtureRule& rule, const GroupSpec& group) {
  RuleVerdict v;
  v.id = rule.id;
  v.method = "trace";
  if (!rule.trace) {
    v.failure = ErrorKind::kFixture;
    v.witness = "rule has no derivation trace";
    return v;
  }
  const DerivationTrace& trace = *rule.trace;
  const DihedralArtin artin(group.artin_m);
  if (trace.start != LinComb{rule.lhs}) {
    v.failure = ErrorKind::kStepMismatch;
    v.witness = "trace starts at " + trace.start.to_string() + ", not " +
                rule.lhs.to_string();
    return v;
  }
  LinComb current = trace.start;
  for (const TraceStep& step : trace.steps) {
    CheckVerdict c;
    c.label = step.move.to_string();
    try {
      LinComb next = apply_move(current, step.move, group, artin);
      if (next == step.expression) {
        c.passed = true;
      } else {
        c.witness = "computed " + next.to_string() + ", recorded " +
                    step.expression.to_string();
      }
    } catch (const Error& e) {
      c.witness = e.what();
    }
    const bool ok = c.passed;
    v.checks.push_back(std::move(c));
    if (!ok) {
      v.failure = ErrorKind::kStepMismatch;
      v.witness = v.checks.back().witness;
      return v;
    }
    current = step.expression;
  }
  const LinComb target =
      red(eval_rhs(rule.rhs, rule.lhs, rule.bindings, group));
  CheckVerdict final_check;
  final_check.label = "final expression equals the right-hand side";
  final_check.passed = red(current) == target;
  if (!final_check.passed) {
    final_check.witness = "trace ends at " + red(current).to_string() +
                          ", right-hand side is " + target.to_string();
    v.failure = ErrorKind::kStepMismatch;
    v.witness = final_check.witness;
  }
  v.passed = final_check.passed;
  v.checks.push_back(std::move(final_check));
  return v;
}

namespace {

struct TailLink {
  Word argument;  // x_i
  std::vector<std::size_t> indices;
};

struct TailShape {
  std::vector<TailLink> tails;
  std::vector<Word> finals;
  bool other = false;  // anything outside sums, red, tails and words
};

Word single_word(const RhsExpr& e, const FixtureRule& rule,
                 const GroupSpec& group) {
  const LinComb x = eval_rhs(e, rule.lhs, rule.bindings, group);
  if (x.size() != 1 || x.terms().begin()->second != Poly(1)) {
    throw Error(ErrorKind::kGlueMismatch,
                "expected a single word, got " + x.to_string());
  }
  return x.terms().begin()->first;
}

void flatten(const RhsExpr& e, const FixtureRule& rule, const GroupSpec& group,
             TailShape& shape) {
  switch (e.kind) {
    case RhsExpr::Kind::kRed:
    case RhsExpr::Kind::kSum:
      for (const RhsExpr& c : e.children) flatten(c, rule, group, shape);
      return;
    case RhsExpr::Kind::kTail:
      shape.tails.push_back(
          {single_word(e.children.front(), rule, group), e.indices});
      return;
    case RhsExpr::Kind::kWord:
    case RhsExpr::Kind::kName:
    case RhsExpr::Kind::kConcat:
      shape.finals.push_back(single_word(e, rule, group));
      return;
    case RhsExpr::Kind::kScale:
      shape.other = true;
      return;
  }
}

}  // namespace

RuleVerdict verify_tail_rule(const FixtureRule& rule, const GroupSpec& group) {
  RuleVerdict v;
  v.id = rule.id;
  const int m = group.artin_m;
  auto link = [&](std::string label, const Word& x, const Word& y) {
    CheckVerdict c;
    c.label = std::move(label);
    c.passed = braid_equal(x, y, m);
    if (!c.passed) {
      c.witness = x.to_string() + " and " + y.to_string() +
                  " differ in the Artin group";
    }
    v.checks.push_back(std::move(c));
    return v.checks.back().passed;
  };
  auto fail = [&](ErrorKind kind, std::string why) {
    v.failure = kind;
    v.witness = std::move(why);
    return v;
  };

  TailShape shape;
  try {
    flatten(rule.rhs, rule, group, shape);
  } catch (const Error& e) {
    return fail(ErrorKind::kGlueMismatch, e.what());
  }

  if (shape.tails.empty()) {
    const LinComb rhs = eval_rhs(rule.rhs, rule.lhs, rule.bindings, group);
    for (int g = 1; g <= 2; ++g) {
      if (rule.lhs == group.order_word(g) && rhs == group.order_rhs(g)) {
        v.method = "order relation";
        v.passed = true;
        return v;
      }
    }
    v.method = "braid";
    if (shape.other || shape.finals.size() != 1) {
      return fail(ErrorKind::kGlueMismatch,
                  "neither an order relation nor a single braid word");
    }
    if (!link("lhs ~ rhs", rule.lhs, shape.finals.front())) {
      return fail(ErrorKind::kGlueMismatch, v.checks.back().witness);
    }
    v.passed = true;
    return v;
  }

  v.method = "tail-glue";
  if (shape.other || shape.finals.size() != 1) {
    return fail(ErrorKind::kGlueMismatch,
                "expected tails followed by exactly one final word");
  }
  try {
    if (!link("red(x1) ~ lhs", red(shape.tails.front().argument), rule.lhs)) {
      return fail(ErrorKind::kGlueMismatch, v.checks.back().witness);
    }
    for (std::size_t i = 0; i < shape.tails.size(); ++i) {
      const TailLink& t = shape.tails[i];
      const Word h = head(t.argument, t.indices, group);
      const bool last = i + 1 == shape.tails.size();
      const Word& next =
          last ? shape.finals.front() : shape.tails[i + 1].argument;
      const std::string label = "head(x" + std::to_string(i + 1) + ") ~ " +
                                (last ? std::string("red(final)")
                                      : "red(x" + std::to_string(i + 2) + ")");
      if (!link(label, h, red(next))) {
        return fail(ErrorKind::kGlueMismatch, v.checks.back().witness);
      }
    }
  } catch (const Error& e) {
    return fail(ErrorKind::kGlueMismatch, e.what());
  }
  v.passed = true;
  return v;
}

RuleVerdict verify_rule(const FixtureRule& rule, const GroupSpec& group) {
  return rule.trace ? check_trace(rule, group) : verify_tail_rule(rule, group);
}

}  // namespace hecke
