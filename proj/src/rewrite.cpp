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

#include "hecke/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hecke/error.hpp"
#include "hecke/expansion.hpp"

namespace hecke {

namespace {

std::string trim_copy(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

RuleList::RuleList(std::vector<Word> dominant_terms)
    : obstructions_(std::move(dominant_terms)) {}

void RuleList::append(Rule rule) {
  std::vector<std::pair<std::string, Poly>> flat;
  flat.reserve(rule.rhs.size());
  for (auto it = rule.rhs.terms().rbegin(); it != rule.rhs.terms().rend();
       ++it) {
    flat.emplace_back(it->first.letters(), it->second);
  }
  flat_.push_back(std::move(flat));
  rules_.push_back(std::move(rule));
  leading_ = PatternMatcher(leading_terms());
}

std::vector<Word> RuleList::leading_terms() const {
  std::vector<Word> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(r.lhs);
  return out;
}

bool RuleList::is_complete() const {
  std::set<Word> lhs;
  for (const auto& r : rules_) lhs.insert(r.lhs);
  std::set<Word> dominant(dominant_terms().begin(), dominant_terms().end());
  return lhs == dominant && lhs.size() == rules_.size();
}

std::string RuleList::serialize() const {
  std::ostringstream out;
  for (const auto& r : rules_) {
    out << "rule " << r.id << ' ' << r.lhs.to_string() << '\n';
    for (auto it = r.rhs.terms().rbegin(); it != r.rhs.terms().rend(); ++it) {
      out << "  " << it->first.to_string() << " : " << it->second.to_string()
          << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

RuleList RuleList::parse(std::string_view text,
                         std::vector<Word> dominant_terms) {
  RuleList list(std::move(dominant_terms));
  std::istringstream in{std::string(text)};
  std::optional<Rule> current;
  for (std::string raw; std::getline(in, raw);) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!current) {
      std::istringstream toks(line);
      std::string kw, lhs;
      int id = 0;
      if (!(toks >> kw >> id >> lhs) || kw != "rule") {
        throw Error(ErrorKind::kParse, "expected 'rule <id> <lhs>': " + line);
      }
      current = Rule{id, Word::parse(lhs), LinComb()};
    } else if (line == "end") {
      list.append(std::move(*current));
      current.reset();
    } else {
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorKind::kParse, "expected '<word> : <poly>': " + line);
      }
      current->rhs.add(Word::parse(trim_copy(line.substr(0, colon))),
                       Poly::parse(line.substr(colon + 1)));
    }
  }
  if (current) throw Error(ErrorKind::kParse, "unterminated compiled rule");
  return list;
}

namespace {

std::string splice(const std::string& word, std::size_t position,
                   std::size_t length, const std::string& middle) {
  std::string out;
  out.reserve(word.size() - length + middle.size());
  out.append(word, 0, position);
  out += middle;
  out.append(word, position + length);
  return out;
}

[[noreturn]] void throw_fuel(std::uint64_t fuel, const std::string& word) {
  throw Error(ErrorKind::kFuelExhausted,
              "reduction exceeded " + std::to_string(fuel) +
                  " rewrites (last word " + Word::unchecked(word).to_string() +
                  ")");
}

LinComb reduce_greedy(const LinComb& positive, const RuleList& rules,
                      const ReduceOptions& options, std::uint64_t& rewrites) {
  std::map<std::string, Poly, DeglexGreater> pending;
  for (const auto& [w, c] : positive.terms()) pending.emplace(w.letters(), c);

  const PatternMatcher& leading = rules.leading_matcher();
  const PatternMatcher& obstructions = rules.obstruction_matcher();
  LinComb result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& word = node.key();
    const Poly& coeff = node.mapped();

    auto match = options.selection == RuleSelection::kFirstOccurrence
                     ? leading.find_earliest(word, options.occurrence)
                     : leading.find_first(word, options.occurrence);
    if (!match) {
      if (obstructions.matches_any(word)) {
        throw Error(ErrorKind::kReduceFail,
                    "word " + Word::unchecked(word).to_string() +
                        " contains a dominant term but no rule applies");
      }
      result.add(Word::unchecked(word), coeff);
      continue;
    }
    if (++rewrites > options.fuel) throw_fuel(options.fuel, word);
    const std::size_t len = rules.rules()[match->index].lhs.size();
    for (const auto& [u, c] : rules.flat_rhs(match->index)) {
      Poly product = coeff * c;
      auto [it, inserted] =
          pending.try_emplace(splice(word, match->position, len, u), product);
      if (!inserted) {
        it->second += product;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

// Depth-first search over rewrite choices with per-word memoization. A word
// maps to nullopt when no choice avoids a stuck word.
class Backtracker {
 public:
  Backtracker(const RuleList& rules, const ReduceOptions& options,
              std::uint64_t& rewrites)
      : rules_(rules), options_(options), rewrites_(rewrites) {}

  const std::optional<LinComb>& normal_form(const std::string& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    std::optional<LinComb> found;
    auto matches = rules_.leading_matcher().find_all(word);
    if (options_.occurrence == Occurrence::kRightmost) {
      std::stable_sort(
          matches.begin(), matches.end(),
          [](const auto& x, const auto& y) { return x.position > y.position; });
    }
    if (matches.empty()) {
      if (!rules_.obstruction_matcher().matches_any(word)) {
        found = LinComb(Word::unchecked(word));
      }
    }
    for (const auto& m : matches) {
      if (++rewrites_ > options_.fuel) throw_fuel(options_.fuel, word);
      const std::size_t len = rules_.rules()[m.index].lhs.size();
      LinComb sum;
      bool ok = true;
      for (const auto& [u, c] : rules_.flat_rhs(m.index)) {
        const auto& part = normal_form(splice(word, m.position, len, u));
        if (!part) {
          ok = false;
          break;
        }
        sum.add_scaled(*part, c);
      }
      if (ok) {
        found = std::move(sum);
        break;
      }
    }
    return memo_.insert_or_assign(word, std::move(found)).first->second;
  }

 private:
  const RuleList& rules_;
  const ReduceOptions& options_;
  std::uint64_t& rewrites_;
  std::unordered_map<std::string, std::optional<LinComb>> memo_;
};

}  // namespace

LinComb reduce(const LinComb& x, const RuleList& rules, const GroupSpec& group,
               const ReduceOptions& options, ReduceStats* stats) {
  LinComb positive = pos(x, group);
  if (stats) stats->positive_terms = positive.size();
  std::uint64_t rewrites = 0;
  LinComb result;
  if (options.search == Search::kGreedy) {
    result = reduce_greedy(positive, rules, options, rewrites);
  } else {
    Backtracker search(rules, options, rewrites);
    for (const auto& [w, c] : positive.terms()) {
      const auto& nf = search.normal_form(w.letters());
      if (!nf) {
        throw Error(ErrorKind::kReduceFail, "no choice of rewrites brings " +
                                                w.to_string() +
                                                " to pattern-avoiding words");
      }
      result += c * *nf;
    }
  }
  if (stats) stats->rewrites = rewrites;
  return result;
}

LinComb eval_rhs(const RhsExpr& expr, const Word& lhs,
                 const std::map<std::string, Word>& bindings,
                 const GroupSpec& group) {
  switch (expr.kind) {
    case RhsExpr::Kind::kWord:
      return LinComb(expr.word);
    case RhsExpr::Kind::kName: {
      if (expr.name == "w") return LinComb(lhs);
      auto it = bindings.find(expr.name);
      if (it == bindings.end()) {
        throw Error(ErrorKind::kFixture, "unbound name '" + expr.name + "'");
      }
      return LinComb(it->second);
    }
    case RhsExpr::Kind::kScale:
      return expr.scalar *
             eval_rhs(expr.children.front(), lhs, bindings, group);
    case RhsExpr::Kind::kSum: {
      LinComb out;
      for (const auto& c : expr.children) {
        out += eval_rhs(c, lhs, bindings, group);
      }
      return out;
    }
    case RhsExpr::Kind::kConcat: {
      LinComb out(Word{});
      for (const auto& c : expr.children) {
        out = out * eval_rhs(c, lhs, bindings, group);
      }
      return out;
    }
    case RhsExpr::Kind::kTail: {
      LinComb arg = eval_rhs(expr.children.front(), lhs, bindings, group);
      if (arg.size() != 1 || !arg.terms().begin()->second.is_one()) {
        throw Error(ErrorKind::kFixture,
                    "tail argument must evaluate to a single word, got " +
                        arg.to_string());
      }
      return tail(arg.terms().begin()->first, expr.indices, group);
    }
    case RhsExpr::Kind::kRed:
      return red(eval_rhs(expr.children.front(), lhs, bindings, group));
  }
  return {};
}

CompileResult compile_rules(const GroupSpec& group,
                            const std::vector<FixtureRule>& raw,
                            const std::vector<Word>& dominant_terms,
                            const ReduceOptions& options) {
  CompileResult out{RuleList(dominant_terms), {}};
  std::set<Word> dominant(dominant_terms.begin(), dominant_terms.end());
  std::set<Word> seen;
  for (const auto& r : raw) {
    const std::string tag =
        "rule " + std::to_string(r.id) + " (" + r.lhs.to_string() + ")";
    if (!dominant.count(r.lhs)) {
      throw Error(ErrorKind::kFixture, tag + ": lhs is not a dominant term");
    }
    if (!seen.insert(r.lhs).second) {
      throw Error(ErrorKind::kFixture, tag + ": duplicate lhs");
    }
    LinComb value = eval_rhs(r.rhs, r.lhs, r.bindings, group);
    ReduceStats stats;
    LinComb compiled;
    try {
      compiled = reduce(value, out.rules, group, options, &stats);
    } catch (const Error& e) {
      throw Error(e.kind(), tag + ": " + e.what());
    }
    for (const auto& [w, c] : compiled.terms()) {
      if (out.rules.obstruction_matcher().matches_any(w)) {
        throw Error(ErrorKind::kSupportViolation,
                    tag + ": compiled term " + w.to_string() +
                        " contains a dominant term");
      }
      if (!(w < r.lhs)) {
        throw Error(ErrorKind::kLeadingTermViolation,
                    tag + ": compiled term " + w.to_string() +
                        " is not deglex-smaller than the lhs");
      }
    }
    out.info.push_back({r.id, value.size(), compiled.size(), stats.rewrites,
                        compiled == value});
    out.rules.append(Rule{r.id, r.lhs, std::move(compiled)});
  }
  return out;
}

}  // namespace hecke
