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

#include "hecke/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hecke/error.hpp"

#ifndef HECKE_FIXTURES_DIR
#define HECKE_FIXTURES_DIR "fixtures"
#endif

namespace hecke {

namespace {

[[noreturn]] void fixture_error(const std::string& what) {
  throw Error(ErrorKind::kFixture, what);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fixture_error("cannot open fixture file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_scalar_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'b' ||
         c == 'q' || c == '*' || c == '^';
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : original_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  RhsExpr parse_all() {
    RhsExpr e = parse_expr();
    if (i_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse, "cannot parse expression '" + original_ +
                                       "' at offset " + std::to_string(i_) +
                                       ": " + why);
  }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t j = open; j < s_.size(); ++j) {
      if (s_[j] == '(') ++depth;
      if (s_[j] == ')' && --depth == 0) return j;
    }
    fail("unbalanced parenthesis");
  }

  RhsExpr parse_expr() {
    std::vector<RhsExpr> terms;
    bool first = true;
    while (true) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      first = false;
      RhsExpr t = parse_term();
      if (negative) {
        if (t.kind == RhsExpr::Kind::kScale) {
          t.scalar = -t.scalar;
        } else {
          RhsExpr scaled;
          scaled.kind = RhsExpr::Kind::kScale;
          scaled.scalar = Poly(-1);
          scaled.children.push_back(std::move(t));
          t = std::move(scaled);
        }
      }
      terms.push_back(std::move(t));
    }
    if (terms.size() == 1) return std::move(terms.front());
    RhsExpr sum;
    sum.kind = RhsExpr::Kind::kSum;
    sum.children = std::move(terms);
    return sum;
  }

  RhsExpr parse_term() {
    std::optional<Poly> scalar;
    if (peek() == '(') {
      std::size_t close = matching_paren(i_);
      if (close + 1 < s_.size() && s_[close + 1] == '.') {
        scalar = Poly::parse(s_.substr(i_ + 1, close - i_ - 1));
        i_ = close + 2;
      }
    } else {
      std::size_t j = i_;
      while (j < s_.size() && is_scalar_char(s_[j])) ++j;
      if (j > i_ && j < s_.size() && s_[j] == '.') {
        scalar = Poly::parse(s_.substr(i_, j - i_));
        i_ = j + 1;
      }
    }
    RhsExpr product = parse_product();
    if (!scalar) return product;
    RhsExpr scaled;
    scaled.kind = RhsExpr::Kind::kScale;
    scaled.scalar = *scalar;
    scaled.children.push_back(std::move(product));
    return scaled;
  }

  RhsExpr parse_product() {
    std::vector<RhsExpr> atoms;
    atoms.push_back(parse_atom());
    while (peek() == '*') {
      ++i_;
      atoms.push_back(parse_atom());
    }
    if (atoms.size() == 1) return std::move(atoms.front());
    RhsExpr concat;
    concat.kind = RhsExpr::Kind::kConcat;
    concat.children = std::move(atoms);
    return concat;
  }

  RhsExpr parse_atom() {
    if (s_.compare(i_, 4, "red(") == 0) {
      i_ += 3;
      expect('(');
      RhsExpr node;
      node.kind = RhsExpr::Kind::kRed;
      node.children.push_back(parse_expr());
      expect(')');
      return node;
    }
    if (s_.compare(i_, 5, "tail{") == 0) {
      i_ += 4;
      expect('{');
      RhsExpr node;
      node.kind = RhsExpr::Kind::kTail;
      while (peek() != '}') {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected index");
        }
        std::size_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + static_cast<std::size_t>(s_[i_++] - '0');
        }
        if (v == 0) fail("tail indices are 1-based");
        node.indices.push_back(v);
        if (peek() == ',') ++i_;
      }
      expect('}');
      expect('(');
      node.children.push_back(parse_expr());
      expect(')');
      return node;
    }
    if (peek() == '(') {
      ++i_;
      RhsExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (peek() == 'w') {
      RhsExpr node;
      node.kind = RhsExpr::Kind::kName;
      node.name.push_back(s_[i_++]);
      while (peek() == '\'' || peek() == 'h') node.name.push_back(s_[i_++]);
      return node;
    }
    std::size_t j = i_;
    while (j < s_.size() && (is_letter(s_[j]) || s_[j] == 'e')) ++j;
    if (j == i_) fail("expected a word, name, red(...) or tail{...}(...)");
    RhsExpr node;
    node.kind = RhsExpr::Kind::kWord;
    node.word = Word::parse(s_.substr(i_, j - i_));
    i_ = j;
    return node;
  }

  std::string original_;
  std::string s_;
  std::size_t i_ = 0;
};

void render(const RhsExpr& e, std::ostringstream& out, bool top);

void render_term(const RhsExpr& e, std::ostringstream& out, bool first) {
  if (e.kind == RhsExpr::Kind::kScale) {
    const Poly& c = e.scalar;
    bool negative = c.terms().size() == 1 && c.terms().front().second < 0;
    Poly magnitude = negative ? -c : c;
    if (!first) out << (negative ? " - " : " + ");
    if (first && negative) out << '-';
    if (!magnitude.is_one()) {
      if (magnitude.terms().size() > 1) {
        out << '(' << magnitude.to_string() << ").";
      } else {
        out << magnitude.to_string() << '.';
      }
    }
    const RhsExpr& child = e.children.front();
    bool wrap = child.kind == RhsExpr::Kind::kSum ||
                child.kind == RhsExpr::Kind::kScale;
    if (wrap) out << '(';
    render(child, out, false);
    if (wrap) out << ')';
    return;
  }
  if (!first) out << " + ";
  render(e, out, false);
}

void render(const RhsExpr& e, std::ostringstream& out, bool top) {
  (void)top;
  switch (e.kind) {
    case RhsExpr::Kind::kWord:
      out << e.word.to_string();
      break;
    case RhsExpr::Kind::kName:
      out << e.name;
      break;
    case RhsExpr::Kind::kScale:
      render_term(e, out, true);
      break;
    case RhsExpr::Kind::kSum:
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        render_term(e.children[k], out, k == 0);
      }
      break;
    case RhsExpr::Kind::kConcat:
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k) out << '*';
        const RhsExpr& c = e.children[k];
        bool wrap =
            c.kind == RhsExpr::Kind::kSum || c.kind == RhsExpr::Kind::kScale;
        if (wrap) out << '(';
        render(c, out, false);
        if (wrap) out << ')';
      }
      break;
    case RhsExpr::Kind::kTail:
      out << "tail{";
      for (std::size_t k = 0; k < e.indices.size(); ++k) {
        if (k) out << ',';
        out << e.indices[k];
      }
      out << "}(";
      render(e.children.front(), out, true);
      out << ')';
      break;
    case RhsExpr::Kind::kRed:
      out << "red(";
      render(e.children.front(), out, true);
      out << ')';
      break;
  }
}

std::size_t parse_position(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != '@') {
    throw Error(ErrorKind::kParse, "expected @position, got '" + tok + "'");
  }
  return static_cast<std::size_t>(std::stoul(tok.substr(1)));
}

Direction parse_direction(const std::string& tok) {
  if (tok == "fwd") return Direction::kForward;
  if (tok == "bwd") return Direction::kBackward;
  throw Error(ErrorKind::kParse, "expected fwd or bwd, got '" + tok + "'");
}

char parse_generator(const std::string& tok) {
  if (tok == "1" || tok == "2") return tok[0];
  throw Error(ErrorKind::kParse,
              "expected generator 1 or 2, got '" + tok + "'");
}

void check_group(const GroupSpec& g) {
  if (g.name.empty()) fixture_error("group fixture lacks a name");
  for (int k = 1; k <= 2; ++k) {
    const auto& gen = g.generator(k);
    if (gen.order < 2 ||
        gen.coefficients.size() != static_cast<std::size_t>(gen.order - 1)) {
      fixture_error("group " + g.name + ": generator " + std::to_string(k) +
                    " needs order >= 2 and order-1 coefficients");
    }
  }
  if (g.artin_m < 2) fixture_error("group " + g.name + ": bad artin parameter");
  const auto m = static_cast<std::size_t>(g.artin_m);
  if (g.braid_upper != alternating(kTwo, m) ||
      g.braid_lower != alternating(kOne, m)) {
    fixture_error("group " + g.name +
                  ": braid relator must be alt(2,1;m) -> alt(1,2;m)");
  }
  if (g.group_order == 0) fixture_error("group " + g.name + ": missing size");
}

}  // namespace

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kBraid:
      return "braid";
    case MoveKind::kOrder:
      return "order";
    case MoveKind::kSquare:
      return "square";
    case MoveKind::kInv:
      return "inv";
    case MoveKind::kInsert:
      return "insert";
    case MoveKind::kCancel:
      return "cancel";
  }
  return "?";
}

RhsExpr RhsExpr::parse(std::string_view text) {
  return ExprParser(text).parse_all();
}

RhsExpr RhsExpr::literal(const Word& w) {
  RhsExpr e;
  e.kind = Kind::kWord;
  e.word = w;
  return e;
}

std::string RhsExpr::to_string() const {
  std::ostringstream out;
  render(*this, out, true);
  return out.str();
}

Move Move::parse(std::string_view text) {
  auto toks = split_ws(text);
  auto need = [&](std::size_t n) {
    if (toks.size() != n) {
      throw Error(ErrorKind::kParse,
                  "malformed trace move '" + std::string(text) + "'");
    }
  };
  if (toks.empty()) throw Error(ErrorKind::kParse, "empty trace move");
  Move m;
  const std::string& op = toks[0];
  if (op == "braid") {
    need(6);
    if (toks[4] != "->") {
      throw Error(ErrorKind::kParse, "braid move needs FROM -> TO");
    }
    m.kind = MoveKind::kBraid;
    m.from = Word::parse(toks[3]);
    m.to = Word::parse(toks[5]);
  } else if (op == "order" || op == "square" || op == "inv") {
    need(5);
    m.kind = op == "order"
                 ? MoveKind::kOrder
                 : (op == "square" ? MoveKind::kSquare : MoveKind::kInv);
    m.letter = parse_generator(toks[3]);
    m.direction = parse_direction(toks[4]);
  } else if (op == "insert") {
    need(4);
    m.kind = MoveKind::kInsert;
    if (toks[3].size() != 1 || !is_letter(toks[3][0])) {
      throw Error(ErrorKind::kParse, "insert needs a letter, got " + toks[3]);
    }
    m.letter = toks[3][0];
  } else if (op == "cancel") {
    need(3);
    m.kind = MoveKind::kCancel;
  } else {
    throw Error(ErrorKind::kParse, "unknown trace move '" + op + "'");
  }
  m.term = Word::parse(toks[1]);
  m.position = parse_position(toks[2]);
  return m;
}

std::string Move::to_string() const {
  std::ostringstream out;
  out << move_kind_name(kind) << ' ' << term.to_string() << " @" << position;
  switch (kind) {
    case MoveKind::kBraid:
      out << ' ' << from.to_string() << " -> " << to.to_string();
      break;
    case MoveKind::kOrder:
    case MoveKind::kSquare:
    case MoveKind::kInv:
      out << ' ' << letter << ' '
          << (direction == Direction::kForward ? "fwd" : "bwd");
      break;
    case MoveKind::kInsert:
      out << ' ' << letter;
      break;
    case MoveKind::kCancel:
      break;
  }
  return out.str();
}

std::filesystem::path default_fixtures_dir() {
  if (const char* env = std::getenv("HECKE_FIXTURES")) return env;
  return HECKE_FIXTURES_DIR;
}

GroupSpec parse_group(std::string_view text) {
  GroupSpec g;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto toks = split_ws(line);
    const std::string& key = toks[0];
    try {
      if (key == "name" && toks.size() == 2) {
        g.name = toks[1];
      } else if (key == "generator" && toks.size() >= 5 && toks[2] == "order" &&
                 toks[4] == "coefficients") {
        int k = std::stoi(toks[1]);
        if (k != 1 && k != 2) fixture_error("generator index must be 1 or 2");
        GeneratorSpec spec;
        spec.order = std::stoi(toks[3]);
        for (std::size_t t = 5; t < toks.size(); ++t) {
          spec.coefficients.push_back(Poly::parse(toks[t]));
        }
        g.generators[static_cast<std::size_t>(k - 1)] = std::move(spec);
      } else if (key == "braid" && toks.size() == 3) {
        g.braid_upper = Word::parse(toks[1]);
        g.braid_lower = Word::parse(toks[2]);
      } else if (key == "artin" && toks.size() == 2) {
        g.artin_m = std::stoi(toks[1]);
      } else if (key == "size" && toks.size() == 2) {
        g.group_order = std::stoul(toks[1]);
      } else {
        fixture_error("unrecognized group fixture line '" + line + "'");
      }
    } catch (const std::logic_error&) {
      fixture_error("bad number in group fixture line '" + line + "'");
    }
  }
  check_group(g);
  return g;
}

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    out.push_back(Word::parse(line));
  }
  return out;
}

std::vector<FixtureRule> parse_rules(std::string_view text) {
  std::vector<FixtureRule> rules;
  std::istringstream in{std::string(text)};
  std::optional<FixtureRule> current;
  bool have_rhs = false;
  bool in_trace = false;
  std::optional<Move> pending_move;
  std::size_t line_no = 0;

  auto where = [&] { return " (rules line " + std::to_string(line_no) + ")"; };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    try {
      if (!current) {
        auto toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != "rule") {
          fixture_error("expected 'rule <id>'" + where());
        }
        current.emplace();
        current->id = std::stoi(toks[1]);
        have_rhs = false;
        in_trace = false;
        continue;
      }
      if (line == "end") {
        if (current->lhs.empty() || !have_rhs) {
          fixture_error("rule " + std::to_string(current->id) +
                        " lacks lhs or rhs" + where());
        }
        if (pending_move) {
          fixture_error("trace move without resulting expression" + where());
        }
        rules.push_back(std::move(*current));
        current.reset();
        continue;
      }
      if (in_trace) {
        if (line[0] == '=') {
          LinComb value = LinComb::parse(line.substr(1));
          if (!current->trace) {
            current->trace.emplace();
            current->trace->start = std::move(value);
          } else if (pending_move) {
            current->trace->steps.push_back({*pending_move, std::move(value)});
            pending_move.reset();
          } else {
            fixture_error("expression without a preceding move" + where());
          }
        } else {
          if (!current->trace) {
            fixture_error("trace must open with '= <lhs>'" + where());
          }
          if (pending_move) {
            fixture_error("two moves without an expression" + where());
          }
          pending_move = Move::parse(line);
        }
        continue;
      }
      if (line.rfind("lhs ", 0) == 0) {
        current->lhs = Word::parse(trim(line.substr(4)));
      } else if (line.rfind("let ", 0) == 0) {
        auto eq = line.find('=');
        if (eq == std::string::npos) fixture_error("let needs '='" + where());
        std::string name = trim(line.substr(4, eq - 4));
        current->bindings[name] = Word::parse(trim(line.substr(eq + 1)));
      } else if (line.rfind("rhs ", 0) == 0) {
        current->rhs = RhsExpr::parse(line.substr(4));
        have_rhs = true;
      } else if (line == "trace") {
        in_trace = true;
      } else {
        fixture_error("unrecognized rule line '" + line + "'" + where());
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kFixture) throw;
      fixture_error(std::string(e.what()) + where());
    } catch (const std::logic_error&) {
      fixture_error("bad number" + where());
    }
  }
  if (current) fixture_error("unterminated rule record at end of file");
  return rules;
}

std::string serialize_rules(const std::vector<FixtureRule>& rules) {
  std::ostringstream out;
  for (const auto& r : rules) {
    out << "rule " << r.id << "\nlhs " << r.lhs.to_string() << '\n';
    for (const auto& [name, w] : r.bindings) {
      out << "let " << name << " = " << w.to_string() << '\n';
    }
    out << "rhs " << r.rhs.to_string() << '\n';
    if (r.trace) {
      out << "trace\n= " << r.trace->start.to_string() << '\n';
      for (const auto& step : r.trace->steps) {
        out << step.move.to_string() << "\n= " << step.expression.to_string()
            << '\n';
      }
    }
    out << "end\n\n";
  }
  return out.str();
}

namespace {

std::filesystem::path group_dir(std::string_view name,
                                const std::filesystem::path& dir) {
  std::filesystem::path p = dir / std::string(name);
  if (name.empty() || name.find('/') != std::string_view::npos ||
      !std::filesystem::is_directory(p)) {
    throw Error(ErrorKind::kUnknownGroup,
                "unknown group '" + std::string(name) + "' (no fixtures in " +
                    dir.string() + ")");
  }
  return p;
}

}  // namespace

GroupSpec load_group(std::string_view name, const std::filesystem::path& dir) {
  GroupSpec g = parse_group(read_file(group_dir(name, dir) / "group.txt"));
  if (g.name != name) {
    fixture_error("group fixture name '" + g.name + "' does not match '" +
                  std::string(name) + "'");
  }
  return g;
}

std::vector<Word> load_dominant_terms(std::string_view name,
                                      const std::filesystem::path& dir) {
  auto words =
      parse_word_list(read_file(group_dir(name, dir) / "dominant_terms.txt"));
  std::set<Word> seen(words.begin(), words.end());
  if (seen.size() != words.size()) fixture_error("duplicate dominant term");
  for (const auto& w : words) {
    if (w.empty() || !w.is_positive()) {
      fixture_error("dominant terms must be nonempty positive words");
    }
  }
  return words;
}

std::vector<FixtureRule> load_rules(std::string_view name,
                                    const std::filesystem::path& dir) {
  return parse_rules(read_file(group_dir(name, dir) / "rules.txt"));
}

std::vector<Word> load_basis_fixture(std::string_view name,
                                     const std::filesystem::path& dir) {
  std::filesystem::path file = group_dir(name, dir) / "basis.txt";
  if (!std::filesystem::exists(file)) {
    fixture_error("no tabulated basis for group '" + std::string(name) + "'");
  }
  GroupSpec g = load_group(name, dir);
  auto words = parse_word_list(read_file(file));
  std::set<Word> seen(words.begin(), words.end());
  if (seen.size() != words.size()) fixture_error("duplicate basis word");
  if (words.size() != g.group_order) {
    fixture_error("basis fixture has " + std::to_string(words.size()) +
                  " words, expected " + std::to_string(g.group_order));
  }
  return words;
}

}  // namespace hecke
