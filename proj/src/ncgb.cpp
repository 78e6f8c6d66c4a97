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

#include "hecke/ncgb.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "hecke/basis.hpp"
#include "hecke/error.hpp"
#include "hecke/lincomb.hpp"
#include "hecke/pattern.hpp"

namespace hecke {

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (!is_prime_u64(prime) || prime >= (std::uint64_t{1} << 63)) {
    throw Error(ErrorKind::kInvalidArgument,
                "field modulus must be a prime below 2^63, got " +
                    std::to_string(prime));
  }
}

Specialization Specialization::parse(std::string_view text) {
  Specialization s;
  std::istringstream in{std::string(text)};
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    const std::string key = eq == std::string::npos ? item : item.substr(0, eq);
    if (eq == std::string::npos || eq + 1 == item.size() ||
        (key != "a" && key != "b" && key != "q")) {
      throw Error(ErrorKind::kParse, "bad specialization item '" + item +
                                         "' (expected a=N, b=N or q=N)");
    }
    Integer value;
    try {
      value = Integer(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "bad integer in '" + item + "'");
    }
    (key == "a" ? s.a : key == "b" ? s.b : s.q) = value;
  }
  return s;
}

std::string Specialization::to_string() const {
  return "a=" + a.str() + ",b=" + b.str() + ",q=" + q.str();
}

template <class F>
std::string NCPoly<F>::to_string(const F& field) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += " + ";
    out += field.to_string(c) + "." + (w.empty() ? std::string("e") : w);
  }
  return out;
}

template struct NCPoly<PrimeField>;
template struct NCPoly<RationalField>;

namespace {

template <class F>
void add_term(const F& field, NCPoly<F>& p, std::string word,
              const typename F::Elem& c) {
  if (field.is_zero(c)) return;
  auto [it, inserted] = p.terms.try_emplace(std::move(word), c);
  if (inserted) return;
  it->second = field.add(it->second, c);
  if (field.is_zero(it->second)) p.terms.erase(it);
}

template <class F>
NCPoly<F> make_monic(const F& field, NCPoly<F> p) {
  const auto inv = field.inv(p.leading_coefficient());
  for (auto& [w, c] : p.terms) c = field.mul(c, inv);
  return p;
}

// Monic divisors with an automaton over their leading words.
//
// Each reducible word has one fixed rewriting step (leftmost occurrence,
// lowest divisor index), so its normal form is well defined and reduction is
// linear: the normal form of p is the sum of c * nf(w) over its terms. Normal
// forms of words are memoized for the lifetime of the reducer, which gives
// the same result as repeatedly rewriting the largest reducible term.
template <class F>
class Reducer {
 public:
  using Elem = typename F::Elem;

  Reducer(const F& field, const std::vector<NCPoly<F>>& divisors)
      : field_(field), divisors_(divisors), matcher_(leading_words()) {}

  NCPoly<F> reduce(const NCPoly<F>& p) const {
    NCPoly<F> out;
    for (const auto& [w, c] : p.terms) {
      for (const auto& [v, d] : normal_form(w)) {
        add_term(field_, out, v, field_.mul(c, d));
      }
    }
    return out;
  }

 private:
  using Vec = std::vector<std::pair<std::string, Elem>>;

  // Tail terms of the divisor applied at the leftmost occurrence, with
  // coefficients negated, or nullopt for an irreducible word.
  std::optional<Vec> step(const std::string& w) const {
    const auto m = matcher_.find_earliest(w);
    if (!m) return std::nullopt;
    const NCPoly<F>& g = divisors_[m->index];
    const std::string left = w.substr(0, m->position);
    const std::string right = w.substr(m->position + g.leading_word().size());
    Vec out;
    for (auto it = std::next(g.terms.begin()); it != g.terms.end(); ++it) {
      out.emplace_back(left + it->first + right,
                       field_.sub(field_.zero(), it->second));
    }
    return out;
  }

  const Vec& normal_form(const std::string& word) const {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    // Post-order traversal with an explicit stack; chains can be long.
    std::vector<std::pair<std::string, std::optional<Vec>>> stack;
    stack.emplace_back(word, std::nullopt);
    while (!stack.empty()) {
      auto& [w, children] = stack.back();
      if (memo_.count(w)) {
        stack.pop_back();
        continue;
      }
      if (!children) {
        children = step(w);
        if (!children) {
          memo_.emplace(w, Vec{{w, field_.one()}});
          stack.pop_back();
          continue;
        }
      }
      std::vector<std::string> missing;
      for (const auto& [v, c] : *children) {
        if (!memo_.count(v)) missing.push_back(v);
      }
      if (!missing.empty()) {
        for (auto& v : missing) stack.emplace_back(std::move(v), std::nullopt);
        continue;
      }
      std::unordered_map<std::string, Elem> acc;
      for (const auto& [v, c] : *children) {
        for (const auto& [u, d] : memo_.at(v)) {
          auto [it, fresh] = acc.try_emplace(u, field_.zero());
          it->second = field_.add(it->second, field_.mul(c, d));
        }
      }
      Vec nf;
      for (auto& [u, d] : acc) {
        if (!field_.is_zero(d)) nf.emplace_back(u, std::move(d));
      }
      std::string key = std::move(w);
      stack.pop_back();
      memo_.emplace(std::move(key), std::move(nf));
    }
    return memo_.at(word);
  }

  std::vector<Word> leading_words() const {
    std::vector<Word> out;
    for (const auto& g : divisors_) {
      if (g.is_zero()) {
        throw Error(ErrorKind::kInvalidArgument, "zero divisor polynomial");
      }
      out.push_back(Word::unchecked(g.leading_word()));
    }
    return out;
  }

  const F& field_;
  const std::vector<NCPoly<F>>& divisors_;
  PatternMatcher matcher_;
  mutable std::unordered_map<std::string, Vec> memo_;
};

// Reduction by right multiplication: nf(w s) = nf(nf(w) s), with the
// products nf(b s) of an irreducible word b and a letter s memoized. Any
// leading-word occurrence in b s is a suffix, so the memo stays small: its
// keys are irreducible words. Used inside the completion, where only the
// final reduced basis matters and that is independent of the strategy.
template <class F>
class RightReducer {
 public:
  using Elem = typename F::Elem;

  RightReducer(const F& field, const std::vector<NCPoly<F>>& divisors)
      : field_(field), divisors_(divisors), matcher_(leading_words()) {}

  NCPoly<F> reduce(const NCPoly<F>& p) const {
    Acc acc;
    for (const auto& [w, c] : p.terms) fold(acc, std::string(), w, c);
    NCPoly<F> out;
    for (auto& [w, c] : acc) {
      if (!field_.is_zero(c)) out.terms.emplace(w, std::move(c));
    }
    return out;
  }

 private:
  using Vec = std::vector<std::pair<std::string, Elem>>;
  using Acc = std::unordered_map<std::string, Elem>;

  // acc += c * nf(prefix * letters) for an irreducible prefix.
  void fold(Acc& acc, const std::string& prefix, std::string_view letters,
            const Elem& c) const {
    Acc cur{{prefix, c}};
    for (char s : letters) {
      Acc next;
      for (const auto& [b, d] : cur) {
        if (field_.is_zero(d)) continue;
        for (const auto& [u, e] : times(b, s)) {
          auto [it, fresh] = next.try_emplace(u, field_.zero());
          it->second = field_.add(it->second, field_.mul(d, e));
        }
      }
      cur = std::move(next);
    }
    for (const auto& [u, d] : cur) {
      auto [it, fresh] = acc.try_emplace(u, field_.zero());
      it->second = field_.add(it->second, d);
    }
  }

  const Vec& times(const std::string& b, char s) const {
    auto& memo = memo_[s == kTwo ? 1 : 0];
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    const std::string w = b + s;
    Vec out;
    if (const auto m = matcher_.find_earliest(w)) {
      const NCPoly<F>& g = divisors_[m->index];
      const std::string left = w.substr(0, m->position);
      Acc acc;
      for (auto it = std::next(g.terms.begin()); it != g.terms.end(); ++it) {
        fold(acc, left, it->first, field_.sub(field_.zero(), it->second));
      }
      for (auto& [u, d] : acc) {
        if (!field_.is_zero(d)) out.emplace_back(u, std::move(d));
      }
    } else {
      out.emplace_back(w, field_.one());
    }
    return memo.emplace(b, std::move(out)).first->second;
  }

  std::vector<Word> leading_words() const {
    std::vector<Word> out;
    for (const auto& g : divisors_)
      out.push_back(Word::unchecked(g.leading_word()));
    return out;
  }

  const F& field_;
  const std::vector<NCPoly<F>>& divisors_;
  PatternMatcher matcher_;
  mutable std::array<std::unordered_map<std::string, Vec>, 2> memo_;
};

struct Overlap {
  std::string word;
  std::size_t i = 0;  // element whose leading word is the prefix
  std::size_t j = 0;
  std::size_t k = 0;  // length of the shared part

  friend bool operator<(const Overlap& x, const Overlap& y) {
    if (auto c = deglex_cmp(x.word, y.word); c != 0) return c < 0;
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  }
};

template <class F>
class Completion {
 public:
  Completion(const F& field, const GbOptions& options)
      : field_(field), options_(options) {}

  void add_generator(const NCPoly<F>& g) {
    if (g.is_zero()) return;
    generators_.push_back(g);
    insert(reduce(g));
  }

  void run() {
    bool changed = true;
    while (!queue_.empty()) {
      if (changed && options_.module_certificate && certified()) {
        stats_.certified = true;
        queue_.clear();
        break;
      }
      changed = false;
      const Overlap o = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!alive_[o.i] || !alive_[o.j]) continue;
      ++stats_.overlaps;
      const NCPoly<F>& g = elems_[o.i];
      const NCPoly<F>& h = elems_[o.j];
      const std::string& u = g.leading_word();
      const std::string& v = h.leading_word();
      const std::string right = v.substr(o.k);
      const std::string left = u.substr(0, u.size() - o.k);
      NCPoly<F> s;
      for (const auto& [w, c] : g.terms) add_term(field_, s, w + right, c);
      for (const auto& [w, c] : h.terms) {
        add_term(field_, s, left + w, field_.sub(field_.zero(), c));
      }
      NCPoly<F> r = reduce(std::move(s));
      if (r.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        insert(std::move(r));
        changed = true;
      }
    }
  }

  GbResult<F> result() const {
    GbResult<F> out;
    for (std::size_t id : active_) out.basis.push_back(elems_[id]);
    std::sort(out.basis.begin(), out.basis.end(),
              [](const auto& x, const auto& y) {
                return deglex_cmp(x.leading_word(), y.leading_word()) < 0;
              });
    for (const auto& g : out.basis) {
      out.leading_terms.push_back(Word::unchecked(g.leading_word()));
    }
    out.stats = stats_;
    return out;
  }

 private:
  NCPoly<F> reduce(NCPoly<F> p) {
    if (dirty_) {
      divisors_.clear();
      for (std::size_t id : active_) divisors_.push_back(elems_[id]);
      reducer_.emplace(field_, divisors_);
      dirty_ = false;
    }
    return reducer_->reduce(std::move(p));
  }

  // Adds a nonzero polynomial already reduced against the active set, then
  // restores a reduced basis: elements whose leading word contains the new
  // one are re-reduced and re-inserted, the rest are tail-reduced.
  void insert(NCPoly<F> first) {
    std::vector<NCPoly<F>> pending{std::move(first)};
    while (!pending.empty()) {
      NCPoly<F> h = reduce(std::move(pending.back()));
      pending.pop_back();
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      h = make_monic(field_, std::move(h));
      const std::string lt = h.leading_word();
      stats_.max_degree = std::max(stats_.max_degree, lt.size());
      if (lt.size() > options_.degree_cap) {
        throw Error(ErrorKind::kDegreeCap,
                    "basis element with leading word of length " +
                        std::to_string(lt.size()) + " exceeds the cap " +
                        std::to_string(options_.degree_cap) + " (" + lt + ")");
      }
      const std::size_t id = elems_.size();
      elems_.push_back(std::move(h));
      alive_.push_back(true);
      ++stats_.additions;

      std::vector<std::size_t> keep;
      for (std::size_t g : active_) {
        if (elems_[g].leading_word().find(lt) != std::string::npos) {
          alive_[g] = false;
          pending.push_back(elems_[g]);
        } else {
          keep.push_back(g);
        }
      }
      keep.push_back(id);
      active_ = std::move(keep);
      dirty_ = true;

      for (std::size_t g : active_) {
        if (g == id) continue;
        NCPoly<F>& p = elems_[g];
        NCPoly<F> tail = p;
        tail.terms.erase(tail.terms.begin());
        NCPoly<F> reduced = reduce(std::move(tail));
        reduced.terms.emplace(p.leading_word(), p.leading_coefficient());
        p = std::move(reduced);
      }
      dirty_ = true;
      for (std::size_t g : active_) {
        add_overlaps(id, g);
        if (g != id) add_overlaps(g, id);
      }
    }
  }

  // With B the standard words of the active set, b -> nf(b s) defines
  // operators on span(B). If every generator f satisfies nf(b f) = 0 for all
  // b in B, span(B) is a module over the quotient algebra A and x -> nf(x)
  // maps A onto it, so dim A >= |B|. The active set lies in the ideal, so B
  // spans A, B is a basis of A and the active set is a Groebner basis.
  bool certified() {
    std::vector<Word> lts;
    for (std::size_t id : active_) {
      lts.push_back(Word::unchecked(elems_[id].leading_word()));
    }
    if (!avoidance_language_finite(lts)) return false;
    const BasisSet basis = enumerate_basis(lts);
    ++stats_.certificate_checks;
    for (const NCPoly<F>& f : generators_) {
      for (const Word& b : basis.words) {
        NCPoly<F> bf;
        for (const auto& [w, c] : f.terms) {
          add_term(field_, bf, b.letters() + w, c);
        }
        if (!reduce(std::move(bf)).is_zero()) return false;
      }
    }
    return true;
  }

  void add_overlaps(std::size_t i, std::size_t j) {
    const std::string& u = elems_[i].leading_word();
    const std::string& v = elems_[j].leading_word();
    const std::size_t limit = std::min(u.size(), v.size());
    for (std::size_t k = 1; k < limit; ++k) {
      if (u.compare(u.size() - k, k, v, 0, k) == 0) {
        queue_.insert({u + v.substr(k), i, j, k});
      }
    }
  }

  const F& field_;
  GbOptions options_;
  std::vector<NCPoly<F>> generators_;
  std::vector<NCPoly<F>> elems_;
  std::vector<bool> alive_;
  std::vector<std::size_t> active_;
  std::vector<NCPoly<F>> divisors_;
  std::optional<RightReducer<F>> reducer_;
  bool dirty_ = true;
  std::set<Overlap> queue_;
  GbStats stats_;
};

Integer evaluate(const Poly& p, const Specialization& x) {
  Integer acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer v = c;
    for (unsigned i = 0; i < m.a; ++i) v *= x.a;
    for (unsigned i = 0; i < m.b; ++i) v *= x.b;
    for (unsigned i = 0; i < m.q; ++i) v *= x.q;
    acc += v;
  }
  return acc;
}

template <class F>
NCPoly<F> specialize(const F& field, const LinComb& x,
                     const Specialization& point) {
  NCPoly<F> out;
  for (const auto& [w, c] : x.terms()) {
    add_term(field, out, w.letters(), field.from_integer(evaluate(c, point)));
  }
  return out;
}

}  // namespace

template <class F>
NCPoly<F> nc_reduce(const F& field, NCPoly<F> p,
                    const std::vector<NCPoly<F>>& divisors) {
  return Reducer<F>(field, divisors).reduce(std::move(p));
}

template <class F>
GbResult<F> buchberger(const F& field, const std::vector<NCPoly<F>>& generators,
                       const GbOptions& options) {
  Completion<F> c(field, options);
  for (const auto& g : generators) c.add_generator(g);
  c.run();
  return c.result();
}

template <class F>
std::vector<NCPoly<F>> defining_relations(const F& field,
                                          const GroupSpec& group,
                                          const Specialization& point) {
  std::vector<NCPoly<F>> out;
  for (int g = 1; g <= 2; ++g) {
    out.push_back(specialize(field, group.order_relation(g), point));
  }
  out.push_back(specialize(
      field, LinComb{group.braid_upper} - LinComb{group.braid_lower}, point));
  return out;
}

template NCPoly<PrimeField> nc_reduce(const PrimeField&, NCPoly<PrimeField>,
                                      const std::vector<NCPoly<PrimeField>>&);
template NCPoly<RationalField> nc_reduce(
    const RationalField&, NCPoly<RationalField>,
    const std::vector<NCPoly<RationalField>>&);
template GbResult<PrimeField> buchberger(const PrimeField&,
                                         const std::vector<NCPoly<PrimeField>>&,
                                         const GbOptions&);
template GbResult<RationalField> buchberger(
    const RationalField&, const std::vector<NCPoly<RationalField>>&,
    const GbOptions&);
template std::vector<NCPoly<PrimeField>> defining_relations(
    const PrimeField&, const GroupSpec&, const Specialization&);
template std::vector<NCPoly<RationalField>> defining_relations(
    const RationalField&, const GroupSpec&, const Specialization&);

GbSummary run_ncgb(const GroupSpec& group, const Specialization& point,
                   std::uint64_t prime, const GbOptions& options) {
  const PrimeField field(prime);
  const auto gb =
      buchberger(field, defining_relations(field, group, point), options);
  GbSummary s;
  s.point = point;
  s.prime = prime;
  s.leading_terms = gb.leading_terms;
  s.stats = gb.stats;
  s.finite = avoidance_language_finite(gb.leading_terms);
  if (s.finite) s.standard_words = enumerate_basis(gb.leading_terms).size();
  return s;
}

}  // namespace hecke
