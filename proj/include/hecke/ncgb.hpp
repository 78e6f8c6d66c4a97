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

#ifndef HECKE_NCGB_HPP_
#define HECKE_NCGB_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/modular.hpp"
#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

// Z/p for a prime p < 2^63.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }
  Elem from_integer(const Integer& x) const { return reduce_mod(x, p_); }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem x, Elem y) const { return add_mod(x, y, p_); }
  Elem sub(Elem x, Elem y) const { return sub_mod(x, y, p_); }
  Elem mul(Elem x, Elem y) const { return mul_mod(x, y, p_); }
  Elem inv(Elem x) const { return inv_mod(x, p_); }
  std::string to_string(Elem x) const { return std::to_string(x); }

 private:
  std::uint64_t p_;
};

// Exact rationals; slow, for small inputs and cross-checks.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  Elem from_integer(const Integer& x) const { return Elem(x); }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const { return 1 / x; }
  std::string to_string(const Elem& x) const { return x.str(); }
};

// Integer values substituted for a, b, q.
struct Specialization {
  Integer a = 0;
  Integer b = 0;
  Integer q = 0;

  // "a=3,b=-1,q=7"; unspecified parameters are 0.
  static Specialization parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Specialization&,
                         const Specialization&) = default;
};

// Noncommutative polynomial over a field in the positive letters 1, 2.
// Terms iterate from the deglex-largest word down; no stored coefficient is
// zero.
template <class F>
struct NCPoly {
  using Elem = typename F::Elem;
  std::map<std::string, Elem, DeglexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  const std::string& leading_word() const { return terms.begin()->first; }
  const Elem& leading_coefficient() const { return terms.begin()->second; }
  std::string to_string(const F& field) const;
};

// Normal form of p modulo the monic divisors: repeatedly rewrites the
// largest reducible term at the leftmost occurrence of a leading word (lowest
// divisor index on ties) until no support word has a leading word as factor.
template <class F>
NCPoly<F> nc_reduce(const F& field, NCPoly<F> p,
                    const std::vector<NCPoly<F>>& divisors);

struct GbOptions {
  // Largest admissible leading-word length of a basis element. Overlaps of
  // any length are resolved; a new element past the cap raises kDegreeCap.
  std::size_t degree_cap = 24;
  // Stop early once the standard words are finite and carry a module
  // structure satisfying every generator (see buchberger()). When false,
  // every overlap is resolved.
  bool module_certificate = true;
};

struct GbStats {
  std::size_t overlaps = 0;  // S-polynomials formed
  std::size_t zero_reductions = 0;
  std::size_t additions = 0;   // elements ever added
  std::size_t max_degree = 0;  // longest leading word ever seen
  std::size_t certificate_checks = 0;
  bool certified = false;  // finished by the module certificate
};

template <class F>
struct GbResult {
  std::vector<NCPoly<F>> basis;  // reduced, monic, sorted by leading word
  std::vector<Word> leading_terms;
  GbStats stats;
};

// Overlap completion in deglex order of overlap words with immediate
// inter-reduction. Inputs need not be monic.
//
// Early exit: whenever the basis changes and its standard words B form a
// finite set, the right action b -> nf(b s) on span(B) is tested against
// every generator. Success shows span(B) is a module of the quotient
// algebra of dimension |B|, so B is linearly independent there and the
// current basis is already a Groebner basis; the pending overlaps would all
// reduce to zero.
template <class F>
GbResult<F> buchberger(const F& field, const std::vector<NCPoly<F>>& generators,
                       const GbOptions& options = {});

// Order relations and the braid relator of the group at the given point.
template <class F>
std::vector<NCPoly<F>> defining_relations(const F& field,
                                          const GroupSpec& group,
                                          const Specialization& point);

extern template struct NCPoly<PrimeField>;
extern template struct NCPoly<RationalField>;

// Specialized Groebner run summarized for reports.
struct GbSummary {
  Specialization point;
  std::uint64_t prime = 0;
  std::vector<Word> leading_terms;
  bool finite = false;  // the standard words form a finite set
  std::size_t standard_words = 0;
  GbStats stats;
};

GbSummary run_ncgb(const GroupSpec& group, const Specialization& point,
                   std::uint64_t prime = kDefaultPrime,
                   const GbOptions& options = {});

}  // namespace hecke

#endif  // HECKE_NCGB_HPP_
