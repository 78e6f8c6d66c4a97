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

#include "hecke/multtable.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "hecke/error.hpp"
#include "hecke/modular.hpp"

namespace hecke {

namespace {

using ExactVector = std::map<std::size_t, Poly>;

ExactVector apply_exact(const std::vector<SparseColumn>& rho,
                        const ExactVector& v) {
  ExactVector out;
  for (const auto& [k, x] : v) {
    for (const auto& [i, m] : rho[k]) {
      Poly& slot = out[i];
      slot += m * x;
      if (slot.is_zero()) out.erase(i);
    }
  }
  return out;
}

using ModColumns =
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>;

ModColumns specialize(const std::vector<SparseColumn>& rho,
                      const ModPoint& point, std::uint64_t p) {
  ModColumns out(rho.size());
  for (std::size_t k = 0; k < rho.size(); ++k) {
    for (const auto& [i, m] : rho[k]) {
      std::uint64_t x = m.eval_mod(point, p);
      if (x != 0) out[k].emplace_back(i, x);
    }
  }
  return out;
}

void apply_mod(const ModColumns& rho, const std::vector<std::uint64_t>& v,
               std::vector<std::uint64_t>& out, std::uint64_t p) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (const auto& [i, m] : rho[k]) {
      out[i] = add_mod(out[i], mul_mod(m, v[k], p), p);
    }
  }
}

std::string entry_witness(std::size_t column, std::size_t row) {
  return "column " + std::to_string(column) + ", row " + std::to_string(row);
}

IdentityVerdict check_order_exact(const MultTable& table,
                                  const GroupSpec& group, int g) {
  const GeneratorSpec& spec = group.generator(g);
  const auto& rho = table.columns[static_cast<std::size_t>(g - 1)];
  IdentityVerdict verdict{
      "order(" + std::to_string(g) + ")", "exact", {}, true, ""};
  for (std::size_t j = 0; j < table.rank && verdict.passed; ++j) {
    std::vector<ExactVector> powers = {ExactVector{{j, Poly(1)}}};
    for (int k = 0; k < spec.order; ++k) {
      powers.push_back(apply_exact(rho, powers.back()));
    }
    ExactVector residual = powers.back();
    auto subtract = [&](const ExactVector& v, const Poly& c) {
      for (const auto& [i, x] : v) {
        Poly& slot = residual[i];
        slot -= c * x;
        if (slot.is_zero()) residual.erase(i);
      }
    };
    subtract(powers[0], Poly(1));
    for (int k = 1; k < spec.order; ++k) {
      subtract(powers[static_cast<std::size_t>(k)],
               spec.coefficients[static_cast<std::size_t>(spec.order - 1 - k)]);
    }
    if (!residual.empty()) {
      verdict.passed = false;
      verdict.witness = entry_witness(j, residual.begin()->first) + ": " +
                        residual.begin()->second.to_string();
    }
  }
  return verdict;
}

IdentityVerdict check_order_mod(const std::array<ModColumns, 2>& rho,
                                const GroupSpec& group, int g,
                                const ModPoint& point, std::uint64_t p,
                                std::size_t rank) {
  const GeneratorSpec& spec = group.generator(g);
  IdentityVerdict verdict{"order(" + std::to_string(g) + ")",
                          "mod " + std::to_string(p), point, true, ""};
  std::vector<std::uint64_t> coeff(static_cast<std::size_t>(spec.order), 0);
  for (int k = 1; k < spec.order; ++k) {
    coeff[static_cast<std::size_t>(k)] =
        spec.coefficients[static_cast<std::size_t>(spec.order - 1 - k)]
            .eval_mod(point, p);
  }
  coeff[0] = 1;
  std::vector<std::vector<std::uint64_t>> powers(
      static_cast<std::size_t>(spec.order) + 1,
      std::vector<std::uint64_t>(rank));
  for (std::size_t j = 0; j < rank && verdict.passed; ++j) {
    std::fill(powers[0].begin(), powers[0].end(), 0);
    powers[0][j] = 1;
    for (std::size_t k = 0; k < static_cast<std::size_t>(spec.order); ++k) {
      apply_mod(rho[static_cast<std::size_t>(g - 1)], powers[k], powers[k + 1],
                p);
    }
    for (std::size_t i = 0; i < rank; ++i) {
      std::uint64_t r = powers.back()[i];
      for (std::size_t k = 0; k < coeff.size(); ++k) {
        r = sub_mod(r, mul_mod(coeff[k], powers[k][i], p), p);
      }
      if (r != 0) {
        verdict.passed = false;
        verdict.witness = entry_witness(j, i);
        break;
      }
    }
  }
  return verdict;
}

IdentityVerdict check_braid_mod(const std::array<ModColumns, 2>& rho,
                                const GroupSpec& group, const ModPoint& point,
                                std::uint64_t p, std::size_t rank) {
  IdentityVerdict verdict{"braid", "mod " + std::to_string(p), point, true, ""};
  std::vector<std::uint64_t> u(rank), v(rank), scratch(rank);
  auto run = [&](const Word& word, std::vector<std::uint64_t>& vec) {
    for (char letter : word.letters()) {
      apply_mod(rho[static_cast<std::size_t>(generator_of(letter) - 1)], vec,
                scratch, p);
      vec.swap(scratch);
    }
  };
  for (std::size_t j = 0; j < rank && verdict.passed; ++j) {
    std::fill(u.begin(), u.end(), 0);
    std::fill(v.begin(), v.end(), 0);
    u[j] = v[j] = 1;
    run(group.braid_upper, u);
    run(group.braid_lower, v);
    for (std::size_t i = 0; i < rank; ++i) {
      if (u[i] != v[i]) {
        verdict.passed = false;
        verdict.witness = entry_witness(j, i);
        break;
      }
    }
  }
  return verdict;
}

}  // namespace

MultTable build_table(const BasisSet& basis, const RuleList& rules,
                      const GroupSpec& group, const TableOptions& options) {
  MultTable table;
  table.rank = basis.size();
  for (auto& c : table.columns) c.resize(table.rank);

  const std::size_t jobs = 2 * table.rank;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_job = jobs;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t j = job / 2;
      const int g = static_cast<int>(job % 2) + 1;
      try {
        const Word product = basis.words[j] + Word::unchecked(std::string(
                                                  1, generator_letter(g)));
        LinComb reduced =
            reduce(LinComb(product), rules, group, options.reduce);
        SparseColumn column;
        column.reserve(reduced.size());
        for (const auto& [w, c] : reduced.terms()) {
          auto ord = basis.ordinal(w);
          if (!ord) {
            throw Error(
                ErrorKind::kVerification,
                "reduced word " + w.to_string() + " is not a basis word");
          }
          column.emplace_back(*ord, c);
        }
        std::sort(
            column.begin(), column.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
        table.columns[static_cast<std::size_t>(g - 1)][j] = std::move(column);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (job < failed_job) {
          failed_job = job;
          failure = std::current_exception();
        }
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) {
    const std::size_t j = failed_job / 2;
    const int g = static_cast<int>(failed_job % 2) + 1;
    const std::string pair = "(" + basis.words[j].to_string() + ", " +
                             std::string(1, generator_letter(g)) + ")";
    try {
      std::rethrow_exception(failure);
    } catch (const Error& e) {
      throw Error(e.kind(), "table entry " + pair + ": " + e.what());
    }
  }
  return table;
}

LinComb entry_as_lincomb(const MultTable& table, const BasisSet& basis,
                         std::size_t j, int generator) {
  LinComb out;
  for (const auto& [i, c] : table.entry(j, generator)) {
    out.add(basis.words[i], c);
  }
  return out;
}

std::string serialize_table(const MultTable& table, const BasisSet& basis) {
  std::ostringstream out;
  for (std::size_t j = 0; j < table.rank; ++j) {
    for (int g = 1; g <= 2; ++g) {
      out << '(' << basis.words[j].to_string() << ", " << g
          << ") : " << entry_as_lincomb(table, basis, j, g).to_string() << '\n';
    }
  }
  return out.str();
}

bool RelationReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& v) { return v.passed; });
}

RelationReport check_relations(const MultTable& table, const GroupSpec& group,
                               const RelationOptions& options) {
  RelationReport report;
  for (int g = 1; g <= 2; ++g) {
    report.verdicts.push_back(check_order_exact(table, group, g));
  }
  std::vector<std::uint64_t> primes = options.primes;
  if (primes.empty()) primes = {kDefaultPrime, kAlternatePrime};
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t p : primes) {
    if (!is_prime_u64(p) || p <= 2) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::to_string(p) + " is not an odd prime");
    }
    std::uniform_int_distribution<std::uint64_t> residue(0, p - 1);
    std::vector<ModPoint> points = {ModPoint{}};
    for (unsigned t = 0; t < options.trials; ++t) {
      ModPoint point;
      point.a = residue(rng);
      point.b = residue(rng);
      point.q = residue(rng);
      points.push_back(point);
    }
    for (const auto& point : points) {
      std::array<ModColumns, 2> rho = {specialize(table.columns[0], point, p),
                                       specialize(table.columns[1], point, p)};
      for (int g = 1; g <= 2; ++g) {
        report.verdicts.push_back(
            check_order_mod(rho, group, g, point, p, table.rank));
      }
      report.verdicts.push_back(
          check_braid_mod(rho, group, point, p, table.rank));
    }
  }
  return report;
}

CyclicityResult cyclicity_check(const MultTable& table, const BasisSet& basis) {
  auto empty = basis.ordinal(Word());
  if (!empty) return {false, "basis lacks the empty word"};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ExactVector v = {{*empty, Poly(1)}};
    for (char letter : basis.words[j].letters()) {
      v = apply_exact(
          table.columns[static_cast<std::size_t>(generator_of(letter) - 1)], v);
    }
    if (v.size() != 1 || v.begin()->first != j || !v.begin()->second.is_one()) {
      return {false, "word " + basis.words[j].to_string() +
                         " does not map to its unit vector"};
    }
  }
  return {};
}

}  // namespace hecke
