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

#include "hecke/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <utility>

#include "hecke/basis.hpp"
#include "hecke/error.hpp"

namespace hecke {

namespace {

using Json = nlohmann::json;

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out) {}
  void lap(std::string stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back(
        {std::move(stage), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

std::vector<std::string> words_to_strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

std::vector<Word> sorted(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace

std::vector<Specialization> ncgb_points(unsigned samples, std::uint64_t seed) {
  std::vector<Specialization> out{Specialization{}};
  std::mt19937_64 rng(seed);
  // Raw engine output keeps the points identical across standard libraries.
  auto draw = [&] {
    return Integer(static_cast<long long>(rng() % 2001)) - 1000;
  };
  for (unsigned i = 0; i < samples; ++i) {
    Specialization s;
    s.a = draw();
    s.b = draw();
    s.q = draw();
    out.push_back(s);
  }
  return out;
}

VerificationReport run_verify(const std::string& group,
                              const VerifyOptions& options) {
  VerificationReport r;
  r.group = group;
  r.options = options;
  Stopwatch clock(r.timings);
  auto fail = [&](const std::string& stage, const std::string& why) {
    r.failures.push_back(stage + ": " + why);
  };

  const GroupSpec spec = load_group(group, options.fixtures);
  const std::vector<Word> dominant =
      load_dominant_terms(group, options.fixtures);
  const std::vector<FixtureRule> raw = load_rules(group, options.fixtures);
  std::optional<std::vector<Word>> basis_fixture;
  if (std::filesystem::exists(options.fixtures / group / "basis.txt")) {
    basis_fixture = load_basis_fixture(group, options.fixtures);
  }
  r.rule_count = raw.size();
  clock.lap("load");

  BasisSet basis;
  try {
    basis = enumerate_basis(dominant);
    r.basis_count = basis.size();
    r.basis_factor_closed = is_factor_closed(basis);
    if (!r.basis_factor_closed) fail("basis", "word set is not factor-closed");
    if (r.basis_count != spec.group_order) {
      fail("basis", std::to_string(r.basis_count) + " words, expected |W| = " +
                        std::to_string(spec.group_order));
    }
    if (basis_fixture) {
      r.basis_matches_fixture = sorted(*basis_fixture) == sorted(basis.words);
      if (!*r.basis_matches_fixture) {
        fail("basis", "enumeration differs from the basis fixture");
      }
    }
  } catch (const Error& e) {
    fail("basis", e.what());
  }
  clock.lap("basis");

  std::optional<CompileResult> compiled;
  try {
    compiled =
        compile_rules(spec, raw, dominant,
                      {.fuel = options.fuel, .search = Search::kBacktrack});
    r.compiled = compiled->info;
    r.leading_terms_match = compiled->rules.leading_terms() == dominant;
    if (!r.leading_terms_match) {
      fail("compile", "compiled leading terms differ from the dominant terms");
    }
  } catch (const Error& e) {
    fail("compile", std::string(error_kind_name(e.kind())) + ": " + e.what());
  }
  clock.lap("compile");

  if (compiled && r.basis_count > 0) {
    r.table_expected = 2 * basis.size();
    try {
      TableOptions topts;
      topts.reduce.fuel = options.fuel;
      topts.threads = options.threads;
      const MultTable table = build_table(basis, compiled->rules, spec, topts);
      r.table_entries = r.table_expected;
      clock.lap("table");

      const CyclicityResult cyc = cyclicity_check(table, basis);
      r.cyclic = cyc.passed;
      if (!cyc.passed) fail("cyclicity", cyc.witness);

      RelationOptions ropts;
      ropts.trials = options.trials;
      ropts.primes = options.primes;
      ropts.seed = options.seed;
      r.relations = check_relations(table, spec, ropts);
      for (const IdentityVerdict& v : r.relations.verdicts) {
        if (!v.passed)
          fail("relations", v.identity + " " + v.arithmetic + ": " + v.witness);
      }
      clock.lap("relations");
    } catch (const Error& e) {
      fail("table", std::string(error_kind_name(e.kind())) + ": " + e.what());
      clock.lap("table");
    }
  }

  for (const FixtureRule& rule : raw) {
    RuleVerdict v = verify_rule(rule, spec);
    if (!v.passed) {
      fail("soundness", "rule " + std::to_string(rule.id) + ": " + v.witness);
    }
    r.soundness.push_back(std::move(v));
  }
  clock.lap("soundness");

  if (options.ncgb) {
    GbOptions gopts;
    gopts.degree_cap = options.degree_cap;
    const std::uint64_t prime =
        options.primes.empty() ? kDefaultPrime : options.primes.front();
    r.ncgb_matches = true;
    for (const Specialization& point :
         ncgb_points(options.ncgb_samples, options.seed)) {
      try {
        GbSummary s = run_ncgb(spec, point, prime, gopts);
        const bool same = sorted(s.leading_terms) == sorted(dominant) &&
                          s.standard_words == spec.group_order;
        if (!same) {
          r.ncgb_matches = false;
          fail("ncgb",
               "at " + point.to_string() + ": " +
                   std::to_string(s.leading_terms.size()) + " leading terms, " +
                   std::to_string(s.standard_words) + " standard words");
        }
        r.ncgb.push_back(std::move(s));
      } catch (const Error& e) {
        r.ncgb_matches = false;
        fail("ncgb", "at " + point.to_string() + ": " + e.what());
      }
    }
    clock.lap("ncgb");
  }
  if (!options.timings) r.timings.clear();
  return r;
}

Json VerificationReport::to_json() const {
  Json j;
  j["group"] = group;
  j["verdict"] = passed() ? "PASS" : "FAIL";
  j["failures"] = failures;

  Json opts;
  opts["fuel"] = options.fuel;
  opts["trials"] = options.trials;
  opts["seed"] = options.seed;
  std::vector<std::uint64_t> primes = options.primes;
  if (primes.empty()) primes = {kDefaultPrime, kAlternatePrime};
  opts["primes"] = primes;
  opts["ncgb"] = options.ncgb;
  opts["ncgb_samples"] = options.ncgb_samples;
  opts["degree_cap"] = options.degree_cap;
  j["options"] = opts;

  Json b;
  b["count"] = basis_count;
  b["factor_closed"] = basis_factor_closed;
  b["matches_fixture"] =
      basis_matches_fixture ? Json(*basis_matches_fixture) : Json(nullptr);
  j["basis"] = b;

  Json rules = Json::array();
  for (const RuleCompileInfo& c : compiled) {
    rules.push_back({{"id", c.id},
                     {"raw_terms", c.raw_terms},
                     {"compiled_terms", c.compiled_terms},
                     {"rewrites", c.rewrites},
                     {"unchanged", c.unchanged}});
  }
  j["compile"] = {{"rule_count", rule_count},
                  {"compiled", compiled.size()},
                  {"leading_terms_match", leading_terms_match},
                  {"rules", rules}};

  j["table"] = {
      {"entries", table_entries},
      {"expected", table_expected},
      {"total", table_expected > 0 && table_entries == table_expected},
      {"cyclic", cyclic}};

  Json rel = Json::array();
  for (const IdentityVerdict& v : relations.verdicts) {
    Json item{{"identity", v.identity},
              {"arithmetic", v.arithmetic},
              {"passed", v.passed}};
    if (v.arithmetic != "exact") {
      item["point"] = {{"a", v.point.a}, {"b", v.point.b}, {"q", v.point.q}};
    }
    if (!v.passed) item["witness"] = v.witness;
    rel.push_back(item);
  }
  j["relations"] = rel;

  Json snd = Json::array();
  for (const RuleVerdict& v : soundness) {
    Json item{{"id", v.id},
              {"method", v.method},
              {"passed", v.passed},
              {"checks", v.checks.size()}};
    if (!v.passed) {
      item["witness"] = v.witness;
      if (v.failure) item["error"] = std::string(error_kind_name(*v.failure));
    }
    snd.push_back(item);
  }
  j["soundness"] = snd;

  Json gb = Json::array();
  for (const GbSummary& s : ncgb) {
    gb.push_back({{"point", s.point.to_string()},
                  {"prime", s.prime},
                  {"leading_terms", words_to_strings(s.leading_terms)},
                  {"finite", s.finite},
                  {"standard_words", s.standard_words},
                  {"overlaps", s.stats.overlaps},
                  {"additions", s.stats.additions},
                  {"max_degree", s.stats.max_degree},
                  {"certified", s.stats.certified}});
  }
  j["ncgb"] = {{"ran", options.ncgb}, {"matches", ncgb_matches}, {"runs", gb}};

  if (!timings.empty()) {
    Json t;
    for (const StageTiming& s : timings) t[s.stage] = s.seconds;
    j["timings"] = t;
  }
  return j;
}

}  // namespace hecke
