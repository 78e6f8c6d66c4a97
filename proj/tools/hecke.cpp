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

// Command-line driver: hecke <subcommand> [flags].
//
// Exit status: 0 when every check passes, 1 on a verification failure,
// 2 on usage or fixture errors.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecke/basis.hpp"
#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/garside.hpp"
#include "hecke/multtable.hpp"
#include "hecke/ncgb.hpp"
#include "hecke/pipeline.hpp"
#include "hecke/rewrite.hpp"
#include "hecke/soundness.hpp"

namespace {

using namespace hecke;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string group = "g20";
  std::uint64_t fuel = 1'000'000;
  unsigned trials = 5;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 20;
  unsigned threads = 1;
  std::string report;
  std::string fixtures = default_fixtures_dir().string();
  bool no_ncgb = false;
  unsigned ncgb_samples = 3;
  bool timings = false;
  // ncgb
  std::string spec = "a=0,b=0,q=0";
  std::uint64_t mod = kDefaultPrime;
  std::size_t cap = 24;
  bool full = false;
  // braid-eq, reduce
  std::vector<std::string> words;
  int artin_m = 0;
  bool rightmost = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kFixture:
    case ErrorKind::kUnknownGroup:
    case ErrorKind::kIndexOutOfRange:
    case ErrorKind::kLetterMismatch:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

GroupSpec load(const Flags& f) { return load_group(f.group, f.fixtures); }

BasisSet basis_of(const Flags& f) {
  return enumerate_basis(load_dominant_terms(f.group, f.fixtures));
}

CompileResult compile(const Flags& f) {
  return compile_rules(load(f), load_rules(f.group, f.fixtures),
                       load_dominant_terms(f.group, f.fixtures),
                       {.fuel = f.fuel, .search = Search::kBacktrack});
}

MultTable table_of(const Flags& f, const BasisSet& basis) {
  TableOptions opts;
  opts.reduce.fuel = f.fuel;
  opts.threads = f.threads;
  return build_table(basis, compile(f).rules, load(f), opts);
}

int cmd_verify(const Flags& f) {
  VerifyOptions opts;
  opts.fixtures = f.fixtures;
  opts.fuel = f.fuel;
  opts.trials = f.trials;
  opts.primes = f.primes;
  opts.seed = f.seed;
  opts.threads = f.threads;
  opts.ncgb = !f.no_ncgb;
  opts.ncgb_samples = f.ncgb_samples;
  opts.degree_cap = f.cap;
  opts.timings = f.timings;
  const VerificationReport r = run_verify(f.group, opts);
  const std::string json = r.to_json().dump(2) + "\n";
  if (f.report == "-") {
    std::cout << json;
  } else if (!f.report.empty()) {
    std::ofstream out(f.report);
    if (!out)
      throw Error(ErrorKind::kInvalidArgument, "cannot write " + f.report);
    out << json;
  }
  std::ostream& log = f.report == "-" ? std::cerr : std::cout;
  log << r.group << ": basis " << r.basis_count << ", rules "
      << r.compiled.size() << "/" << r.rule_count << ", table "
      << r.table_entries << "/" << r.table_expected << ", relations "
      << r.relations.verdicts.size() << " checks, soundness "
      << r.soundness.size() << " rules\n";
  for (const std::string& failure : r.failures) log << "  " << failure << "\n";
  log << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_basis(const Flags& f) {
  const BasisSet basis = basis_of(f);
  for (const Word& w : basis.words) std::cout << w.to_string() << "\n";
  std::cout << "# " << basis.size() << " words\n";
  return kExitPass;
}

int cmd_multtable(const Flags& f) {
  const BasisSet basis = basis_of(f);
  std::cout << serialize_table(table_of(f, basis), basis);
  return kExitPass;
}

int cmd_check_relations(const Flags& f) {
  const BasisSet basis = basis_of(f);
  RelationOptions opts;
  opts.trials = f.trials;
  opts.primes = f.primes;
  opts.seed = f.seed;
  const RelationReport r = check_relations(table_of(f, basis), load(f), opts);
  for (const IdentityVerdict& v : r.verdicts) {
    std::cout << (v.passed ? "ok   " : "FAIL ") << v.identity << " "
              << v.arithmetic;
    if (v.arithmetic != "exact") {
      std::cout << " at (" << v.point.a << ", " << v.point.b << ", "
                << v.point.q << ")";
    }
    if (!v.passed) std::cout << ": " << v.witness;
    std::cout << "\n";
  }
  return r.passed() ? kExitPass : kExitFail;
}

int cmd_verify_derivations(const Flags& f) {
  const GroupSpec spec = load(f);
  bool all = true;
  for (const FixtureRule& rule : load_rules(f.group, f.fixtures)) {
    const RuleVerdict v = verify_rule(rule, spec);
    all = all && v.passed;
    std::cout << "rule " << v.id << " " << v.method << " "
              << (v.passed ? "ok" : "FAIL") << " (" << v.checks.size()
              << " checks)";
    if (!v.passed) std::cout << ": " << v.witness;
    std::cout << "\n";
  }
  return all ? kExitPass : kExitFail;
}

int cmd_ncgb(const Flags& f) {
  GbOptions opts;
  opts.degree_cap = f.cap;
  opts.module_certificate = !f.full;
  const GbSummary s =
      run_ncgb(load(f), Specialization::parse(f.spec), f.mod, opts);
  for (const Word& w : s.leading_terms) std::cout << w.to_string() << "\n";
  std::cout << "# leading terms: " << s.leading_terms.size() << "\n"
            << "# standard words: "
            << (s.finite ? std::to_string(s.standard_words) : "infinite")
            << "\n# overlaps: " << s.stats.overlaps
            << "\n# max degree: " << s.stats.max_degree << "\n";
  return kExitPass;
}

int cmd_braid_eq(const Flags& f) {
  if (f.words.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument, "braid-eq needs two words");
  }
  const int m = f.artin_m > 0 ? f.artin_m : load(f).artin_m;
  const Word u = Word::parse(f.words[0]);
  const Word v = Word::parse(f.words[1]);
  const bool eq = braid_equal(u, v, m);
  std::cout << nf(u, m).to_string() << "\n"
            << nf(v, m).to_string() << "\n"
            << (eq ? "equal" : "different") << "\n";
  return eq ? kExitPass : kExitFail;
}

int cmd_reduce(const Flags& f) {
  if (f.words.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "reduce needs an expression");
  }
  const GroupSpec spec = load(f);
  const CompileResult c = compile(f);
  ReduceOptions opts;
  opts.fuel = f.fuel;
  opts.occurrence =
      f.rightmost ? Occurrence::kRightmost : Occurrence::kLeftmost;
  for (const std::string& text : f.words) {
    const LinComb x = pos(LinComb::parse(text), spec);
    std::cout << reduce(x, c.rules, spec, opts).to_string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting verification of Hecke algebra bases"};
  app.set_config("--config", "", "TOML/INI file with flag values");
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--group", f.group, "g20 or g21")->capture_default_str();
  app.add_option("--fuel", f.fuel, "rewrite budget per reduction")
      ->capture_default_str();
  app.add_option("--trials", f.trials, "random points per prime")
      ->capture_default_str();
  app.add_option("--prime", f.primes,
                 "modulus for randomized checks (repeatable)");
  app.add_option("--seed", f.seed, "random seed")->capture_default_str();
  app.add_option("--threads", f.threads, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--fixtures", f.fixtures, "fixture directory")
      ->capture_default_str();
  app.add_option("--cap", f.cap, "Groebner degree cap")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the whole pipeline");
  verify->add_option("--report", f.report,
                     "write the JSON report here ('-' for stdout)");
  verify->add_flag("--no-ncgb", f.no_ncgb, "skip the Groebner cross-check");
  verify
      ->add_option("--ncgb-samples", f.ncgb_samples,
                   "random specializations besides the group algebra")
      ->capture_default_str();
  verify->add_flag("--timings", f.timings, "include wall-clock timings");
  app.add_subcommand("basis", "list the basis words");
  app.add_subcommand("multtable", "print the right multiplication table");
  app.add_subcommand("check-relations", "check the relations on the table");
  app.add_subcommand("verify-derivations", "check every rule's certificate");
  auto* gb = app.add_subcommand("ncgb", "Groebner basis at a specialization");
  gb->add_option("--spec", f.spec, "a=..,b=..,q=..")->capture_default_str();
  gb->add_option("--mod", f.mod, "prime modulus")->capture_default_str();
  gb->add_flag("--full", f.full, "resolve every overlap (no early exit)");
  auto* beq =
      app.add_subcommand("braid-eq", "compare two words in the Artin group");
  beq->add_option("words", f.words, "two words over 1, 2, A, B")->expected(2);
  beq->add_option("--m", f.artin_m, "braid length (defaults to the group's)");
  auto* red = app.add_subcommand("reduce", "reduce expressions with the rules");
  red->add_option("expressions", f.words,
                  "linear combinations, e.g. 2A1 or a.11+e")
      ->required();
  red->add_flag("--rightmost", f.rightmost, "rewrite rightmost occurrences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "verify") return cmd_verify(f);
    if (cmd == "basis") return cmd_basis(f);
    if (cmd == "multtable") return cmd_multtable(f);
    if (cmd == "check-relations") return cmd_check_relations(f);
    if (cmd == "verify-derivations") return cmd_verify_derivations(f);
    if (cmd == "ncgb") return cmd_ncgb(f);
    if (cmd == "braid-eq") return cmd_braid_eq(f);
    if (cmd == "reduce") return cmd_reduce(f);
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
              << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
