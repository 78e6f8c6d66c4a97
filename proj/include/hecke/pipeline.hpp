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

#ifndef HECKE_PIPELINE_HPP_
#define HECKE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hecke/fixtures.hpp"
#include "hecke/multtable.hpp"
#include "hecke/ncgb.hpp"
#include "hecke/rewrite.hpp"
#include "hecke/soundness.hpp"
#include "json.hpp"

namespace hecke {

struct VerifyOptions {
  std::filesystem::path fixtures = default_fixtures_dir();
  std::uint64_t fuel = 1'000'000;
  unsigned trials = 5;
  std::vector<std::uint64_t> primes;  // empty: both built-in primes
  std::uint64_t seed = 20;
  unsigned threads = 1;
  bool ncgb = true;
  unsigned ncgb_samples = 3;  // random points besides a = b = q = 0
  std::size_t degree_cap = 24;
  bool timings = false;  // wall-clock seconds make reports non-reproducible
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

// Outcome of one full run. Every stage that ran leaves its data here; a
// stage that failed records a witness in `failures` and later stages that
// depend on it are skipped.
struct VerificationReport {
  std::string group;
  VerifyOptions options;

  std::size_t basis_count = 0;
  std::optional<bool> basis_matches_fixture;  // only G20 has a fixture
  bool basis_factor_closed = false;

  std::size_t rule_count = 0;
  std::vector<RuleCompileInfo> compiled;
  bool leading_terms_match = false;

  std::size_t table_entries = 0;
  std::size_t table_expected = 0;
  bool cyclic = false;

  RelationReport relations;
  std::vector<RuleVerdict> soundness;

  std::vector<GbSummary> ncgb;
  bool ncgb_matches = false;

  std::vector<StageTiming> timings;
  std::vector<std::string> failures;  // "<stage>: <witness>"

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// load -> enumerate_basis -> compile_rules -> build_table -> check_relations
// -> soundness -> ncgb cross-check. Fixture problems throw (kFixture,
// kParse, kUnknownGroup); verification problems are recorded in the report.
VerificationReport run_verify(const std::string& group,
                              const VerifyOptions& options = {});

// Points used by the Groebner stability check: the group-algebra point and
// `samples` seeded random points.
std::vector<Specialization> ncgb_points(unsigned samples, std::uint64_t seed);

}  // namespace hecke

#endif  // HECKE_PIPELINE_HPP_
