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

#include "support.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hecke_test {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const GroupData& group_data(const std::string& name) {
  static std::map<std::string, std::unique_ptr<GroupData>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[name];
  if (!slot) {
    hecke::GroupSpec spec = hecke::load_group(name);
    std::vector<hecke::Word> dominant = hecke::load_dominant_terms(name);
    std::vector<hecke::FixtureRule> raw = hecke::load_rules(name);
    hecke::BasisSet basis = hecke::enumerate_basis(dominant);
    hecke::CompileResult compiled = hecke::compile_rules(spec, raw, dominant);
    slot = std::make_unique<GroupData>(
        GroupData{std::move(spec), std::move(dominant), std::move(raw),
                  std::move(basis), std::move(compiled)});
  }
  return *slot;
}

const hecke::MultTable& table(const std::string& name) {
  static std::map<std::string, std::unique_ptr<hecke::MultTable>> cache;
  const GroupData& d = group_data(name);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[name];
  if (!slot) {
    hecke::TableOptions opts;
    opts.threads = 4;
    slot = std::make_unique<hecke::MultTable>(
        hecke::build_table(d.basis, d.compiled.rules, d.spec, opts));
  }
  return *slot;
}

hecke::Word random_word(std::mt19937_64& rng, std::size_t length,
                        std::string_view alphabet) {
  std::string s;
  for (std::size_t i = 0; i < length; ++i) {
    s += alphabet[rng() % alphabet.size()];
  }
  return hecke::Word(s);
}

hecke::Word random_word(std::mt19937_64& rng, std::size_t lo, std::size_t hi,
                        std::string_view alphabet) {
  return random_word(rng, lo + rng() % (hi - lo + 1), alphabet);
}

}  // namespace hecke_test
