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

#ifndef HECKE_TESTS_SUPPORT_HPP_
#define HECKE_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/basis.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/group.hpp"
#include "hecke/multtable.hpp"
#include "hecke/rewrite.hpp"
#include "hecke/word.hpp"

namespace hecke_test {

// Fixture data for one group, loaded and compiled once per process.
struct GroupData {
  hecke::GroupSpec spec;
  std::vector<hecke::Word> dominant;
  std::vector<hecke::FixtureRule> raw;
  hecke::BasisSet basis;
  hecke::CompileResult compiled;
};

const GroupData& group_data(const std::string& name);
const hecke::MultTable& table(const std::string& name);

// Seeded per call site so failures reproduce.
inline std::mt19937_64 make_rng(std::uint64_t salt) {
  return std::mt19937_64(0x5eed0000ULL + salt);
}

// Uniform word of the given length over `alphabet`.
hecke::Word random_word(std::mt19937_64& rng, std::size_t length,
                        std::string_view alphabet = "12AB");

// Length drawn uniformly from [lo, hi].
hecke::Word random_word(std::mt19937_64& rng, std::size_t lo, std::size_t hi,
                        std::string_view alphabet);

}  // namespace hecke_test

#endif  // HECKE_TESTS_SUPPORT_HPP_
