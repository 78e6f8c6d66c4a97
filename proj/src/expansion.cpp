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

#include "hecke/expansion.hpp"

#include <string>
#include <utility>

#include "hecke/error.hpp"

namespace hecke {

namespace {

struct MarkedLetter {
  char letter;
  std::size_t marker;
};

std::string letters_of(const std::vector<MarkedLetter>& word) {
  std::string out;
  out.reserve(word.size());
  for (const auto& m : word) out.push_back(m.letter);
  return out;
}

}  // namespace

Expansion expand(const Word& y, const std::vector<std::size_t>& indices,
                 const GroupSpec& group) {
  std::vector<MarkedLetter> current;
  current.reserve(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) current.push_back({y[k], k + 1});

  Expansion out;
  std::size_t previous = 0;
  for (std::size_t index : indices) {
    if (index <= previous) {
      throw Error(ErrorKind::kInvalidArgument,
                  "expansion indices must be strictly increasing");
    }
    previous = index;

    std::size_t at = current.size();
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (current[k].marker == index) {
        at = k;
        break;
      }
    }
    if (at == current.size()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "position " + std::to_string(index) + " is not present in " +
                      y.to_string() + " (current " +
                      Word::unchecked(letters_of(current)).to_string() + ")");
    }

    const char letter = current[at].letter;
    if (!is_positive_letter(letter)) {
      throw Error(ErrorKind::kLetterMismatch,
                  "position " + std::to_string(index) + " of " + y.to_string() +
                      " carries a barred letter");
    }
    const int g = generator_of(letter);
    const GeneratorSpec& spec = group.generator(g);
    const auto run = static_cast<std::size_t>(spec.order - 1);
    if (at + run > current.size()) {
      throw Error(ErrorKind::kLetterMismatch,
                  "position " + std::to_string(index) + " of " + y.to_string() +
                      " lacks " + std::to_string(run) +
                      " consecutive letters " + std::string(1, letter));
    }
    for (std::size_t k = 1; k < run; ++k) {
      if (current[at + k].letter != letter) {
        throw Error(ErrorKind::kLetterMismatch,
                    "position " + std::to_string(index) + " of " +
                        y.to_string() + " lacks " + std::to_string(run) +
                        " consecutive letters " + std::string(1, letter));
      }
    }

    const std::string now = letters_of(current);
    const std::string prefix = now.substr(0, at);
    const std::string suffix = now.substr(at + run);
    for (std::size_t k = 0; k < spec.coefficients.size(); ++k) {
      // coefficients[k] multiplies s^(o-2-k) in the expansion of s^(o-1).
      std::size_t power = run - 1 - k;
      out.tail.add(
          Word::unchecked(prefix + std::string(power, letter) + suffix),
          spec.coefficients[k]);
    }

    current[at].letter = bar(letter);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(at + 1),
                  current.begin() + static_cast<std::ptrdiff_t>(at + run));
  }
  out.head = Word::unchecked(letters_of(current));
  return out;
}

}  // namespace hecke
