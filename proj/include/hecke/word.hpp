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

#ifndef HECKE_WORD_HPP_
#define HECKE_WORD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Letters of the alphabet Y. The character codes double as the literal
// syntax: 'A' and 'B' are the inverses of the generators 1 and 2.
enum class Letter : char {
  kOne = '1',
  kTwo = '2',
  kOneBar = 'A',
  kTwoBar = 'B',
};

inline constexpr char kOne = '1';
inline constexpr char kTwo = '2';
inline constexpr char kOneBar = 'A';
inline constexpr char kTwoBar = 'B';

inline constexpr bool is_letter(char c) {
  return c == kOne || c == kTwo || c == kOneBar || c == kTwoBar;
}
inline constexpr bool is_positive_letter(char c) {
  return c == kOne || c == kTwo;
}
// x -> x-bar and x-bar -> x.
inline constexpr char bar(char c) {
  switch (c) {
    case kOne:
      return kOneBar;
    case kTwo:
      return kTwoBar;
    case kOneBar:
      return kOne;
    case kTwoBar:
      return kTwo;
    default:
      return c;
  }
}
// Generator index (1 or 2) of a letter, ignoring the bar.
inline constexpr int generator_of(char c) {
  return (c == kOne || c == kOneBar) ? 1 : 2;
}
inline constexpr char generator_letter(int generator) {
  return generator == 1 ? kOne : kTwo;
}

// A finite word over {1, 2, 1-bar, 2-bar}. Positive words (no barred letter)
// are the monomials of the free monoid on the generators.
//
// Words are totally ordered by deglex: shorter first, then lexicographically
// with 1 < 2 < 1-bar < 2-bar. On positive words this is the usual deglex
// order with 1 < 2.
class Word {
 public:
  Word() = default;
  // Validates that every character is one of 1, 2, A, B.
  explicit Word(std::string letters);

  // Literal syntax: letters 1, 2, A, B; the empty word is "e".
  static Word parse(std::string_view literal);
  // Skips validation; callers guarantee the letters are in the alphabet.
  static Word unchecked(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  bool is_positive() const;

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return unchecked(letters_.substr(pos, len));
  }
  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend Word operator+(Word x, const Word& y) { return x += y; }

  // Literal rendering ("e" for the empty word).
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Word& x, const Word& y);
  friend bool operator==(const Word& x, const Word& y) = default;

 private:
  std::string letters_;
};

// Deglex comparison on raw letter strings (length, then character order).
std::strong_ordering deglex_cmp(std::string_view x, std::string_view y);
inline std::strong_ordering deglex_cmp(const Word& x, const Word& y) {
  return deglex_cmp(x.letters(), y.letters());
}

// Ordering functor for containers that must iterate largest word first.
struct DeglexGreater {
  using is_transparent = void;
  bool operator()(const std::string& x, const std::string& y) const {
    return deglex_cmp(x, y) > 0;
  }
};

// Free reduction: cancels adjacent x x-bar / x-bar x pairs until none remain.
Word red(const Word& w);

// Toggles the bar on the letters at the given 1-based positions.
Word inv(const Word& w, const std::vector<std::size_t>& positions);

// Formal inverse in the free group: reversed, every letter barred.
Word formal_inverse(const Word& w);

// Alternating word of the given length starting with `first` (1 or 2).
Word alternating(char first, std::size_t length);

}  // namespace hecke

template <>
struct std::hash<hecke::Word> {
  std::size_t operator()(const hecke::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};

#endif  // HECKE_WORD_HPP_
