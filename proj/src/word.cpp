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

#include "hecke/word.hpp"

#include <algorithm>

#include "hecke/error.hpp"

namespace hecke {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (!is_letter(c)) {
      throw Error(ErrorKind::kParse, "invalid letter '" + std::string(1, c) +
                                         "' in word '" + letters_ + "'");
    }
  }
}

Word Word::parse(std::string_view literal) {
  if (literal == "e") return Word();
  if (literal.empty()) {
    throw Error(ErrorKind::kParse, "empty word literal (use 'e')");
  }
  return Word(std::string(literal));
}

Word Word::unchecked(std::string letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

bool Word::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), is_positive_letter);
}

std::string Word::to_string() const {
  return letters_.empty() ? std::string("e") : letters_;
}

std::strong_ordering deglex_cmp(std::string_view x, std::string_view y) {
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  int r = x.compare(y);
  return r < 0 ? std::strong_ordering::less
               : (r > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  return deglex_cmp(x.letters_, y.letters_);
}

Word red(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w.letters()) {
    if (!out.empty() && out.back() == bar(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return Word::unchecked(std::move(out));
}

Word inv(const Word& w, const std::vector<std::size_t>& positions) {
  std::string out = w.letters();
  for (std::size_t p : positions) {
    if (p == 0 || p > out.size()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "inversion position " + std::to_string(p) +
                      " outside word '" + w.to_string() + "'");
    }
  }
  // A repeated position toggles twice; sets are expected but multisets are
  // handled literally.
  for (std::size_t p : positions) out[p - 1] = bar(out[p - 1]);
  return Word::unchecked(std::move(out));
}

Word formal_inverse(const Word& w) {
  std::string out(w.letters().rbegin(), w.letters().rend());
  for (char& c : out) c = bar(c);
  return Word::unchecked(std::move(out));
}

Word alternating(char first, std::size_t length) {
  std::string out;
  out.reserve(length);
  char c = first;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(c);
    c = c == kOne ? kTwo : kOne;
  }
  return Word::unchecked(std::move(out));
}

}  // namespace hecke
