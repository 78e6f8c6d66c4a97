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

#include "hecke/basis.hpp"

#include <cstdint>
#include <string>

#include "hecke/error.hpp"
#include "hecke/pattern.hpp"

namespace hecke {

std::optional<std::size_t> BasisSet::ordinal(const Word& w) const {
  auto it = index.find(w);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

BasisSet enumerate_basis(const std::vector<Word>& patterns,
                         const EnumerateOptions& options) {
  if (patterns.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "pattern list is empty");
  }
  std::size_t bound = 0;
  for (const auto& p : patterns) bound += p.size();
  if (options.length_bound) {
    bound = *options.length_bound;
  } else if (!avoidance_language_finite(patterns)) {
    // The BFS would only stop at the bound after exponential growth.
    throw Error(ErrorKind::kInfinite,
                "the pattern automaton has an avoiding cycle");
  }

  const PatternMatcher matcher(patterns);
  struct Node {
    std::string letters;
    PatternMatcher::State state;
  };
  BasisSet out;
  std::vector<Node> layer = {{"", matcher.root()}};
  for (std::size_t length = 0; !layer.empty(); ++length) {
    if (length > bound) {
      throw Error(ErrorKind::kInfinite,
                  "avoider " +
                      Word::unchecked(layer.front().letters).to_string() +
                      " is longer than the bound " + std::to_string(bound));
    }
    std::vector<Node> next;
    for (auto& node : layer) {
      for (char c : {kOne, kTwo}) {
        PatternMatcher::State t = matcher.next(node.state, c);
        if (matcher.best_output(t) == PatternMatcher::kNone) {
          next.push_back({node.letters + c, t});
        }
      }
      Word w = Word::unchecked(std::move(node.letters));
      out.index.emplace(w, out.words.size());
      out.words.push_back(std::move(w));
    }
    layer = std::move(next);
  }
  return out;
}

bool avoidance_language_finite(const std::vector<Word>& patterns) {
  const PatternMatcher matcher(patterns);
  // Iterative three-colour DFS over states that complete no pattern.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(matcher.state_count(), kWhite);
  struct Frame {
    PatternMatcher::State state;
    int child;
  };
  std::vector<Frame> stack = {{matcher.root(), 0}};
  colour[matcher.root()] = kGrey;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.child == 2) {
      colour[top.state] = kBlack;
      stack.pop_back();
      continue;
    }
    char c = top.child++ == 0 ? kOne : kTwo;
    PatternMatcher::State t = matcher.next(top.state, c);
    if (matcher.best_output(t) != PatternMatcher::kNone) continue;
    if (colour[t] == kGrey) return false;
    if (colour[t] == kWhite) {
      colour[t] = kGrey;
      stack.push_back({t, 0});
    }
  }
  return true;
}

bool is_factor_closed(const BasisSet& basis) {
  for (const auto& w : basis.words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        if (!basis.contains(w.substr(i, len))) return false;
      }
    }
  }
  return true;
}

}  // namespace hecke
