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

#include "hecke/pattern.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hecke/error.hpp"

namespace hecke {

namespace {
constexpr PatternMatcher::State kAbsent =
    std::numeric_limits<PatternMatcher::State>::max();
}

PatternMatcher::PatternMatcher(std::vector<Word> patterns)
    : patterns_(std::move(patterns)) {
  delta_.push_back({kAbsent, kAbsent});
  best_.push_back(kNone);
  longest_.push_back(kNone);
  for (std::size_t index = 0; index < patterns_.size(); ++index) {
    const Word& p = patterns_[index];
    if (p.empty() || !p.is_positive()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "patterns must be nonempty positive words, got '" +
                      p.to_string() + "'");
    }
    State s = 0;
    for (char c : p.letters()) {
      int k = c == kTwo ? 1 : 0;
      if (delta_[s][k] == kAbsent) {
        delta_[s][k] = static_cast<State>(delta_.size());
        delta_.push_back({kAbsent, kAbsent});
        best_.push_back(kNone);
        longest_.push_back(kNone);
      }
      s = delta_[s][k];
    }
    best_[s] = std::min(best_[s], index);
    if (longest_[s] == kNone) longest_[s] = index;
    if (own_.size() < delta_.size()) own_.resize(delta_.size(), kNone);
    if (own_[s] == kNone) own_[s] = index;
  }

  own_.resize(delta_.size(), kNone);
  output_link_.assign(delta_.size(), 0);

  // Breadth-first completion of the goto function with failure transitions;
  // best_ is folded along the failure chain.
  std::vector<State> fail(delta_.size(), 0);
  std::deque<State> queue;
  for (int k = 0; k < 2; ++k) {
    if (delta_[0][k] == kAbsent) {
      delta_[0][k] = 0;
    } else {
      fail[delta_[0][k]] = 0;
      queue.push_back(delta_[0][k]);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    best_[s] = std::min(best_[s], best_[fail[s]]);
    // The failure state spells a proper suffix, so its outputs are shorter.
    if (longest_[s] == kNone) longest_[s] = longest_[fail[s]];
    output_link_[s] = own_[fail[s]] != kNone ? fail[s] : output_link_[fail[s]];
    for (int k = 0; k < 2; ++k) {
      State t = delta_[s][k];
      if (t == kAbsent) {
        delta_[s][k] = delta_[fail[s]][k];
      } else {
        fail[t] = delta_[fail[s]][k];
        queue.push_back(t);
      }
    }
  }
}

std::optional<PatternMatch> PatternMatcher::find_first(std::string_view word,
                                                       Occurrence mode) const {
  std::size_t best = kNone;
  std::size_t end = 0;
  State s = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s = next(s, word[i]);
    std::size_t here = best_[s];
    if (here == kNone) continue;
    if (here < best || (mode == Occurrence::kRightmost && here == best)) {
      best = here;
      end = i;
    }
  }
  if (best == kNone) return std::nullopt;
  return PatternMatch{best, end + 1 - patterns_[best].size()};
}

std::optional<PatternMatch> PatternMatcher::find_earliest(
    std::string_view word, Occurrence mode) const {
  std::optional<PatternMatch> found;
  State s = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s = next(s, word[i]);
    std::size_t here = longest_[s];
    if (here == kNone) continue;
    std::size_t start = i + 1 - patterns_[here].size();
    if (!found || (mode == Occurrence::kLeftmost ? start < found->position
                                                 : start > found->position)) {
      found = PatternMatch{here, start};
    }
  }
  return found;
}

std::vector<PatternMatch> PatternMatcher::find_all(
    std::string_view word) const {
  std::vector<PatternMatch> out;
  State s = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s = next(s, word[i]);
    for (State t = own_[s] != kNone ? s : output_link_[s]; t != 0;
         t = output_link_[t]) {
      out.push_back({own_[t], i + 1 - patterns_[own_[t]].size()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.position != y.position ? x.position < y.position
                                    : x.index < y.index;
  });
  return out;
}

bool PatternMatcher::matches_any(std::string_view word) const {
  State s = 0;
  for (char c : word) {
    s = next(s, c);
    if (best_[s] != kNone) return true;
  }
  return false;
}

}  // namespace hecke
