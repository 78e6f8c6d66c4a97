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

#ifndef HECKE_MODULAR_HPP_
#define HECKE_MODULAR_HPP_

#include <cstdint>

namespace hecke {

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y,
                             std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
}

inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y,
                             std::uint64_t p) {
  std::uint64_t s = x + y;  // x, y < p < 2^63
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y,
                             std::uint64_t p) {
  return x >= y ? x - y : x + (p - y);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// 2^61 - 1 and the largest prime below 2^61.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;
inline constexpr std::uint64_t kAlternatePrime = 2305843009213693921ULL;

}  // namespace hecke

#endif  // HECKE_MODULAR_HPP_
