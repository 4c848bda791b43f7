// Copyright 2026 The Equidist Authors.
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

#ifndef EQUIDIST_MODULAR_H_
#define EQUIDIST_MODULAR_H_

#include <cstdint>

namespace equidist {

using u128 = unsigned __int128;

// (a * b) mod m without overflow for any 64-bit operands.
constexpr std::uint64_t MulMod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

constexpr std::uint64_t AddMod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) {
  // a, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

constexpr std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp,
                               std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Reduces a signed integer into [0, m).
constexpr std::uint64_t ReduceSigned(std::int64_t k, std::uint64_t m) {
  if (k >= 0) return static_cast<std::uint64_t>(k) % m;
  // -(k + 1) avoids overflow at INT64_MIN.
  const std::uint64_t neg = (static_cast<std::uint64_t>(-(k + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

}  // namespace equidist

#endif  // EQUIDIST_MODULAR_H_
