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

#ifndef EQUIDIST_PRIMES_H_
#define EQUIDIST_PRIMES_H_

#include <cstdint>
#include <span>
#include <vector>

namespace equidist {

// Deterministic for every 64-bit input (Miller-Rabin over the first twelve
// prime bases).
bool IsPrime(std::uint64_t n);

// Smallest prime strictly greater than n. Throws kOverflow when no such
// prime fits in 64 bits.
std::uint64_t NextPrime(std::uint64_t n);

// Index set of the moduli used by convergence studies: distinct primes in
// strictly increasing order.
class PrimeSchedule {
 public:
  enum class Spacing { kGeometric, kExplicit };

  // Validates primality and strict ordering; throws kNotPrime or
  // kInvalidArgument.
  static PrimeSchedule Explicit(std::vector<std::uint64_t> q_values);

  const std::vector<std::uint64_t>& q_values() const { return q_values_; }
  Spacing spacing() const { return spacing_; }
  std::size_t size() const { return q_values_.size(); }

 private:
  friend PrimeSchedule GeometricSchedule(std::uint64_t, std::uint64_t,
                                         std::uint64_t);
  PrimeSchedule(std::vector<std::uint64_t> q, Spacing s)
      : q_values_(std::move(q)), spacing_(s) {}

  std::vector<std::uint64_t> q_values_;
  Spacing spacing_;
};

// `count` geometrically spaced targets from q_min to q_max, each replaced by
// the first prime at or above it; collisions are dropped. Primes may exceed
// q_max (the last target rounds up), but at least one prime must lie in
// [q_min, q_max] or kEmptyRange is thrown.
PrimeSchedule GeometricSchedule(std::uint64_t q_min, std::uint64_t q_max,
                                std::uint64_t count);

}  // namespace equidist

#endif  // EQUIDIST_PRIMES_H_
