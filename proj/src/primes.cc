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

#include "equidist/primes.h"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "equidist/error.h"
#include "equidist/modular.h"

namespace equidist {
namespace {

// Sufficient for all n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool IsStrongProbablePrime(std::uint64_t n, std::uint64_t d, int s,
                           std::uint64_t a) {
  std::uint64_t x = PowMod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = MulMod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// First prime >= n, or 0 if none fits.
std::uint64_t PrimeAtOrAbove(std::uint64_t n) {
  if (n <= 2) return 2;
  if (IsPrime(n)) return n;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t c = n; c < kMax;) {
    ++c;
    if (IsPrime(c)) return c;
  }
  return 0;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!IsStrongProbablePrime(n, d, s, a)) return false;
  }
  return true;
}

std::uint64_t NextPrime(std::uint64_t n) {
  if (n == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kOverflow, "no 64-bit prime above " +
                                          std::to_string(n));
  }
  const std::uint64_t p = PrimeAtOrAbove(n + 1);
  if (p == 0) {
    throw Error(ErrorCode::kOverflow, "no 64-bit prime above " +
                                          std::to_string(n));
  }
  return p;
}

PrimeSchedule PrimeSchedule::Explicit(std::vector<std::uint64_t> q_values) {
  if (q_values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "prime schedule is empty");
  }
  for (std::size_t i = 0; i < q_values.size(); ++i) {
    if (!IsPrime(q_values[i])) {
      throw Error(ErrorCode::kNotPrime,
                  std::to_string(q_values[i]) + " is not prime");
    }
    if (i > 0 && q_values[i] <= q_values[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prime schedule must be strictly increasing");
    }
  }
  return PrimeSchedule(std::move(q_values), Spacing::kExplicit);
}

PrimeSchedule GeometricSchedule(std::uint64_t q_min, std::uint64_t q_max,
                                std::uint64_t count) {
  if (q_min < 2 || q_max < q_min || count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "geometric schedule needs 2 <= qmin <= qmax and count >= 1");
  }
  const std::uint64_t first = PrimeAtOrAbove(q_min);
  if (first == 0 || first > q_max) {
    throw Error(ErrorCode::kEmptyRange, "no prime in [" +
                                            std::to_string(q_min) + ", " +
                                            std::to_string(q_max) + "]");
  }
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  const long double lo = static_cast<long double>(q_min);
  const long double ratio = static_cast<long double>(q_max) / lo;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t target = q_min;
    if (i + 1 == count && count > 1) {
      target = q_max;
    } else if (i > 0) {
      const long double t =
          lo * std::pow(ratio, static_cast<long double>(i) /
                                   static_cast<long double>(count - 1));
      target = static_cast<std::uint64_t>(std::floor(t + 0.5L));
    }
    const std::uint64_t p = PrimeAtOrAbove(target);
    if (p == 0) {
      throw Error(ErrorCode::kOverflow,
                  "no 64-bit prime at or above " + std::to_string(target));
    }
    if (primes.empty() || p > primes.back()) primes.push_back(p);
  }
  return PrimeSchedule(std::move(primes), PrimeSchedule::Spacing::kGeometric);
}

}  // namespace equidist
