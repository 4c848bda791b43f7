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

#include <cstdint>
#include <limits>

#include "equidist/error.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace equidist {
namespace {

TEST(IsPrime, SmallCases) {
  EXPECT_TRUE(IsPrime(2));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(0));
  EXPECT_TRUE(IsPrime(100003));
  EXPECT_EQ(IsPrime(100003), oracle::TrialDivision(100003));
}

TEST(IsPrime, AgreesWithSieveUpToOneMillion) {
  const auto sieve = oracle::Sieve(1'000'000);
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    ASSERT_EQ(IsPrime(n), sieve[n]) << n;
  }
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(IsPrime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(IsPrime(std::numeric_limits<std::uint64_t>::max()));
  // Strong pseudoprime to bases 2..37 would need n > 3.3e24.
  EXPECT_FALSE(IsPrime(3215031751ull));  // spsp(2,3,5,7)
  EXPECT_FALSE(IsPrime(3825123056546413051ull));  // spsp to bases 2..23
  EXPECT_TRUE(IsPrime(1'000'000'007ull));
  EXPECT_FALSE(IsPrime(1'000'000'007ull * 998'244'353ull));
}

TEST(NextPrime, Examples) {
  EXPECT_EQ(NextPrime(1), 2u);
  EXPECT_EQ(NextPrime(100), oracle::NextPrimeByTrial(100));
  EXPECT_EQ(NextPrime(100), 101u);
  EXPECT_EQ(NextPrime(10000), oracle::NextPrimeByTrial(10000));
  EXPECT_EQ(NextPrime(10000), 10007u);
  EXPECT_EQ(NextPrime(0), 2u);
  EXPECT_EQ(NextPrime(2), 3u);
}

TEST(NextPrime, PredecessorOfEveryPrimeMapsToIt) {
  const auto sieve = oracle::Sieve(1'000'000);
  for (std::uint64_t p = 2; p <= 1'000'000; ++p) {
    if (sieve[p]) ASSERT_EQ(NextPrime(p - 1), p);
  }
}

TEST(NextPrime, OverflowAboveLargestPrime) {
  try {
    NextPrime(18446744073709551557ull);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(GeometricSchedule, DecadeTargets) {
  // Oracle: next prime at or above 100, 1000, 10000, 100000.
  const auto s = GeometricSchedule(100, 100000, 4);
  const std::vector<std::uint64_t> expected = {
      oracle::NextPrimeByTrial(99), oracle::NextPrimeByTrial(999),
      oracle::NextPrimeByTrial(9999), oracle::NextPrimeByTrial(99999)};
  EXPECT_EQ(s.q_values(), expected);
  EXPECT_EQ(s.q_values(), (std::vector<std::uint64_t>{101, 1009, 10007, 100003}));
  EXPECT_EQ(s.spacing(), PrimeSchedule::Spacing::kGeometric);
}

TEST(GeometricSchedule, Singleton) {
  EXPECT_EQ(GeometricSchedule(2, 2, 1).q_values(),
            std::vector<std::uint64_t>{2});
}

TEST(GeometricSchedule, EmptyRange) {
  // 24..28 holds no prime.
  for (std::uint64_t n = 24; n <= 28; ++n) ASSERT_FALSE(oracle::TrialDivision(n));
  try {
    GeometricSchedule(24, 28, 1);
    FAIL() << "expected empty-range";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyRange);
  }
}

TEST(GeometricSchedule, DeduplicatesCollisions) {
  const auto s = GeometricSchedule(100, 110, 8);
  const auto& q = s.q_values();
  ASSERT_FALSE(q.empty());
  for (std::size_t i = 1; i < q.size(); ++i) EXPECT_LT(q[i - 1], q[i]);
  for (auto p : q) EXPECT_TRUE(oracle::TrialDivision(p));
  EXPECT_LT(q.size(), 8u);
}

TEST(GeometricSchedule, RejectsBadArguments) {
  EXPECT_THROW(GeometricSchedule(1, 10, 2), Error);
  EXPECT_THROW(GeometricSchedule(10, 5, 2), Error);
  EXPECT_THROW(GeometricSchedule(2, 10, 0), Error);
}

TEST(ExplicitSchedule, Validation) {
  EXPECT_EQ(PrimeSchedule::Explicit({5, 7, 11}).size(), 3u);
  EXPECT_THROW(PrimeSchedule::Explicit({5, 9}), Error);
  EXPECT_THROW(PrimeSchedule::Explicit({7, 5}), Error);
  EXPECT_THROW(PrimeSchedule::Explicit({}), Error);
}

}  // namespace
}  // namespace equidist
