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

#include "equidist/discrepancy.h"

#include <random>
#include <sstream>

#include "equidist/error.h"
#include "equidist/expsum.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace equidist {
namespace {

ReducedPolynomial Rp(std::uint64_t q, std::vector<std::uint64_t> t) {
  return ReducedPolynomial::FromCoefficients(q, std::move(t));
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::vector<double> RandomSequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> seq(n);
  // Draw some sequences from a coarse grid so ties occur.
  const bool coarse = rng() % 2 == 0;
  for (auto& s : seq) {
    s = coarse ? static_cast<double>(rng() % 17) / 17.0 : u(rng);
  }
  return seq;
}

TEST(IntervalCount, Examples) {
  const std::vector<double> fifths = {0.0, 0.2, 0.4, 0.6, 0.8};
  EXPECT_EQ(IntervalCount(fifths, {0.2, 0.5}), Fraction(2, 5));
  const auto grid = GridSequence::FromNumerators(5, {0, 1, 2, 3, 4});
  EXPECT_EQ(IntervalCount(grid, {0.2, 0.5}), Fraction(2, 5));

  const std::vector<double> half = {0.5};
  EXPECT_EQ(IntervalCount(half, {0.0, 1.0}), Fraction(1, 1));
  EXPECT_EQ(IntervalCount(half, {0.6, 0.9}), Fraction(0, 1));
}

TEST(IntervalCount, Errors) {
  const std::vector<double> half = {0.5};
  EXPECT_EQ(CodeOf([&] { IntervalCount(half, {0.5, 0.5}); }),
            ErrorCode::kInvalidInterval);
  EXPECT_EQ(CodeOf([&] { IntervalCount(half, {-0.1, 0.5}); }),
            ErrorCode::kInvalidInterval);
  EXPECT_EQ(CodeOf([&] { IntervalCount(half, {0.1, 1.5}); }),
            ErrorCode::kInvalidInterval);
  const std::vector<double> empty;
  EXPECT_EQ(CodeOf([&] { IntervalCount(empty, {0.1, 0.5}); }),
            ErrorCode::kEmptySequence);
}

TEST(Fraction, LowestTerms) {
  const Fraction f(30, 100);
  EXPECT_EQ(f.numerator(), 3u);
  EXPECT_EQ(f.denominator(), 10u);
  EXPECT_EQ(f.ToDouble(), 0.3);
  EXPECT_THROW(Fraction(1, 0), Error);
}

TEST(EmpiricalMeasure, Examples) {
  const EmpiricalMeasure uniform(GenerateSequence(Rp(5, {0, 2})));
  ASSERT_EQ(uniform.atoms().size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(uniform.atoms()[i].numerator, i);
    EXPECT_EQ(uniform.Mass(i), Fraction(1, 5));
  }

  const EmpiricalMeasure atom(GridSequence::FromNumerators(3, {0, 0, 0}));
  ASSERT_EQ(atom.atoms().size(), 1u);
  EXPECT_EQ(atom.Point(0), 0.0);
  EXPECT_EQ(atom.Mass(0), Fraction(1, 1));

  const EmpiricalMeasure two(GridSequence::FromNumerators(3, {1, 1, 2}));
  ASSERT_EQ(two.atoms().size(), 2u);
  EXPECT_EQ(two.Mass(0), Fraction(2, 3));
  EXPECT_EQ(two.Mass(1), Fraction(1, 3));
}

TEST(EmpiricalMeasure, MassesSumToOne) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t q = NextPrime(10 + rng() % 3000);
    std::vector<std::uint64_t> t(1 + trial % 5);
    for (auto& c : t) c = rng() % q;
    const EmpiricalMeasure m(GenerateSequence(Rp(q, t)));
    EXPECT_EQ(m.TotalMass(), Fraction(1, 1));
    EXPECT_EQ(m.source_size(), q);
  }
}

TEST(StarDiscrepancy, Examples) {
  for (std::uint64_t q : {2u, 7u, 101u}) {
    std::vector<std::uint64_t> all(q);
    std::iota(all.begin(), all.end(), 0);
    const auto grid = GridSequence::FromNumerators(q, all);
    EXPECT_EQ(StarDiscrepancy(grid).star_discrepancy, 1.0 / q);
    EXPECT_NEAR(StarDiscrepancy(grid.ToReals()).star_discrepancy, 1.0 / q,
                1e-15);
  }

  const std::vector<double> zeros = {0.0, 0.0, 0.0};
  EXPECT_EQ(StarDiscrepancy(zeros).star_discrepancy, 1.0);
  EXPECT_EQ(StarDiscrepancy(GridSequence::FromNumerators(5, {0, 0, 0}))
                .star_discrepancy,
            1.0);

  const std::vector<double> half = {0.5};
  const auto brute = oracle::BruteForceDiscrepancy(half);
  EXPECT_EQ(brute.star, 0.5);
  const auto r = StarDiscrepancy(half);
  EXPECT_EQ(r.star_discrepancy, 0.5);
  EXPECT_EQ(r.two_sided, brute.two_sided);
}

TEST(StarDiscrepancy, MatchesBruteForce) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto seq = RandomSequence(rng, 1 + rng() % 120);
    const auto brute = oracle::BruteForceDiscrepancy(seq);
    const auto r = StarDiscrepancy(seq);
    ASSERT_NEAR(r.star_discrepancy, brute.star, 1e-12);
    ASSERT_NEAR(r.two_sided, brute.two_sided, 1e-12);
    ASSERT_GE(r.star_discrepancy, 0.5 / seq.size() - 1e-15);
    ASSERT_LE(r.star_discrepancy, r.two_sided);
    ASSERT_LE(r.two_sided, 2 * r.star_discrepancy + 1e-15);
  }
}

TEST(StarDiscrepancy, GridPathMatchesRealPath) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t q = NextPrime(3 + rng() % 5000);
    std::vector<std::uint64_t> t(1 + trial % 4);
    for (auto& c : t) c = rng() % q;
    const auto seq = GenerateSequence(Rp(q, t));
    const auto exact = StarDiscrepancy(seq);
    const auto real = StarDiscrepancy(seq.ToReals());
    ASSERT_NEAR(exact.star_discrepancy, real.star_discrepancy, 1e-12);
    ASSERT_NEAR(exact.two_sided, real.two_sided, 1e-12);
  }
}

TEST(StarDiscrepancy, WorstIntervalAttainsTwoSided) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto seq = RandomSequence(rng, 1 + rng() % 60);
    const auto r = StarDiscrepancy(seq);
    const double a = r.worst_interval.a;
    const double b = r.worst_interval.b;
    // Either the closed interval overshoots or the open one undershoots.
    std::size_t closed = 0, open = 0;
    for (double s : seq) {
      closed += s >= a && s <= b;
      open += s > a && s < b;
    }
    const double n = static_cast<double>(seq.size());
    const double best = std::max(closed / n - (b - a), (b - a) - open / n);
    ASSERT_NEAR(best, r.two_sided, 1e-12);
  }
}

TEST(StarDiscrepancy, PermutationsHaveMinimalDiscrepancy) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t q = NextPrime(2 + rng() % 20000);
    const auto seq = GenerateSequence(Rp(q, {rng() % q, 1 + rng() % (q - 1)}));
    ASSERT_EQ(StarDiscrepancy(seq).star_discrepancy, 1.0 / q);
  }
}

TEST(StarDiscrepancy, EmptyIsAnError) {
  const std::vector<double> empty;
  EXPECT_EQ(CodeOf([&] { StarDiscrepancy(empty); }), ErrorCode::kEmptySequence);
}

TEST(IntervalCount, DeviationWithinTwoSidedDiscrepancy) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t q = NextPrime(10 + rng() % 5000);
    std::vector<std::uint64_t> t(1 + trial % 4);
    for (auto& c : t) c = rng() % q;
    const auto seq = GenerateSequence(Rp(q, t));
    const double d = StarDiscrepancy(seq).two_sided;
    for (int i = 0; i < 100; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      if (a == b) continue;
      const double frac = IntervalCount(seq, {a, b}).ToDouble();
      ASSERT_LE(std::abs(frac - (b - a)), d + 1e-12);
    }
  }
}

TEST(ErdosTuranBound, Examples) {
  EXPECT_NEAR(ErdosTuranBound(std::vector<double>(99, 0.0)), 0.03, 1e-15);
  // 3 (1/101 + 0.0101 H_100), H_100 = 5.18737751763962...
  EXPECT_NEAR(ErdosTuranBound(std::vector<double>(100, 0.0101)),
              3 * (1.0 / 101 + 0.0101 * 5.187377517639621), 1e-12);
  EXPECT_NEAR(ErdosTuranBound(std::vector<double>(100, 0.0101)), 0.187, 1e-3);
  EXPECT_DOUBLE_EQ(ErdosTuranBound(std::vector<double>{1.0}), 4.5);
  EXPECT_EQ(ErdosTuranBound(GridSequence::FromNumerators(5, {0, 0}), 1), 1.0);
  EXPECT_EQ(CodeOf([] { ErdosTuranBound(std::vector<double>{}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ErdosTuranBound, DominatesPolynomialSequences) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t q = NextPrime(3 + rng() % 8000);
    const int d = 1 + trial % 5;
    std::vector<std::uint64_t> t(d + 1);
    for (auto& c : t) c = rng() % q;
    t.back() = 1 + rng() % (q - 1);
    const auto seq = GenerateSequence(Rp(q, t));
    const auto terms = static_cast<std::uint64_t>(std::sqrt(q));
    ASSERT_LE(StarDiscrepancy(seq).two_sided,
              ErdosTuranBound(seq, terms) + 1e-9)
        << "q=" << q;
  }
}

TEST(WeakConvergenceStudy, DeviationsShrink) {
  const auto p = PolynomialSpec::Parse("0,0.7,0.3");
  const auto schedule = PrimeSchedule::Explicit({101, 1009, 10007});
  const std::vector<Interval> intervals = {{0.25, 0.75}};
  const auto rows = WeakConvergenceStudy(p, schedule, intervals);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].q, schedule.q_values()[i]);
    EXPECT_EQ(rows[i].n, rows[i].q);
    EXPECT_FALSE(rows[i].degenerate);
    ASSERT_EQ(rows[i].deviations.size(), 1u);
    EXPECT_LE(rows[i].deviations[0].deviation, rows[i].d + 1e-12);
    EXPECT_LE(rows[i].d, rows[i].et_bound + 1e-9);
    if (i > 0) {
      EXPECT_LT(rows[i].deviations[0].deviation,
                rows[i - 1].deviations[0].deviation);
    }
  }
  // Reference value from an independent direct count.
  EXPECT_NEAR(rows[0].deviations[0].deviation, 0.024752475247524774, 1e-15);
}

TEST(WeakConvergenceStudy, ConstantPolynomialIsDegenerate) {
  const auto rows = WeakConvergenceStudy(PolynomialSpec::Parse("0.3"),
                                         PrimeSchedule::Explicit({11, 101}), {});
  for (const auto& row : rows) {
    EXPECT_TRUE(row.degenerate);
    EXPECT_GT(row.dstar, 0.5);
  }
  std::ostringstream out;
  WriteCsv(ConvergenceStudyTable(rows), out);
  EXPECT_NE(out.str().find("degenerate"), std::string::npos);
}

TEST(WeakConvergenceStudy, SingletonAndErrors) {
  const auto p = PolynomialSpec::Parse("0,0,0.15");
  const std::vector<Interval> iv = {{0.1, 0.2}};
  EXPECT_EQ(WeakConvergenceStudy(p, PrimeSchedule::Explicit({7}), iv).size(),
            1u);
  EXPECT_EQ(CodeOf([&] {
              WeakConvergenceStudy(p, PrimeSchedule::Explicit({5, 7}), iv);
            }),
            ErrorCode::kModulusTooSmall);
  const std::vector<Interval> bad = {{0.3, 0.2}};
  EXPECT_EQ(CodeOf([&] {
              WeakConvergenceStudy(p, PrimeSchedule::Explicit({7}), bad);
            }),
            ErrorCode::kInvalidInterval);
}

TEST(ConvergenceStudyTable, Columns) {
  const auto rows = WeakConvergenceStudy(
      PolynomialSpec::Parse("0,0.7,0.3"), PrimeSchedule::Explicit({101}),
      std::vector<Interval>{{0.25, 0.75}, {0.0, 0.5}});
  std::ostringstream csv;
  WriteCsv(ConvergenceStudyTable(rows), csv);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "q,N,Dstar,D,et_bound,interval_a,interval_b,deviation");
  std::ostringstream json;
  WriteJson(ConvergenceStudyTable(rows), json);
  EXPECT_NE(json.str().find("\"interval_b\":0.75"), std::string::npos);
}

}  // namespace
}  // namespace equidist
