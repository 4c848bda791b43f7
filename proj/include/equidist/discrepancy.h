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

#ifndef EQUIDIST_DISCREPANCY_H_
#define EQUIDIST_DISCREPANCY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equidist/polyseq.h"
#include "equidist/primes.h"
#include "equidist/table.h"

namespace equidist {

// Non-negative rational in lowest terms.
class Fraction {
 public:
  Fraction(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  double ToDouble() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

struct Interval {
  double a = 0.0;
  double b = 1.0;
};

// Throws kInvalidInterval unless 0 <= a < b <= 1.
void ValidateInterval(const Interval& iv);

// #{i : s_i in [a, b)} / N. Membership is decided on the double value of
// each point; grid points use the correctly rounded numerator / q.
// Throws kInvalidInterval or kEmptySequence.
Fraction IntervalCount(std::span<const double> seq, Interval iv);
Fraction IntervalCount(const GridSequence& seq, Interval iv);

// Point masses of a grid sequence: distinct points in increasing order, each
// with mass multiplicity / N.
class EmpiricalMeasure {
 public:
  struct Atom {
    std::uint64_t numerator;
    std::uint64_t multiplicity;
  };

  explicit EmpiricalMeasure(const GridSequence& seq);

  std::uint64_t denominator() const { return q_; }
  std::uint64_t source_size() const { return n_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  double Point(std::size_t i) const;
  Fraction Mass(std::size_t i) const { return {atoms_[i].multiplicity, n_}; }
  // Exact sum of all masses.
  Fraction TotalMass() const;

 private:
  std::uint64_t q_;
  std::uint64_t n_;
  std::vector<Atom> atoms_;
};

struct DiscrepancyReport {
  std::uint64_t n = 0;
  // sup_t |#{s_i < t}/N - t|
  double star_discrepancy = 0.0;
  // sup over [a, b) of |#{s_i in [a, b)}/N - (b - a)|
  double two_sided = 0.0;
  // Endpoints of an interval attaining the two-sided supremum (open or
  // closed at each end depending on whether it is an excess or a deficit).
  Interval worst_interval;
  std::optional<double> et_bound;
};

// Sorted sweep, O(N log N). Throws kEmptySequence.
DiscrepancyReport StarDiscrepancy(std::span<const double> seq);
// Same sweep in exact integer arithmetic on the numerators; each value is
// the double nearest to the exact rational result.
DiscrepancyReport StarDiscrepancy(const GridSequence& seq);

// 3 (1/(K+1) + sum_{k=1}^{K} m_k / k) where m_k = |S_k| / N is passed as
// normalized_magnitudes[k - 1]. Unclamped. Throws kInvalidArgument for K=0.
double ErdosTuranBound(std::span<const double> normalized_magnitudes);

// Computes the first `terms` Weyl sums of `seq` and returns the bound clamped
// to 1.
double ErdosTuranBound(const GridSequence& seq, std::uint64_t terms);

struct IntervalDeviation {
  Interval interval;
  Fraction fraction;
  double deviation = 0.0;  // |fraction - (b - a)|
};

struct ConvergenceRow {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  double dstar = 0.0;
  double d = 0.0;
  double et_bound = 1.0;
  // Constant polynomial: the measure is a single atom.
  bool degenerate = false;
  std::vector<IntervalDeviation> deviations;
};

inline constexpr std::uint64_t kDefaultErdosTuranTerms = 100;

// One row per prime of the schedule, in schedule order. The Erdos-Turan
// bound uses min(et_terms, q - 1) frequencies. Throws kModulusTooSmall when a
// prime is below MinModulus(p) and kInvalidInterval for a bad interval.
std::vector<ConvergenceRow> WeakConvergenceStudy(
    const PolynomialSpec& p, const PrimeSchedule& schedule,
    std::span<const Interval> intervals,
    std::uint64_t et_terms = kDefaultErdosTuranTerms);

// Columns q, N, Dstar, D, et_bound, interval_a, interval_b, deviation; one
// line per (q, interval), or one line with empty interval cells when no
// intervals were requested.
Table ConvergenceStudyTable(std::span<const ConvergenceRow> rows);

}  // namespace equidist

#endif  // EQUIDIST_DISCREPANCY_H_
