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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "equidist/error.h"
#include "equidist/expsum.h"
#include "equidist/modular.h"
#include "equidist/parallel.h"
#include "equidist/summation.h"

namespace equidist {
namespace {

using i128 = __int128;

u128 Gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Nearest double to num / den for 0 <= num.
double RatioToDouble(u128 num, u128 den) {
  const u128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr u128 kExact = u128{1} << 53;
  if (num < kExact && den < kExact) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

Interval WorstInterval(double x_plus, double x_minus, std::size_t i_plus,
                       std::size_t i_minus) {
  // i_minus <= i_plus: excess on [x_(i_minus), x_(i_plus)];
  // otherwise deficit on (x_(i_plus), x_(i_minus)).
  return i_minus <= i_plus ? Interval{x_minus, x_plus}
                           : Interval{x_plus, x_minus};
}

}  // namespace

Fraction::Fraction(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

double Fraction::ToDouble() const { return RatioToDouble(num_, den_); }

void ValidateInterval(const Interval& iv) {
  if (!(iv.a >= 0.0 && iv.a < iv.b && iv.b <= 1.0)) {
    throw Error(ErrorCode::kInvalidInterval,
                "interval [" + FormatDouble(iv.a) + ", " + FormatDouble(iv.b) +
                    ") is not within 0 <= a < b <= 1");
  }
}

Fraction IntervalCount(std::span<const double> seq, Interval iv) {
  ValidateInterval(iv);
  if (seq.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  const auto count = std::count_if(seq.begin(), seq.end(), [&](double s) {
    return s >= iv.a && s < iv.b;
  });
  return {static_cast<std::uint64_t>(count), seq.size()};
}

Fraction IntervalCount(const GridSequence& seq, Interval iv) {
  ValidateInterval(iv);
  if (seq.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double s = seq.Point(i);
    count += (s >= iv.a && s < iv.b) ? 1 : 0;
  }
  return {count, seq.size()};
}

EmpiricalMeasure::EmpiricalMeasure(const GridSequence& seq)
    : q_(seq.denominator()), n_(seq.size()) {
  if (seq.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  std::vector<std::uint64_t> sorted(seq.numerators().begin(),
                                    seq.numerators().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t v : sorted) {
    if (!atoms_.empty() && atoms_.back().numerator == v) {
      ++atoms_.back().multiplicity;
    } else {
      atoms_.push_back({v, 1});
    }
  }
}

double EmpiricalMeasure::Point(std::size_t i) const {
  return static_cast<double>(atoms_[i].numerator) / static_cast<double>(q_);
}

Fraction EmpiricalMeasure::TotalMass() const {
  std::uint64_t total = 0;
  for (const Atom& a : atoms_) total += a.multiplicity;
  return {total, n_};
}

DiscrepancyReport StarDiscrepancy(std::span<const double> seq) {
  if (seq.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  std::vector<double> x(seq.begin(), seq.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d_plus = -1.0;
  double d_minus = -1.0;
  std::size_t i_plus = 0;
  std::size_t i_minus = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double above = static_cast<double>(i + 1) / n - x[i];
    const double below = x[i] - static_cast<double>(i) / n;
    if (above > d_plus) {
      d_plus = above;
      i_plus = i;
    }
    if (below > d_minus) {
      d_minus = below;
      i_minus = i;
    }
  }
  DiscrepancyReport r;
  r.n = x.size();
  r.star_discrepancy = std::max(d_plus, d_minus);
  r.two_sided = d_plus + d_minus;
  r.worst_interval = WorstInterval(x[i_plus], x[i_minus], i_plus, i_minus);
  return r;
}

DiscrepancyReport StarDiscrepancy(const GridSequence& seq) {
  if (seq.empty()) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  std::vector<std::uint64_t> x(seq.numerators().begin(),
                               seq.numerators().end());
  std::sort(x.begin(), x.end());
  const i128 n = static_cast<i128>(x.size());
  const i128 q = static_cast<i128>(seq.denominator());
  // Candidates are scaled by N q: i q - x_i N and x_i N - (i - 1) q.
  i128 best_plus = 0;
  i128 best_minus = 0;
  std::size_t i_plus = 0;
  std::size_t i_minus = 0;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const i128 xi = static_cast<i128>(x[i]);
    const i128 above = static_cast<i128>(i + 1) * q - xi * n;
    const i128 below = xi * n - static_cast<i128>(i) * q;
    if (first || above > best_plus) {
      best_plus = above;
      i_plus = i;
    }
    if (first || below > best_minus) {
      best_minus = below;
      i_minus = i;
    }
    first = false;
  }
  // best_plus > 0 (i = N term) and best_minus >= 0 (i = 1 term).
  const u128 scale = static_cast<u128>(n * q);
  DiscrepancyReport r;
  r.n = x.size();
  r.star_discrepancy =
      RatioToDouble(static_cast<u128>(std::max(best_plus, best_minus)), scale);
  r.two_sided = RatioToDouble(static_cast<u128>(best_plus + best_minus), scale);
  const double qd = static_cast<double>(seq.denominator());
  r.worst_interval =
      WorstInterval(static_cast<double>(x[i_plus]) / qd,
                    static_cast<double>(x[i_minus]) / qd, i_plus, i_minus);
  return r;
}

double ErdosTuranBound(std::span<const double> normalized_magnitudes) {
  const std::size_t terms = normalized_magnitudes.size();
  if (terms == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Erdos-Turan bound needs at least one frequency");
  }
  CompensatedSum acc;
  acc.Add(1.0 / static_cast<double>(terms + 1));
  for (std::size_t k = 1; k <= terms; ++k) {
    acc.Add(normalized_magnitudes[k - 1] / static_cast<double>(k));
  }
  return 3.0 * acc.Value();
}

double ErdosTuranBound(const GridSequence& seq, std::uint64_t terms) {
  std::vector<std::int64_t> ks(terms);
  std::iota(ks.begin(), ks.end(), std::int64_t{1});
  const std::vector<WeylSumReport> sums = WeylSums(seq, ks);
  std::vector<double> mags(sums.size());
  std::transform(sums.begin(), sums.end(), mags.begin(),
                 [](const WeylSumReport& r) { return r.normalized_magnitude; });
  return std::min(1.0, ErdosTuranBound(mags));
}

std::vector<ConvergenceRow> WeakConvergenceStudy(
    const PolynomialSpec& p, const PrimeSchedule& schedule,
    std::span<const Interval> intervals, std::uint64_t et_terms) {
  for (const Interval& iv : intervals) ValidateInterval(iv);
  if (et_terms == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Erdos-Turan bound needs at least one frequency");
  }
  const auto& qs = schedule.q_values();
  // Fail before any work if a modulus is too small.
  std::vector<ReducedPolynomial> reduced;
  reduced.reserve(qs.size());
  for (std::uint64_t q : qs) reduced.push_back(ReducePolynomial(p, q));

  std::vector<ConvergenceRow> rows(qs.size());
  ParallelFor(qs.size(), [&](std::size_t idx) {
    const GridSequence seq = GenerateSequence(reduced[idx]);
    const DiscrepancyReport disc = StarDiscrepancy(seq);
    ConvergenceRow& row = rows[idx];
    row.q = qs[idx];
    row.n = seq.size();
    row.dstar = disc.star_discrepancy;
    row.d = disc.two_sided;
    row.degenerate = p.degree() == 0;
    row.et_bound = ErdosTuranBound(seq, std::min(et_terms, qs[idx] - 1));
    for (const Interval& iv : intervals) {
      const Fraction f = IntervalCount(seq, iv);
      row.deviations.push_back(
          {iv, f, std::abs(f.ToDouble() - (iv.b - iv.a))});
    }
  });
  return rows;
}

Table ConvergenceStudyTable(std::span<const ConvergenceRow> rows) {
  Table t;
  t.columns = {"q",        "N",          "Dstar",      "D",
               "et_bound", "interval_a", "interval_b", "deviation"};
  for (const ConvergenceRow& row : rows) {
    const Cell et = row.degenerate ? Cell(std::string("degenerate"))
                                   : Cell(row.et_bound);
    if (row.deviations.empty()) {
      t.rows.push_back({row.q, row.n, row.dstar, row.d, et, {}, {}, {}});
    }
    for (const IntervalDeviation& dev : row.deviations) {
      t.rows.push_back({row.q, row.n, row.dstar, row.d, et, dev.interval.a,
                        dev.interval.b, dev.deviation});
    }
  }
  return t;
}

}  // namespace equidist
