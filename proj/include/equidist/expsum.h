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

#ifndef EQUIDIST_EXPSUM_H_
#define EQUIDIST_EXPSUM_H_

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "equidist/polyseq.h"
#include "equidist/table.h"
#include "equidist/test_function.h"

namespace equidist {

// Slack added to the Weil bound before an instance counts as a violation.
inline constexpr double kWeilTolerance = 1e-6;
// Moduli up to this size get a precomputed root-of-unity table.
inline constexpr std::uint64_t kRootTableLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultScanLimit = 4096;

struct WeylSumReport {
  std::int64_t k = 0;
  std::complex<double> sum;
  double magnitude = 0.0;
  double normalized_magnitude = 0.0;
  std::optional<double> bound;
  std::optional<double> margin;

  // True when no bound applies or |sum| <= bound + kWeilTolerance.
  bool WithinBound() const;
};

struct FourierDecayReport {
  std::map<std::int64_t, std::complex<double>> coefficients;
  double H = 0.0;
  // Frequencies k != 0 with |g^(k)| > H / k^2.
  std::vector<std::int64_t> violations;
};

// e^{2 pi i r / q} for residues r in [0, q). Immutable after construction,
// so one instance can be shared across threads.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::complex<double> operator()(std::uint64_t r) const {
    return table_.empty() ? Compute(r) : table_[r];
  }

 private:
  std::complex<double> Compute(std::uint64_t r) const;

  std::uint64_t q_;
  std::vector<std::complex<double>> table_;
};

// Complete sums over F_q for one reduced polynomial. Caches p_q(j) for
// j = 0..q-1 so repeated frequencies cost one pass each; safe to query from
// several threads.
class CompleteSumKernel {
 public:
  explicit CompleteSumKernel(const ReducedPolynomial& rp);

  const ReducedPolynomial& polynomial() const { return rp_; }
  // sum_{j=0}^{q-1} e^{2 pi i (k p_q(j) mod q) / q} for any residue k.
  std::complex<double> Sum(std::uint64_t k) const;

 private:
  ReducedPolynomial rp_;
  RootsOfUnity roots_;
  std::vector<std::uint64_t> values_;
};

// Throws kFrequencyOutOfRange unless 1 <= k <= q - 1.
std::complex<double> CompleteExpSum(const ReducedPolynomial& rp,
                                    std::uint64_t k);

// sum_i e^{2 pi i k s_i}. Throws kEmptySequence or kZeroFrequency.
WeylSumReport WeylSum(std::span<const double> seq, std::int64_t k);
// Grid inputs take their phases from the exact residues k * n_i mod q.
WeylSumReport WeylSum(const GridSequence& seq, std::int64_t k);
std::vector<WeylSumReport> WeylSums(const GridSequence& seq,
                                    std::span<const std::int64_t> ks);

// Checks |S(k)| <= (d - 1) sqrt(q) + 1 for every k. Violations are recorded
// in the reports, not filtered. Throws kDegeneratePolynomial (d == 0 or
// t_d == 0), kModulusDegreeClash (gcd(q, d) != 1) or kFrequencyOutOfRange.
std::vector<WeylSumReport> WeilBoundCheck(const ReducedPolynomial& rp,
                                          std::span<const std::uint64_t> ks);
double WeilBound(int degree, std::uint64_t q);

// S(k) for k = 0..q-1 as the DFT of the value histogram of p_q.
// Throws kScanLimitExceeded when q > scan_limit.
std::vector<std::complex<double>> AllKScan(
    const ReducedPolynomial& rp, std::uint64_t scan_limit = kDefaultScanLimit);

// S(q - k) == conj(S(k)) for k = 1..q-1 within `tolerance` per component.
bool ConjugateFrequencyCheck(std::span<const std::complex<double>> scan,
                             double tolerance = 1e-9);

// g^(k) = (1/q) sum_j g(j/q) e^{-2 pi i k j / q} for |k| <= q/2.
// Throws kNonSmoothFunction unless g.smooth, kInvalidArgument for q < 16 or
// H <= 0.
FourierDecayReport FourierDecayCheck(const TestFunction& g, std::uint64_t q,
                                     double H);

// Columns k, re, im, magnitude, bound, margin.
Table WeylReportTable(std::span<const WeylSumReport> reports);

}  // namespace equidist

#endif  // EQUIDIST_EXPSUM_H_
