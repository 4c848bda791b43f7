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

#include "equidist/expsum.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "equidist/error.h"
#include "equidist/modular.h"
#include "equidist/parallel.h"
#include "equidist/summation.h"

namespace equidist {
namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

// Below 2^32 the product of two residues fits in 64 bits.
inline std::uint64_t ResidueProduct(std::uint64_t a, std::uint64_t b,
                                    std::uint64_t q) {
  if (q <= (std::uint64_t{1} << 32)) return a * b % q;
  return MulMod(a, b, q);
}

WeylSumReport MakeReport(std::int64_t k, std::complex<double> sum,
                         std::size_t n) {
  WeylSumReport r;
  r.k = k;
  r.sum = sum;
  r.magnitude = std::abs(sum);
  r.normalized_magnitude = r.magnitude / static_cast<double>(n);
  return r;
}

void CheckNonEmpty(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
}

void CheckNonZero(std::int64_t k) {
  if (k == 0) {
    throw Error(ErrorCode::kZeroFrequency, "frequency k must be nonzero");
  }
}

void CheckFrequency(std::uint64_t k, std::uint64_t q) {
  if (k < 1 || k >= q) {
    throw Error(ErrorCode::kFrequencyOutOfRange,
                "frequency " + std::to_string(k) + " is outside [1, " +
                    std::to_string(q - 1) + "]");
  }
}

}  // namespace

bool WeylSumReport::WithinBound() const {
  return !bound || magnitude <= *bound + kWeilTolerance;
}

RootsOfUnity::RootsOfUnity(std::uint64_t q) : q_(q) {
  if (q == 0) throw Error(ErrorCode::kInvalidArgument, "modulus is zero");
  if (q <= kRootTableLimit) {
    table_.resize(q);
    for (std::uint64_t r = 0; r < q; ++r) table_[r] = Compute(r);
  }
}

std::complex<double> RootsOfUnity::Compute(std::uint64_t r) const {
  const long double angle =
      kTwoPi * (static_cast<long double>(r) / static_cast<long double>(q_));
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

CompleteSumKernel::CompleteSumKernel(const ReducedPolynomial& rp)
    : rp_(rp), roots_(rp.modulus()), values_(rp.modulus()) {
  for (std::uint64_t j = 0; j < values_.size(); ++j) {
    values_[j] = EvalMod(rp_, j);
  }
}

std::complex<double> CompleteSumKernel::Sum(std::uint64_t k) const {
  const std::uint64_t q = rp_.modulus();
  k %= q;
  ComplexCompensatedSum acc;
  for (std::uint64_t v : values_) acc.Add(roots_(ResidueProduct(k, v, q)));
  return acc.Value();
}

std::complex<double> CompleteExpSum(const ReducedPolynomial& rp,
                                    std::uint64_t k) {
  CheckFrequency(k, rp.modulus());
  return CompleteSumKernel(rp).Sum(k);
}

WeylSumReport WeylSum(std::span<const double> seq, std::int64_t k) {
  CheckNonEmpty(seq.size());
  CheckNonZero(k);
  ComplexCompensatedSum acc;
  const long double kk = static_cast<long double>(k);
  for (double s : seq) {
    const long double x = kk * s;
    const long double angle = kTwoPi * (x - std::floor(x));
    acc.Add(static_cast<double>(std::cos(angle)),
            static_cast<double>(std::sin(angle)));
  }
  return MakeReport(k, acc.Value(), seq.size());
}

std::vector<WeylSumReport> WeylSums(const GridSequence& seq,
                                    std::span<const std::int64_t> ks) {
  CheckNonEmpty(seq.size());
  for (std::int64_t k : ks) CheckNonZero(k);
  const std::uint64_t q = seq.denominator();
  const RootsOfUnity roots(q);
  std::vector<WeylSumReport> out(ks.size());
  ParallelFor(
      ks.size(),
      [&](std::size_t idx) {
        const std::uint64_t kr = ReduceSigned(ks[idx], q);
        ComplexCompensatedSum acc;
        for (std::uint64_t n : seq.numerators()) {
          acc.Add(roots(ResidueProduct(kr, n, q)));
        }
        out[idx] = MakeReport(ks[idx], acc.Value(), seq.size());
      },
      std::max<std::size_t>(1, (1u << 22) / std::max<std::size_t>(
                                                 1, seq.size())));
  return out;
}

WeylSumReport WeylSum(const GridSequence& seq, std::int64_t k) {
  return WeylSums(seq, std::span<const std::int64_t>(&k, 1)).front();
}

double WeilBound(int degree, std::uint64_t q) {
  return (degree - 1) * std::sqrt(static_cast<double>(q)) + 1.0;
}

std::vector<WeylSumReport> WeilBoundCheck(const ReducedPolynomial& rp,
                                          std::span<const std::uint64_t> ks) {
  const int d = rp.degree();
  const std::uint64_t q = rp.modulus();
  if (d < 1 || rp.leading() == 0) {
    throw Error(ErrorCode::kDegeneratePolynomial,
                "Weil bound needs degree >= 1 with nonzero leading "
                "coefficient mod q");
  }
  if (std::gcd(q, static_cast<std::uint64_t>(d)) != 1) {
    throw Error(ErrorCode::kModulusDegreeClash,
                "gcd(q, d) != 1 for q = " + std::to_string(q) +
                    ", d = " + std::to_string(d));
  }
  for (std::uint64_t k : ks) CheckFrequency(k, q);

  const CompleteSumKernel kernel(rp);
  const double bound = WeilBound(d, q);
  std::vector<WeylSumReport> out(ks.size());
  ParallelFor(
      ks.size(),
      [&](std::size_t idx) {
        WeylSumReport r = MakeReport(static_cast<std::int64_t>(ks[idx]),
                                     kernel.Sum(ks[idx]), q);
        r.bound = bound;
        r.margin = bound - r.magnitude;
        out[idx] = r;
      },
      std::max<std::size_t>(1, (1u << 20) / q));
  return out;
}

std::vector<std::complex<double>> AllKScan(const ReducedPolynomial& rp,
                                           std::uint64_t scan_limit) {
  const std::uint64_t q = rp.modulus();
  if (q > scan_limit) {
    throw Error(ErrorCode::kScanLimitExceeded,
                "q = " + std::to_string(q) + " exceeds the scan limit " +
                    std::to_string(scan_limit));
  }
  std::vector<std::uint64_t> histogram(q, 0);
  for (std::uint64_t j = 0; j < q; ++j) ++histogram[EvalMod(rp, j)];

  const RootsOfUnity roots(q);
  std::vector<std::complex<double>> scan(q);
  scan[0] = {static_cast<double>(q), 0.0};
  ParallelFor(
      q - 1,
      [&](std::size_t idx) {
        const std::uint64_t k = idx + 1;
        ComplexCompensatedSum acc;
        std::uint64_t r = 0;  // k * v mod q
        for (std::uint64_t v = 0; v < q; ++v) {
          if (histogram[v] != 0) {
            acc.Add(static_cast<double>(histogram[v]) * roots(r));
          }
          r = AddMod(r, k, q);
        }
        scan[k] = acc.Value();
      },
      64);
  return scan;
}

bool ConjugateFrequencyCheck(std::span<const std::complex<double>> scan,
                             double tolerance) {
  const std::size_t q = scan.size();
  for (std::size_t k = 1; k < q; ++k) {
    const std::complex<double> expected = std::conj(scan[k]);
    const std::complex<double> mirror = scan[q - k];
    if (!(std::abs(mirror.real() - expected.real()) <= tolerance &&
          std::abs(mirror.imag() - expected.imag()) <= tolerance)) {
      return false;
    }
  }
  return true;
}

FourierDecayReport FourierDecayCheck(const TestFunction& g, std::uint64_t q,
                                     double H) {
  if (!g.smooth) {
    throw Error(ErrorCode::kNonSmoothFunction,
                "'" + g.name + "' is not flagged smooth");
  }
  if (q < 16) {
    throw Error(ErrorCode::kInvalidArgument, "decay grid needs q >= 16");
  }
  if (!(H > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "decay constant H must be > 0");
  }
  std::vector<std::complex<double>> samples(q);
  for (std::uint64_t j = 0; j < q; ++j) {
    samples[j] = g(static_cast<double>(j) / static_cast<double>(q));
  }
  const RootsOfUnity roots(q);
  const auto half = static_cast<std::int64_t>(q / 2);

  FourierDecayReport report;
  report.H = H;
  for (std::int64_t k = -half; k <= half; ++k) {
    const std::uint64_t step = ReduceSigned(-k, q);
    ComplexCompensatedSum acc;
    std::uint64_t r = 0;
    for (std::uint64_t j = 0; j < q; ++j) {
      acc.Add(samples[j] * roots(r));
      r = AddMod(r, step, q);
    }
    const std::complex<double> coeff = acc.Value() / static_cast<double>(q);
    report.coefficients.emplace(k, coeff);
    if (k != 0) {
      const double kk = static_cast<double>(k);
      if (std::abs(coeff) > H / (kk * kk)) report.violations.push_back(k);
    }
  }
  return report;
}

Table WeylReportTable(std::span<const WeylSumReport> reports) {
  Table t;
  t.columns = {"k", "re", "im", "magnitude", "bound", "margin"};
  for (const WeylSumReport& r : reports) {
    t.rows.push_back({r.k, r.sum.real(), r.sum.imag(), r.magnitude,
                      r.bound ? Cell(*r.bound) : Cell(),
                      r.margin ? Cell(*r.margin) : Cell()});
  }
  return t;
}

}  // namespace equidist
