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

#ifndef EQUIDIST_POLYSEQ_H_
#define EQUIDIST_POLYSEQ_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace equidist {

// A decimal in [0, 1) held exactly as mantissa / 10^exponent.
struct ExactDecimal {
  static constexpr std::uint32_t kMaxExponent = 19;

  std::uint64_t mantissa = 0;
  std::uint32_t exponent = 0;

  // Accepts plain decimal notation ("0.15", ".5", "0"). Throws kParse on
  // malformed text and kRange for values outside [0, 1).
  static ExactDecimal Parse(std::string_view text);

  std::uint64_t Scale() const;  // 10^exponent
  bool IsZero() const { return mantissa == 0; }
  double ToDouble() const;
  std::string ToString() const;

  friend bool operator==(const ExactDecimal&, const ExactDecimal&) = default;
};

// Real polynomial a_0 + a_1 x + ... + a_d x^d with every a_l in [0, 1).
class PolynomialSpec {
 public:
  // Throws kInvalidArgument if empty or if the leading coefficient is zero
  // for a non-constant polynomial.
  explicit PolynomialSpec(std::vector<ExactDecimal> coefficients);

  // "a_0,a_1,...,a_d"
  static PolynomialSpec Parse(std::string_view text);

  const std::vector<ExactDecimal>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::string ToString() const;

 private:
  std::vector<ExactDecimal> coeffs_;
};

// Integer polynomial t_0 + ... + t_d x^d over the prime field of order q.
class ReducedPolynomial {
 public:
  // Throws kNotPrime unless q is prime, kRange unless every t_l < q, and
  // kInvalidArgument when `t` is empty.
  static ReducedPolynomial FromCoefficients(std::uint64_t q,
                                            std::vector<std::uint64_t> t);

  std::uint64_t modulus() const { return q_; }
  std::span<const std::uint64_t> coefficients() const { return t_; }
  int degree() const { return static_cast<int>(t_.size()) - 1; }
  std::uint64_t leading() const { return t_.back(); }

  friend bool operator==(const ReducedPolynomial&,
                         const ReducedPolynomial&) = default;

 private:
  ReducedPolynomial(std::uint64_t q, std::vector<std::uint64_t> t)
      : q_(q), t_(std::move(t)) {}

  std::uint64_t q_;
  std::vector<std::uint64_t> t_;
};

// Smallest prime q such that every prime q' >= q gives a reduction whose
// leading coefficient floor(q' a_d) is nonzero and with gcd(q', d) = 1.
// Concretely: the smallest prime exceeding both 1/a_d and every prime factor
// of d. Returns 2 for constants.
std::uint64_t MinModulus(const PolynomialSpec& p);

// t_l = floor(q a_l), exact. Throws kNotPrime or kModulusTooSmall.
ReducedPolynomial ReducePolynomial(const PolynomialSpec& p, std::uint64_t q);

// p_q(i) mod q by Horner's scheme in 128-bit intermediates.
std::uint64_t EvalMod(const ReducedPolynomial& rp, std::uint64_t i);

struct PolynomialOrigin {
  ReducedPolynomial polynomial;
};
struct LinearOrigin {
  double alpha;
};
struct FileOrigin {
  std::string path;
};
struct ExplicitOrigin {};

using Provenance =
    std::variant<ExplicitOrigin, PolynomialOrigin, LinearOrigin, FileOrigin>;

// Points numerators[i] / denominator, all in [0, 1).
class GridSequence {
 public:
  // Throws kInvalidArgument for a zero denominator and kRange for a
  // numerator >= denominator.
  static GridSequence FromNumerators(std::uint64_t denominator,
                                     std::vector<std::uint64_t> numerators);

  std::uint64_t denominator() const { return q_; }
  std::span<const std::uint64_t> numerators() const { return numerators_; }
  std::size_t size() const { return numerators_.size(); }
  bool empty() const { return numerators_.empty(); }
  const Provenance& provenance() const { return provenance_; }

  double Point(std::size_t i) const {
    return static_cast<double>(numerators_[i]) / static_cast<double>(q_);
  }
  std::vector<double> ToReals() const;

 private:
  friend GridSequence GenerateSequence(const ReducedPolynomial&);
  GridSequence(std::uint64_t q, std::vector<std::uint64_t> numerators,
               Provenance provenance)
      : q_(q),
        numerators_(std::move(numerators)),
        provenance_(std::move(provenance)) {}

  std::uint64_t q_;
  std::vector<std::uint64_t> numerators_;
  Provenance provenance_;
};

struct RealSequence {
  std::vector<double> points;
  Provenance provenance;
};

// numerators[i - 1] = p_q(i) mod q for i = 1..q.
GridSequence GenerateSequence(const ReducedPolynomial& rp);

// frac(i * alpha) for i = 1..n. Throws kInvalidArgument when n == 0.
RealSequence LinearSequence(double alpha, std::size_t n);

// One decimal in [0, 1) per line; blank lines and lines starting with '#'
// are skipped. Throws kParse (with the line number), kRange, or
// kEmptySequence.
RealSequence LoadSequence(const std::string& path);

}  // namespace equidist

#endif  // EQUIDIST_POLYSEQ_H_
