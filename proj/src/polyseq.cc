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

#include "equidist/polyseq.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "equidist/error.h"
#include "equidist/modular.h"
#include "equidist/primes.h"

namespace equidist {
namespace {

std::uint64_t Pow10(std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= 10;
  return r;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t LargestPrimeFactor(std::uint64_t n) {
  std::uint64_t largest = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    while (n % f == 0) {
      largest = f;
      n /= f;
    }
  }
  return n > 1 ? n : largest;
}

}  // namespace

ExactDecimal ExactDecimal::Parse(std::string_view text) {
  const std::string_view s = Trim(text);
  const std::string quoted = "'" + std::string(s) + "'";
  if (s.empty()) throw Error(ErrorCode::kParse, "empty decimal");
  if (s.front() == '-') {
    throw Error(ErrorCode::kRange, "coefficient " + quoted +
                                       " is outside [0, 1)");
  }
  std::size_t pos = 0;
  bool integer_nonzero = false;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    integer_nonzero |= s[pos] != '0';
    ++pos;
    ++digits;
  }
  std::string_view fraction;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    fraction = s.substr(start, pos - start);
    digits += fraction.size();
  }
  if (pos != s.size() || digits == 0) {
    throw Error(ErrorCode::kParse, "malformed decimal " + quoted);
  }
  if (integer_nonzero) {
    throw Error(ErrorCode::kRange, "coefficient " + quoted +
                                       " is outside [0, 1)");
  }
  while (!fraction.empty() && fraction.back() == '0') fraction.remove_suffix(1);
  if (fraction.size() > kMaxExponent) {
    throw Error(ErrorCode::kParse, "decimal " + quoted + " has more than " +
                                       std::to_string(kMaxExponent) +
                                       " fractional digits");
  }
  ExactDecimal d;
  d.exponent = static_cast<std::uint32_t>(fraction.size());
  for (char c : fraction) d.mantissa = d.mantissa * 10 + (c - '0');
  return d;
}

std::uint64_t ExactDecimal::Scale() const { return Pow10(exponent); }

double ExactDecimal::ToDouble() const {
  return static_cast<double>(static_cast<long double>(mantissa) /
                             static_cast<long double>(Scale()));
}

std::string ExactDecimal::ToString() const {
  if (exponent == 0) return "0";
  std::string digits = std::to_string(mantissa);
  digits.insert(0, exponent - digits.size(), '0');
  return "0." + digits;
}

PolynomialSpec::PolynomialSpec(std::vector<ExactDecimal> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial has no coefficients");
  }
  for (const ExactDecimal& a : coeffs_) {
    if (a.exponent > ExactDecimal::kMaxExponent || a.mantissa >= a.Scale()) {
      throw Error(ErrorCode::kRange, "coefficient outside [0, 1)");
    }
  }
  if (coeffs_.size() > 1 && coeffs_.back().IsZero()) {
    throw Error(ErrorCode::kInvalidArgument,
                "leading coefficient of a non-constant polynomial is zero");
  }
}

PolynomialSpec PolynomialSpec::Parse(std::string_view text) {
  std::vector<ExactDecimal> coeffs;
  while (true) {
    const std::size_t comma = text.find(',');
    coeffs.push_back(ExactDecimal::Parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PolynomialSpec(std::move(coeffs));
}

std::string PolynomialSpec::ToString() const {
  std::string out;
  for (std::size_t l = 0; l < coeffs_.size(); ++l) {
    if (l > 0) out += ',';
    out += coeffs_[l].ToString();
  }
  return out;
}

ReducedPolynomial ReducedPolynomial::FromCoefficients(
    std::uint64_t q, std::vector<std::uint64_t> t) {
  if (!IsPrime(q)) {
    throw Error(ErrorCode::kNotPrime, "q must be prime (got " +
                                          std::to_string(q) + ")");
  }
  if (t.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial has no coefficients");
  }
  for (std::uint64_t c : t) {
    if (c >= q) {
      throw Error(ErrorCode::kRange, "coefficient " + std::to_string(c) +
                                         " is not below q = " +
                                         std::to_string(q));
    }
  }
  return ReducedPolynomial(q, std::move(t));
}

std::uint64_t MinModulus(const PolynomialSpec& p) {
  const int d = p.degree();
  if (d == 0) return 2;
  const ExactDecimal& lead = p.coefficients().back();
  // q a_d > 1  <=>  q > floor(10^m / A_d).
  const std::uint64_t floor_inverse = lead.Scale() / lead.mantissa;
  const std::uint64_t lpf = LargestPrimeFactor(static_cast<std::uint64_t>(d));
  return NextPrime(std::max(floor_inverse, lpf));
}

ReducedPolynomial ReducePolynomial(const PolynomialSpec& p, std::uint64_t q) {
  if (!IsPrime(q)) {
    throw Error(ErrorCode::kNotPrime, "q must be prime (got " +
                                          std::to_string(q) + ")");
  }
  const std::uint64_t min_q = MinModulus(p);
  if (q < min_q) {
    throw Error(ErrorCode::kModulusTooSmall,
                "q = " + std::to_string(q) + " is below the minimum modulus " +
                    std::to_string(min_q) + " for " + p.ToString());
  }
  std::vector<std::uint64_t> t;
  t.reserve(p.coefficients().size());
  for (const ExactDecimal& a : p.coefficients()) {
    t.push_back(static_cast<std::uint64_t>(static_cast<u128>(a.mantissa) * q /
                                           a.Scale()));
  }
  return ReducedPolynomial::FromCoefficients(q, std::move(t));
}

std::uint64_t EvalMod(const ReducedPolynomial& rp, std::uint64_t i) {
  const std::uint64_t q = rp.modulus();
  const auto t = rp.coefficients();
  const std::uint64_t x = i % q;
  std::uint64_t acc = t.back();
  for (std::size_t l = t.size() - 1; l-- > 0;) {
    acc = AddMod(MulMod(acc, x, q), t[l], q);
  }
  return acc;
}

GridSequence GridSequence::FromNumerators(
    std::uint64_t denominator, std::vector<std::uint64_t> numerators) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "grid denominator is zero");
  }
  for (std::uint64_t n : numerators) {
    if (n >= denominator) {
      throw Error(ErrorCode::kRange, "grid numerator " + std::to_string(n) +
                                         " is not below " +
                                         std::to_string(denominator));
    }
  }
  return GridSequence(denominator, std::move(numerators), ExplicitOrigin{});
}

std::vector<double> GridSequence::ToReals() const {
  std::vector<double> out(numerators_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Point(i);
  return out;
}

GridSequence GenerateSequence(const ReducedPolynomial& rp) {
  const std::uint64_t q = rp.modulus();
  std::vector<std::uint64_t> numerators(q);
  for (std::uint64_t i = 1; i <= q; ++i) numerators[i - 1] = EvalMod(rp, i);
  return GridSequence(q, std::move(numerators), PolynomialOrigin{rp});
}

RealSequence LinearSequence(double alpha, std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sequence length must be >= 1");
  }
  RealSequence seq{std::vector<double>(n), LinearOrigin{alpha}};
  const long double a = alpha;
  for (std::size_t i = 1; i <= n; ++i) {
    const long double x = static_cast<long double>(i) * a;
    double frac = static_cast<double>(x - std::floor(x));
    if (frac >= 1.0) frac = 0.0;
    seq.points[i - 1] = frac;
  }
  return seq;
}

RealSequence LoadSequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  RealSequence seq{{}, FileOrigin{path}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = Trim(line);
    if (s.empty() || s.front() == '#') continue;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(line_no) +
                                         ": cannot parse '" + std::string(s) +
                                         "'");
    }
    if (!(v >= 0.0 && v < 1.0)) {
      throw Error(ErrorCode::kRange, path + ":" + std::to_string(line_no) +
                                         ": value " + std::string(s) +
                                         " is outside [0, 1)");
    }
    seq.points.push_back(v);
  }
  if (seq.points.empty()) {
    throw Error(ErrorCode::kEmptySequence, path + " contains no values");
  }
  return seq;
}

}  // namespace equidist
