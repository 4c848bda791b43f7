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

#include "equidist/qmcint.h"

#include <charconv>
#include <cmath>
#include <numbers>

#include "equidist/error.h"
#include "equidist/parallel.h"
#include "equidist/summation.h"

namespace equidist {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Smooth step: 0 for t <= 0, 1 for t >= 1, and step(t) + step(1 - t) = 1.
double SmoothStep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double lo = std::exp(-1.0 / t);
  const double hi = std::exp(-1.0 / (1.0 - t));
  return lo / (lo + hi);
}

template <typename F>
IntegrationReport IntegrateWith(std::size_t n, F&& point,
                                const TestFunction& f) {
  if (n == 0) throw Error(ErrorCode::kEmptySequence, "sequence is empty");
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.Add(f(point(i)));
  IntegrationReport r;
  r.n = n;
  r.sample_mean = acc.Value() / static_cast<double>(n);
  r.reference = f.reference_integral;
  r.abs_error = std::abs(r.sample_mean - r.reference);
  return r;
}

bool ParseSuffix(const std::string& name, std::string_view prefix,
                 long long& value) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix)) {
    return false;
  }
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && end == last;
}

}  // namespace

IntegrationReport Integrate(std::span<const double> seq,
                            const TestFunction& f) {
  return IntegrateWith(
      seq.size(), [&](std::size_t i) { return seq[i]; }, f);
}

IntegrationReport Integrate(const GridSequence& seq, const TestFunction& f) {
  return IntegrateWith(
      seq.size(), [&](std::size_t i) { return seq.Point(i); }, f);
}

TestFunction Constant(double c) {
  TestFunction f;
  f.name = c == 1.0 ? "one" : "const";
  f.evaluator = [c](double) { return std::complex<double>(c, 0.0); };
  f.reference_integral = c;
  f.smooth = true;
  f.variation = 0.0;
  return f;
}

TestFunction ExpK(std::int64_t k) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "exp_k needs k != 0; use the constant function for k = 0");
  }
  TestFunction f;
  f.name = "exp" + std::to_string(k);
  const double kk = static_cast<double>(k);
  f.evaluator = [kk](double x) {
    const double angle = kTwoPi * kk * x;
    return std::complex<double>(std::cos(angle), std::sin(angle));
  };
  f.reference_integral = 0.0;
  f.smooth = true;
  return f;
}

TestFunction SinSquaredPi() {
  TestFunction f;
  f.name = "sin2pi";
  f.evaluator = [](double x) {
    const double s = std::sin(std::numbers::pi * x);
    return std::complex<double>(s * s, 0.0);
  };
  f.reference_integral = 0.5;
  f.smooth = true;
  f.variation = 2.0;
  return f;
}

TestFunction Indicator(double a, double b) {
  ValidateInterval({a, b});
  TestFunction f;
  f.name = "indicator";
  f.evaluator = [a, b](double x) {
    return std::complex<double>(x >= a && x < b ? 1.0 : 0.0, 0.0);
  };
  f.reference_integral = b - a;
  f.variation = (a > 0.0 ? 1.0 : 0.0) + (b < 1.0 ? 1.0 : 0.0);
  return f;
}

TestFunction Monomial(unsigned m) {
  TestFunction f;
  f.name = "x" + std::to_string(m);
  f.evaluator = [m](double x) {
    return std::complex<double>(std::pow(x, static_cast<double>(m)), 0.0);
  };
  f.reference_integral = 1.0 / (m + 1.0);
  // Smooth on [0, 1] but not periodic.
  f.smooth = m == 0;
  f.variation = m == 0 ? 0.0 : 1.0;
  return f;
}

TestFunction InverseSqrt(bool zero_at_origin) {
  TestFunction f;
  f.name = zero_at_origin ? "inv_sqrt0" : "inv_sqrt";
  f.evaluator = [zero_at_origin](double x) {
    if (x <= 0.0) {
      if (zero_at_origin) return std::complex<double>(0.0, 0.0);
      throw Error(ErrorCode::kDomain, "(1/2) x^(-1/2) is undefined at 0");
    }
    return std::complex<double>(0.5 / std::sqrt(x), 0.0);
  };
  f.reference_integral = 1.0;
  f.riemann = false;
  return f;
}

TestFunction SmoothIndicator(double a, double b, double eps) {
  ValidateInterval({a, b});
  const bool fits = eps > 0.0 && eps < (b - a) / 2.0 &&
                    (a > 0.0 ? eps < std::min(a, 1.0 - b)
                             : 2.0 * eps < 1.0 - b);
  if (!fits) {
    throw Error(ErrorCode::kBandOverflow,
                "eps = " + FormatDouble(eps) +
                    " does not leave room for the transition bands of [" +
                    FormatDouble(a) + ", " + FormatDouble(b) + ")");
  }
  TestFunction f;
  f.name = "smooth_indicator";
  const bool wraps = a == 0.0;
  f.evaluator = [a, b, eps, wraps](double x) {
    if (wraps && x > 1.0 - eps) x -= 1.0;
    const double rise = SmoothStep((x - (a - eps)) / (2.0 * eps));
    const double fall = 1.0 - SmoothStep((x - (b - eps)) / (2.0 * eps));
    return std::complex<double>(rise * fall, 0.0);
  };
  f.reference_integral = b - a;
  f.smooth = true;
  f.variation = 2.0;
  return f;
}

std::vector<TestFunction> Registry(const RegistryOptions& options) {
  std::vector<TestFunction> out;
  out.push_back(Constant(1.0));
  for (std::int64_t k : options.frequencies) {
    if (k != 0) out.push_back(ExpK(k));
  }
  out.push_back(SinSquaredPi());
  out.push_back(Indicator(options.interval.a, options.interval.b));
  out.push_back(
      SmoothIndicator(options.interval.a, options.interval.b, options.eps));
  for (unsigned m : options.monomial_degrees) out.push_back(Monomial(m));
  out.push_back(InverseSqrt(false));
  out.push_back(InverseSqrt(true));
  return out;
}

TestFunction FunctionByName(const std::string& name,
                            const RegistryOptions& options) {
  long long n = 0;
  if (name == "one" || name == "const") return Constant(1.0);
  if (name == "sin2pi") return SinSquaredPi();
  if (name == "indicator") {
    return Indicator(options.interval.a, options.interval.b);
  }
  if (name == "smooth_indicator") {
    return SmoothIndicator(options.interval.a, options.interval.b,
                           options.eps);
  }
  if (name == "inv_sqrt") return InverseSqrt(false);
  if (name == "inv_sqrt0") return InverseSqrt(true);
  if (name == "exp") {
    return ExpK(options.frequencies.empty() ? 1 : options.frequencies.front());
  }
  if (ParseSuffix(name, "exp", n)) return ExpK(n);
  if (ParseSuffix(name, "x", n) && n >= 0) {
    return Monomial(static_cast<unsigned>(n));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown function '" + name + "'");
}

std::vector<IntegrationRow> ConvergenceTable(const PolynomialSpec& p,
                                             const PrimeSchedule& schedule,
                                             const TestFunction& f) {
  const auto& qs = schedule.q_values();
  std::vector<ReducedPolynomial> reduced;
  reduced.reserve(qs.size());
  for (std::uint64_t q : qs) reduced.push_back(ReducePolynomial(p, q));

  std::vector<IntegrationRow> rows(qs.size());
  ParallelFor(qs.size(), [&](std::size_t idx) {
    const GridSequence seq = GenerateSequence(reduced[idx]);
    IntegrationRow& row = rows[idx];
    row.q = qs[idx];
    row.f_name = f.name;
    row.report = Integrate(seq, f);
    row.report.dstar_at_n = StarDiscrepancy(seq).star_discrepancy;
  });
  return rows;
}

Table IntegrationTable(std::span<const IntegrationRow> rows) {
  Table t;
  t.columns = {"q",         "N",         "f_name", "mean_re", "mean_im",
               "reference", "abs_error", "dstar"};
  for (const IntegrationRow& row : rows) {
    const IntegrationReport& r = row.report;
    t.rows.push_back({row.q, r.n, row.f_name, r.sample_mean.real(),
                      r.sample_mean.imag(), r.reference.real(), r.abs_error,
                      r.dstar_at_n ? Cell(*r.dstar_at_n) : Cell()});
  }
  return t;
}

}  // namespace equidist
