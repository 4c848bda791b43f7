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

#ifndef EQUIDIST_QMCINT_H_
#define EQUIDIST_QMCINT_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equidist/discrepancy.h"
#include "equidist/polyseq.h"
#include "equidist/primes.h"
#include "equidist/table.h"
#include "equidist/test_function.h"

namespace equidist {

struct IntegrationReport {
  std::uint64_t n = 0;
  std::complex<double> sample_mean;
  std::complex<double> reference;
  double abs_error = 0.0;
  std::optional<double> dstar_at_n;
};

// (1/N) sum f(s_i), compensated. Throws kEmptySequence; evaluator errors
// (kDomain) propagate.
IntegrationReport Integrate(std::span<const double> seq, const TestFunction& f);
IntegrationReport Integrate(const GridSequence& seq, const TestFunction& f);

// Test-function catalogue.
TestFunction Constant(double c);
// e^{2 pi i k x}; throws kInvalidArgument for k == 0.
TestFunction ExpK(std::int64_t k);
TestFunction SinSquaredPi();
// Indicator of [a, b); throws kInvalidInterval.
TestFunction Indicator(double a, double b);
TestFunction Monomial(unsigned m);
// (1/2) x^{-1/2}. With zero_at_origin the representative takes the value 0
// at x = 0; otherwise evaluation at 0 throws kDomain.
TestFunction InverseSqrt(bool zero_at_origin);

// Periodic C-infinity bump: 1 on [a + eps, b - eps], 0 outside
// (a - eps, b + eps), with antisymmetric ramps so the integral is exactly
// b - a. When a == 0 the lower ramp wraps around 1. Throws kBandOverflow
// unless 0 < eps < (b - a)/2 and the bands fit inside [0, 1) (eps < min(a,
// 1 - b) for a > 0, 2 eps < 1 - b for a == 0); kInvalidInterval for a bad
// interval.
TestFunction SmoothIndicator(double a, double b, double eps);

struct RegistryOptions {
  std::vector<std::int64_t> frequencies = {1, 2, 3};
  Interval interval{0.2, 0.5};
  double eps = 0.01;
  std::vector<unsigned> monomial_degrees = {1, 2, 3};
};

// Every catalogue entry, instantiated with `options`.
std::vector<TestFunction> Registry(const RegistryOptions& options = {});

// Resolves a function by name: one, const, sin2pi, exp (frequency
// options.frequencies[0]), indicator, smooth_indicator, x<m> (e.g. x2),
// inv_sqrt, inv_sqrt0. Throws kInvalidArgument for unknown names.
TestFunction FunctionByName(const std::string& name,
                            const RegistryOptions& options = {});

struct IntegrationRow {
  std::uint64_t q = 0;
  std::string f_name;
  IntegrationReport report;
};

// One report per prime in schedule order, each with D* attached.
std::vector<IntegrationRow> ConvergenceTable(const PolynomialSpec& p,
                                             const PrimeSchedule& schedule,
                                             const TestFunction& f);

// Columns q, N, f_name, mean_re, mean_im, reference, abs_error, dstar.
Table IntegrationTable(std::span<const IntegrationRow> rows);

}  // namespace equidist

#endif  // EQUIDIST_QMCINT_H_
