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

#ifndef EQUIDIST_SUMMATION_H_
#define EQUIDIST_SUMMATION_H_

#include <cmath>
#include <complex>

namespace equidist {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double Value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void Add(std::complex<double> z) {
    re_.Add(z.real());
    im_.Add(z.imag());
  }
  void Add(double re, double im) {
    re_.Add(re);
    im_.Add(im);
  }

  std::complex<double> Value() const { return {re_.Value(), im_.Value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace equidist

#endif  // EQUIDIST_SUMMATION_H_
