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

#include "equidist/error.h"

namespace equidist {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kEmptyRange: return "empty-range";
    case ErrorCode::kModulusTooSmall: return "modulus-too-small";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kEmptySequence: return "empty-sequence";
    case ErrorCode::kFrequencyOutOfRange: return "frequency-out-of-range";
    case ErrorCode::kZeroFrequency: return "zero-frequency";
    case ErrorCode::kDegeneratePolynomial: return "degenerate-polynomial";
    case ErrorCode::kModulusDegreeClash: return "modulus-degree-clash";
    case ErrorCode::kScanLimitExceeded: return "scan-limit-exceeded";
    case ErrorCode::kNonSmoothFunction: return "non-smooth-function";
    case ErrorCode::kInvalidInterval: return "invalid-interval";
    case ErrorCode::kBandOverflow: return "band-overflow";
    case ErrorCode::kDomain: return "domain";
  }
  return "unknown";
}

}  // namespace equidist
