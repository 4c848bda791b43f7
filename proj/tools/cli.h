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

#ifndef EQUIDIST_TOOLS_CLI_H_
#define EQUIDIST_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equidist/discrepancy.h"

namespace equidist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundFailure = 3;

enum class Subcommand {
  kReduce,
  kGen,
  kWeylSum,
  kScan,
  kWeilCheck,
  kDiscrepancy,
  kIntegrate,
  kConverge,
  kDecay,
};

enum class Format { kCsv, kJson };

struct RunConfig {
  Subcommand subcommand = Subcommand::kReduce;
  std::optional<std::string> polynomial;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> q_min;
  std::optional<std::uint64_t> q_max;
  std::optional<std::uint64_t> count;
  std::vector<std::string> k_specs;  // "K" or "A..B"
  std::optional<std::uint64_t> k_sample;
  std::vector<Interval> intervals;
  std::optional<double> eps;
  std::optional<std::string> function;
  std::optional<double> alpha;
  std::optional<std::uint64_t> n;
  std::optional<std::string> input;
  std::optional<double> decay_h;
  std::optional<std::uint64_t> k_max;
  std::uint64_t scan_limit = 0;  // 0: library default
  bool measure = false;
  bool list = false;
  Format format = Format::kCsv;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
};

// (name, description) for every subcommand; each description names the
// library operations the subcommand reaches.
const std::vector<std::pair<std::string, std::string>>& SubcommandCatalog();

// Executes a validated configuration, writing the report to `out` (or to
// config.out). Returns the process exit status.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace equidist::cli

#endif  // EQUIDIST_TOOLS_CLI_H_
