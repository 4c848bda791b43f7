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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace equidist::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  return fields;
}

TEST(CliTest, WeilCheckSmallField) {
  const Result r = Invoke({"weilcheck", "--poly", "0,0,0.15", "--q", "7",
                          "--k", "1..6"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], "k,re,im,magnitude,bound,margin");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = Fields(lines[i]);
    ASSERT_EQ(f.size(), 6u);
    EXPECT_EQ(f[0], std::to_string(i));
    EXPECT_GT(std::stod(f[5]), 0.0);
  }
}

TEST(CliTest, ConvergeSinSquaredHasFourRows) {
  const Result r = Invoke({"converge", "--poly", "0,0.7,0.3", "--qmin", "100",
                          "--qmax", "100000", "--count", "4", "--f",
                          "sin2pi"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "q,N,f_name,mean_re,mean_im,reference,abs_error,dstar");
  const std::vector<std::string> qs = {"101", "1009", "10007", "100003"};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    EXPECT_EQ(Fields(lines[i + 1])[0], qs[i]);
  }
}

TEST(CliTest, CompositeModulusIsUsageError) {
  const Result r = Invoke({"gen", "--poly", "0,0.5", "--q", "4"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("q must be prime"), std::string::npos);
  EXPECT_NE(r.err.find("--q"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, UsageErrorsNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {{"reduce", "--poly", "0,1.5", "--q", "7"}, "--poly"},
      {{"reduce", "--poly", "0,0.5"}, "--q"},
      {{"weylsum", "--poly", "0,0.5", "--q", "7", "--k", "x"}, "--k"},
      {{"discrepancy", "--poly", "0,0.5", "--q", "7", "--interval", "0.5"},
       "--interval"},
      {{"integrate", "--poly", "0,0.5", "--q", "7", "--f", "nope"}, "--f"},
      {{"decay", "--f", "indicator"}, "--f"},
      {{"converge", "--poly", "0,0,0.15", "--qmin", "2", "--qmax", "10",
        "--count", "2", "--interval", "0.1,0.2"},
       "--qmin"},
  };
  for (const Case& c : cases) {
    const Result r = Invoke(c.args);
    EXPECT_EQ(r.status, kExitUsage) << c.args[0] << " " << r.err;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
}

TEST(CliTest, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(Invoke({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(Invoke({}).status, kExitUsage);
}

TEST(CliTest, ReduceListsResidues) {
  const Result r = Invoke({"reduce", "--poly", "0.3,0.7", "--q", "101"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "q,min_modulus,l,a,t\n101,2,0,0.3,30\n101,2,1,0.7,70\n");
}

TEST(CliTest, GenMatchesResidues) {
  const Result r = Invoke({"gen", "--poly", "0,0.5", "--q", "5"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  // t_1 = 2, so the numerators are 2i mod 5.
  EXPECT_EQ(r.out,
            "i,numerator,point\n1,2,0.40000000000000002\n"
            "2,4,0.80000000000000004\n3,1,0.20000000000000001\n"
            "4,3,0.59999999999999998\n5,0,0\n");
}

TEST(CliTest, GenReadsSequenceFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "equidist_cli_seq.txt";
  {
    std::ofstream f(path);
    f << "# header\n0.25\n\n0.5\n";
  }
  const Result r = Invoke({"gen", "--input", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "i,numerator,point\n1,,0.25\n2,,0.5\n");
}

TEST(CliTest, JsonMirrorsCsvFields) {
  const Result r = Invoke({"weylsum", "--poly", "0,0,0.15", "--q", "7", "--k",
                          "1", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  for (const char* key : {"\"k\":1", "\"re\":", "\"im\":", "\"magnitude\":",
                          "\"bound\":null", "\"margin\":null"}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key << " in " << r.out;
  }
}

TEST(CliTest, SampledFrequenciesAreSeededAndEchoed) {
  const std::vector<std::string> args = {"weilcheck", "--poly", "0,0.3,0.7",
                                         "--q",       "1009",   "--ksample",
                                         "20",        "--seed", "42"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto lines = Lines(a.out);
  EXPECT_EQ(lines[0], "# seed=42");
  EXPECT_EQ(lines.size(), 22u);
  auto other = args;
  other.back() = "43";
  EXPECT_NE(Invoke(other).out, a.out);
}

TEST(CliTest, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args = {
      "converge", "--poly",     "0,0.7,0.3", "--qmin",    "100",
      "--qmax",   "20000",      "--count",   "3",         "--interval",
      "0.25,0.75", "--interval", "0.1,0.2"};
  const Result a = Invoke(args);
  ASSERT_EQ(a.status, kExitOk) << a.err;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(Invoke(args).out, a.out);
}

TEST(CliTest, WritesToOutPath) {
  const auto path = std::filesystem::temp_directory_path() / "equidist_out.csv";
  const Result r = Invoke({"reduce", "--poly", "0.5", "--q", "3", "--out",
                          path.string()});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_EQ(content.str(), "q,min_modulus,l,a,t\n3,2,0,0.5,1\n");
}

TEST(CliTest, NumbersUseSeventeenDigits) {
  const Result r = Invoke({"integrate", "--poly", "0,0.7,0.3", "--q", "101",
                          "--f", "sin2pi"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0.49613508414344226"), std::string::npos) << r.out;
}

TEST(CliTest, ScanReportsSymmetry) {
  const Result r = Invoke({"scan", "--poly", "0,0.3,0.7", "--q", "11"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  EXPECT_EQ(lines[0], "# conjugate_symmetric=true");
  EXPECT_EQ(lines[1], "k,re,im,magnitude");
  EXPECT_EQ(lines.size(), 13u);
  EXPECT_EQ(Fields(lines[2])[1], "11");
}

TEST(CliTest, ScanLimitIsEnforced) {
  const Result r = Invoke({"scan", "--poly", "0,0.3,0.7", "--q", "1009",
                          "--scan-limit", "500"});
  EXPECT_EQ(r.status, kExitUsage);
}

TEST(CliTest, DecayFailureExitsThree) {
  const std::vector<std::string> base = {"decay", "--f", "smooth_indicator",
                                         "--eps", "0.05", "--q", "512"};
  auto loose = base;
  loose.insert(loose.end(), {"--H", "2"});
  EXPECT_EQ(Invoke(loose).status, kExitOk);
  auto tight = base;
  tight.insert(tight.end(), {"--H", "1"});
  EXPECT_EQ(Invoke(tight).status, kExitBoundFailure);
}

TEST(CliTest, ClusteredSequenceGetsClampedBound) {
  const auto path =
      std::filesystem::temp_directory_path() / "equidist_cluster.txt";
  {
    std::ofstream f(path);
    for (int i = 0; i < 50; ++i) f << 0.001 * i << "\n";
  }
  const Result r =
      Invoke({"discrepancy", "--input", path.string(), "--kmax", "1"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto f = Fields(Lines(r.out)[1]);
  EXPECT_EQ(f[0], "50");
  EXPECT_GT(std::stod(f[2]), 0.9);
  EXPECT_EQ(f[5], "1");
}

TEST(CliTest, DiscrepancyOfGridSequence) {
  const Result r = Invoke({"discrepancy", "--poly", "0,0.5", "--q", "5"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  const auto f = Fields(lines[1]);
  EXPECT_EQ(f[0], "5");
  EXPECT_EQ(f[1], "0.20000000000000001");
}

TEST(CliTest, IntegrateListsRegistry) {
  const Result r = Invoke({"integrate", "--list"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  for (const char* name : {"one", "sin2pi", "indicator", "smooth_indicator",
                           "inv_sqrt", "exp1", "x2"}) {
    EXPECT_NE(r.out.find(std::string("\n") + name + ","), std::string::npos)
        << name;
  }
}

// Every public library operation appears in exactly one subcommand's help.
TEST(CliTest, HelpTextCoversEveryOperationOnce) {
  const std::vector<std::string> operations = {
      "IsPrime",          "NextPrime",         "GeometricSchedule",
      "ReducePolynomial", "MinModulus",        "EvalMod",
      "GenerateSequence", "LinearSequence",    "LoadSequence",
      "EmpiricalMeasure", "WeylSum",           "CompleteExpSum",
      "WeilBoundCheck",   "AllKScan",          "ConjugateFrequencyCheck",
      "FourierDecayCheck", "StarDiscrepancy",  "IntervalCount",
      "ErdosTuranBound",  "WeakConvergenceStudy", "Integrate",
      "Registry",         "SmoothIndicator",   "ConvergenceTable"};
  const Result help = Invoke({"--help"});
  EXPECT_EQ(help.status, 0);
  for (const std::string& op : operations) {
    const std::regex word("[\\[ ,]" + op + "[\\],]");
    int hits = 0;
    for (const auto& [name, description] : SubcommandCatalog()) {
      hits += std::regex_search(" " + description, word) ? 1 : 0;
    }
    EXPECT_EQ(hits, 1) << op;
    EXPECT_TRUE(std::regex_search(help.out, word)) << op;
  }
}

}  // namespace
}  // namespace equidist::cli
