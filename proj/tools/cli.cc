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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "equidist/error.h"
#include "equidist/expsum.h"
#include "equidist/polyseq.h"
#include "equidist/primes.h"
#include "equidist/qmcint.h"
#include "equidist/table.h"

namespace equidist::cli {
namespace {

// Tolerance for the Erdos-Turan dominance gate.
constexpr double kDominanceSlack = 1e-9;

class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& message)
      : std::runtime_error(flag.empty() ? message : flag + ": " + message) {}
};

double ParseDouble(const std::string& flag, std::string_view text) {
  double v = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(flag, "cannot parse '" + std::string(text) + "'");
  }
  return v;
}

std::int64_t ParseInt(const std::string& flag, std::string_view text) {
  std::int64_t v = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(flag, "cannot parse '" + std::string(text) + "'");
  }
  return v;
}

Interval ParseInterval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--interval", "expected a,b (got '" + text + "')");
  }
  const Interval iv{ParseDouble("--interval", text.substr(0, comma)),
                    ParseDouble("--interval", text.substr(comma + 1))};
  try {
    ValidateInterval(iv);
  } catch (const Error& e) {
    throw UsageError("--interval", e.what());
  }
  return iv;
}

PolynomialSpec RequirePolynomial(const RunConfig& cfg) {
  if (!cfg.polynomial) throw UsageError("--poly", "required");
  try {
    return PolynomialSpec::Parse(*cfg.polynomial);
  } catch (const Error& e) {
    throw UsageError("--poly", e.what());
  }
}

std::uint64_t RequirePrime(const RunConfig& cfg) {
  if (!cfg.q) throw UsageError("--q", "required");
  if (!IsPrime(*cfg.q)) throw UsageError("--q", "q must be prime");
  return *cfg.q;
}

ReducedPolynomial RequireReduced(const RunConfig& cfg) {
  const PolynomialSpec p = RequirePolynomial(cfg);
  const std::uint64_t q = RequirePrime(cfg);
  try {
    return ReducePolynomial(p, q);
  } catch (const Error& e) {
    throw UsageError("--q", e.what());
  }
}

PrimeSchedule ResolveSchedule(const RunConfig& cfg) {
  const bool geometric = cfg.q_min || cfg.q_max || cfg.count;
  if (geometric && cfg.q) {
    throw UsageError("--q", "use either --q or --qmin/--qmax/--count");
  }
  if (cfg.q) return PrimeSchedule::Explicit({RequirePrime(cfg)});
  if (!cfg.q_min || !cfg.q_max) {
    throw UsageError("--qmin", "--q or both --qmin and --qmax are required");
  }
  try {
    return GeometricSchedule(*cfg.q_min, *cfg.q_max, cfg.count.value_or(1));
  } catch (const Error& e) {
    throw UsageError("--qmin", e.what());
  }
}

// Explicit --k values plus --ksample draws from [lo, hi], sorted and unique.
std::vector<std::int64_t> ResolveFrequencies(const RunConfig& cfg,
                                             std::int64_t lo, std::int64_t hi,
                                             Table& table) {
  std::set<std::int64_t> ks;
  for (const std::string& spec : cfg.k_specs) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
      ks.insert(ParseInt("--k", spec));
      continue;
    }
    const std::int64_t a = ParseInt("--k", spec.substr(0, dots));
    const std::int64_t b = ParseInt("--k", spec.substr(dots + 2));
    if (a > b) throw UsageError("--k", "empty range '" + spec + "'");
    if (b - a > 100'000'000) throw UsageError("--k", "range too large");
    for (std::int64_t k = a; k <= b; ++k) ks.insert(k);
  }
  if (cfg.k_sample) {
    if (lo > hi) throw UsageError("--ksample", "no frequencies to sample");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    const auto available = static_cast<std::uint64_t>(hi - lo + 1);
    std::set<std::int64_t> drawn;
    while (drawn.size() < std::min(*cfg.k_sample, available)) {
      drawn.insert(dist(rng));
    }
    ks.insert(drawn.begin(), drawn.end());
    table.metadata.emplace_back("seed", cfg.seed);
  }
  return {ks.begin(), ks.end()};
}

struct Sequence {
  std::optional<GridSequence> grid;
  std::vector<double> reals;
};

Sequence ResolveSequence(const RunConfig& cfg) {
  const int sources = (cfg.polynomial || cfg.q ? 1 : 0) +
                      (cfg.alpha || cfg.n ? 1 : 0) + (cfg.input ? 1 : 0);
  if (sources != 1) {
    throw UsageError("--poly",
                     "give exactly one source: --poly with --q, --alpha with "
                     "--n, or --input");
  }
  Sequence seq;
  if (cfg.input) {
    try {
      seq.reals = LoadSequence(*cfg.input).points;
    } catch (const Error& e) {
      throw UsageError("--input", e.what());
    }
  } else if (cfg.alpha || cfg.n) {
    if (!cfg.alpha) throw UsageError("--alpha", "required with --n");
    if (!cfg.n || *cfg.n == 0) throw UsageError("--n", "must be >= 1");
    seq.reals = LinearSequence(*cfg.alpha, *cfg.n).points;
  } else {
    seq.grid = GenerateSequence(RequireReduced(cfg));
    seq.reals = seq.grid->ToReals();
  }
  return seq;
}

RegistryOptions FunctionOptions(const RunConfig& cfg) {
  RegistryOptions opts;
  if (!cfg.k_specs.empty()) opts.frequencies = {ParseInt("--k", cfg.k_specs[0])};
  if (!cfg.intervals.empty()) opts.interval = cfg.intervals.front();
  if (cfg.eps) opts.eps = *cfg.eps;
  return opts;
}

TestFunction RequireFunction(const RunConfig& cfg) {
  if (!cfg.function) throw UsageError("--f", "required");
  try {
    return FunctionByName(*cfg.function, FunctionOptions(cfg));
  } catch (const Error& e) {
    throw UsageError("--f", e.what());
  }
}

int RunReduce(const RunConfig& cfg, Table& t) {
  const PolynomialSpec p = RequirePolynomial(cfg);
  const ReducedPolynomial rp = RequireReduced(cfg);
  const std::uint64_t min_q = MinModulus(p);
  t.columns = {"q", "min_modulus", "l", "a", "t"};
  for (std::size_t l = 0; l < p.coefficients().size(); ++l) {
    t.rows.push_back({rp.modulus(), min_q, static_cast<std::uint64_t>(l),
                      p.coefficients()[l].ToString(), rp.coefficients()[l]});
  }
  return kExitOk;
}

int RunGen(const RunConfig& cfg, Table& t) {
  const Sequence seq = ResolveSequence(cfg);
  if (cfg.measure) {
    if (!seq.grid) throw UsageError("--measure", "needs --poly and --q");
    const EmpiricalMeasure m(*seq.grid);
    t.columns = {"numerator", "point", "multiplicity", "mass"};
    for (std::size_t i = 0; i < m.atoms().size(); ++i) {
      const Fraction mass = m.Mass(i);
      t.rows.push_back({m.atoms()[i].numerator, m.Point(i),
                        m.atoms()[i].multiplicity,
                        std::to_string(mass.numerator()) + "/" +
                            std::to_string(mass.denominator())});
    }
    return kExitOk;
  }
  t.columns = {"i", "numerator", "point"};
  for (std::size_t i = 0; i < seq.reals.size(); ++i) {
    t.rows.push_back({static_cast<std::uint64_t>(i + 1),
                      seq.grid ? Cell(seq.grid->numerators()[i]) : Cell(),
                      seq.reals[i]});
  }
  return kExitOk;
}

int RunWeylSum(const RunConfig& cfg, Table& t) {
  const Sequence seq = ResolveSequence(cfg);
  const auto hi = static_cast<std::int64_t>(
      seq.grid ? seq.grid->denominator() - 1 : seq.reals.size());
  const std::vector<std::int64_t> ks = ResolveFrequencies(cfg, 1, hi, t);
  if (ks.empty()) throw UsageError("--k", "required");
  if (std::find(ks.begin(), ks.end(), 0) != ks.end()) {
    throw UsageError("--k", "frequency 0 is excluded");
  }
  std::vector<WeylSumReport> reports;
  if (seq.grid) {
    reports = WeylSums(*seq.grid, ks);
  } else {
    for (std::int64_t k : ks) reports.push_back(WeylSum(seq.reals, k));
  }
  const Table body = WeylReportTable(reports);
  t.columns = body.columns;
  t.rows = body.rows;
  return kExitOk;
}

int RunScan(const RunConfig& cfg, Table& t) {
  const ReducedPolynomial rp = RequireReduced(cfg);
  std::vector<std::complex<double>> scan;
  try {
    scan = AllKScan(rp, cfg.scan_limit ? cfg.scan_limit : kDefaultScanLimit);
  } catch (const Error& e) {
    throw UsageError("--q", e.what());
  }
  const bool symmetric = ConjugateFrequencyCheck(scan);
  t.metadata.emplace_back("conjugate_symmetric",
                          std::string(symmetric ? "true" : "false"));
  t.columns = {"k", "re", "im", "magnitude"};
  for (std::size_t k = 0; k < scan.size(); ++k) {
    t.rows.push_back({static_cast<std::uint64_t>(k), scan[k].real(),
                      scan[k].imag(), std::abs(scan[k])});
  }
  return symmetric ? kExitOk : kExitBoundFailure;
}

int RunWeilCheck(const RunConfig& cfg, Table& t) {
  const ReducedPolynomial rp = RequireReduced(cfg);
  const auto q = static_cast<std::int64_t>(rp.modulus());
  std::vector<std::int64_t> ks = ResolveFrequencies(cfg, 1, q - 1, t);
  if (cfg.k_specs.empty() && !cfg.k_sample) {
    ks.resize(q - 1);
    std::iota(ks.begin(), ks.end(), 1);
  }
  std::vector<std::uint64_t> uks;
  for (std::int64_t k : ks) {
    if (k < 1 || k >= q) {
      throw UsageError("--k", "frequency " + std::to_string(k) +
                                  " is outside [1, q-1]");
    }
    uks.push_back(static_cast<std::uint64_t>(k));
  }
  std::vector<WeylSumReport> reports;
  try {
    reports = WeilBoundCheck(rp, uks);
  } catch (const Error& e) {
    throw UsageError("--poly", e.what());
  }
  const Table body = WeylReportTable(reports);
  t.columns = body.columns;
  t.rows = body.rows;
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.WithinBound(); });
  return ok ? kExitOk : kExitBoundFailure;
}

int RunDiscrepancy(const RunConfig& cfg, Table& t) {
  const Sequence seq = ResolveSequence(cfg);
  DiscrepancyReport report =
      seq.grid ? StarDiscrepancy(*seq.grid) : StarDiscrepancy(seq.reals);
  const std::uint64_t terms = cfg.k_max.value_or(std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(report.n)))));
  if (terms == 0) throw UsageError("--kmax", "must be >= 1");
  if (seq.grid) {
    report.et_bound = ErdosTuranBound(*seq.grid, terms);
  } else {
    std::vector<double> mags;
    for (std::uint64_t k = 1; k <= terms; ++k) {
      mags.push_back(
          WeylSum(seq.reals, static_cast<std::int64_t>(k)).normalized_magnitude);
    }
    report.et_bound = std::min(1.0, ErdosTuranBound(mags));
  }
  t.columns = {"N",         "Dstar",      "D",          "worst_a",
               "worst_b",   "et_bound",   "interval_a", "interval_b",
               "count",     "deviation"};
  const std::vector<Cell> head = {report.n,
                                  report.star_discrepancy,
                                  report.two_sided,
                                  report.worst_interval.a,
                                  report.worst_interval.b,
                                  *report.et_bound};
  if (cfg.intervals.empty()) {
    std::vector<Cell> row = head;
    row.resize(t.columns.size());
    t.rows.push_back(row);
  }
  for (const Interval& iv : cfg.intervals) {
    const Fraction f = seq.grid ? IntervalCount(*seq.grid, iv)
                                : IntervalCount(seq.reals, iv);
    std::vector<Cell> row = head;
    row.push_back(iv.a);
    row.push_back(iv.b);
    row.push_back(std::to_string(f.numerator()) + "/" +
                  std::to_string(f.denominator()));
    row.push_back(std::abs(f.ToDouble() - (iv.b - iv.a)));
    t.rows.push_back(row);
  }
  return report.two_sided <= *report.et_bound + kDominanceSlack
             ? kExitOk
             : kExitBoundFailure;
}

int RunIntegrate(const RunConfig& cfg, Table& t) {
  if (cfg.list) {
    t.columns = {"f_name", "reference_re", "reference_im", "smooth", "riemann"};
    for (const TestFunction& f : Registry(FunctionOptions(cfg))) {
      t.rows.push_back({f.name, f.reference_integral.real(),
                        f.reference_integral.imag(),
                        std::string(f.smooth ? "true" : "false"),
                        std::string(f.riemann ? "true" : "false")});
    }
    return kExitOk;
  }
  const TestFunction f = RequireFunction(cfg);
  const Sequence seq = ResolveSequence(cfg);
  IntegrationReport r =
      seq.grid ? Integrate(*seq.grid, f) : Integrate(seq.reals, f);
  r.dstar_at_n = seq.grid ? StarDiscrepancy(*seq.grid).star_discrepancy
                          : StarDiscrepancy(seq.reals).star_discrepancy;
  t.columns = {"N",         "f_name",    "mean_re", "mean_im",
               "reference", "abs_error", "dstar"};
  t.rows.push_back({r.n, f.name, r.sample_mean.real(), r.sample_mean.imag(),
                    r.reference.real(), r.abs_error, *r.dstar_at_n});
  return kExitOk;
}

int RunConverge(const RunConfig& cfg, Table& t) {
  const PolynomialSpec p = RequirePolynomial(cfg);
  const PrimeSchedule schedule = ResolveSchedule(cfg);
  const std::uint64_t min_q = MinModulus(p);
  if (schedule.q_values().front() < min_q) {
    throw UsageError("--qmin", "smallest prime " +
                                   std::to_string(schedule.q_values().front()) +
                                   " is below the minimum modulus " +
                                   std::to_string(min_q));
  }
  if (cfg.function) {
    const auto rows = ConvergenceTable(p, schedule, RequireFunction(cfg));
    t = IntegrationTable(rows);
    return kExitOk;
  }
  const auto rows = WeakConvergenceStudy(
      p, schedule, cfg.intervals,
      cfg.k_max.value_or(kDefaultErdosTuranTerms));
  t = ConvergenceStudyTable(rows);
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.degenerate || r.d <= r.et_bound + kDominanceSlack;
  });
  return ok ? kExitOk : kExitBoundFailure;
}

int RunDecay(const RunConfig& cfg, Table& t) {
  const TestFunction f = RequireFunction(cfg);
  const std::uint64_t grid = cfg.q.value_or(256);
  const double h = cfg.decay_h.value_or(1.0);
  FourierDecayReport r;
  try {
    r = FourierDecayCheck(f, grid, h);
  } catch (const Error& e) {
    throw UsageError(e.code() == ErrorCode::kNonSmoothFunction ? "--f" : "--H",
                     e.what());
  }
  const std::set<std::int64_t> bad(r.violations.begin(), r.violations.end());
  t.columns = {"k", "re", "im", "magnitude", "limit", "violation"};
  for (const auto& [k, c] : r.coefficients) {
    const double kk = static_cast<double>(k);
    t.rows.push_back({k, c.real(), c.imag(), std::abs(c),
                      k == 0 ? Cell() : Cell(h / (kk * kk)),
                      static_cast<std::int64_t>(bad.count(k))});
  }
  return r.violations.empty() ? kExitOk : kExitBoundFailure;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& SubcommandCatalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog = {
      {"reduce", "Reduce a polynomial modulo a prime [ReducePolynomial, "
                 "MinModulus]"},
      {"gen", "Emit a point sequence or its point-mass measure "
              "[GenerateSequence, EvalMod, LinearSequence, LoadSequence, "
              "EmpiricalMeasure]"},
      {"weylsum", "Weyl sums of a sequence at chosen frequencies [WeylSum]"},
      {"scan", "Complete sums at every frequency via the value histogram "
               "[AllKScan, ConjugateFrequencyCheck]"},
      {"weilcheck", "Check complete exponential sums against the Weil bound "
                    "[WeilBoundCheck, CompleteExpSum]"},
      {"discrepancy", "Star and two-sided discrepancy, interval counts and "
                      "the Erdos-Turan bound [StarDiscrepancy, IntervalCount, "
                      "ErdosTuranBound]"},
      {"integrate", "Quasi-Monte-Carlo average of a test function "
                    "[Integrate, Registry, SmoothIndicator]"},
      {"converge", "Discrepancy or integration error across a prime "
                   "schedule [WeakConvergenceStudy, ConvergenceTable, "
                   "GeometricSchedule, NextPrime, IsPrime]"},
      {"decay", "Fourier coefficients of a smooth test function against "
                "H/k^2 [FourierDecayCheck]"},
  };
  return catalog;
}

int Run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Table table;
  int status = kExitOk;
  try {
    switch (cfg.subcommand) {
      case Subcommand::kReduce: status = RunReduce(cfg, table); break;
      case Subcommand::kGen: status = RunGen(cfg, table); break;
      case Subcommand::kWeylSum: status = RunWeylSum(cfg, table); break;
      case Subcommand::kScan: status = RunScan(cfg, table); break;
      case Subcommand::kWeilCheck: status = RunWeilCheck(cfg, table); break;
      case Subcommand::kDiscrepancy:
        status = RunDiscrepancy(cfg, table);
        break;
      case Subcommand::kIntegrate: status = RunIntegrate(cfg, table); break;
      case Subcommand::kConverge: status = RunConverge(cfg, table); break;
      case Subcommand::kDecay: status = RunDecay(cfg, table); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out) {
    file.open(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: --out: cannot open " << *cfg.out << '\n';
      return kExitUsage;
    }
    sink = &file;
  }
  if (cfg.format == Format::kJson) {
    WriteJson(table, *sink);
  } else {
    WriteCsv(table, *sink);
  }
  return status;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equidistribution of polynomial sequences modulo primes"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "csv";
  std::vector<std::string> intervals;

  const std::map<std::string, Subcommand> kinds = {
      {"reduce", Subcommand::kReduce},
      {"gen", Subcommand::kGen},
      {"weylsum", Subcommand::kWeylSum},
      {"scan", Subcommand::kScan},
      {"weilcheck", Subcommand::kWeilCheck},
      {"discrepancy", Subcommand::kDiscrepancy},
      {"integrate", Subcommand::kIntegrate},
      {"converge", Subcommand::kConverge},
      {"decay", Subcommand::kDecay},
  };

  for (const auto& [name, description] : SubcommandCatalog()) {
    CLI::App* sub = app.add_subcommand(name, description);
    const Subcommand kind = kinds.at(name);
    sub->callback([&cfg, kind] { cfg.subcommand = kind; });
    sub->add_option("--poly", cfg.polynomial,
                    "Coefficients a_0,a_1,...,a_d (exact decimals in [0,1))");
    sub->add_option("--q", cfg.q, kind == Subcommand::kDecay
                                      ? "Grid size (default 256)"
                                      : "Prime modulus");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized selections");
    switch (kind) {
      case Subcommand::kGen:
        sub->add_option("--alpha", cfg.alpha, "Rotation for frac(i alpha)");
        sub->add_option("--n", cfg.n, "Length of the rotation sequence");
        sub->add_option("--input", cfg.input, "Sequence file");
        sub->add_flag("--measure", cfg.measure, "Emit the empirical measure");
        break;
      case Subcommand::kWeylSum:
      case Subcommand::kDiscrepancy:
      case Subcommand::kIntegrate:
        sub->add_option("--alpha", cfg.alpha, "Rotation for frac(i alpha)");
        sub->add_option("--n", cfg.n, "Length of the rotation sequence");
        sub->add_option("--input", cfg.input, "Sequence file");
        break;
      default:
        break;
    }
    if (kind == Subcommand::kWeylSum || kind == Subcommand::kWeilCheck ||
        kind == Subcommand::kIntegrate || kind == Subcommand::kConverge ||
        kind == Subcommand::kDecay) {
      sub->add_option("--k", cfg.k_specs, "Frequency K or range A..B");
    }
    if (kind == Subcommand::kWeylSum || kind == Subcommand::kWeilCheck) {
      sub->add_option("--ksample", cfg.k_sample,
                      "Add M seeded-random frequencies");
    }
    if (kind == Subcommand::kDiscrepancy || kind == Subcommand::kIntegrate ||
        kind == Subcommand::kConverge || kind == Subcommand::kDecay) {
      sub->add_option("--interval", intervals, "Interval a,b");
      sub->add_option("--eps", cfg.eps, "Smooth-indicator band half-width");
      sub->add_option("--f", cfg.function, "Test function name");
    }
    if (kind == Subcommand::kDiscrepancy || kind == Subcommand::kConverge) {
      sub->add_option("--kmax", cfg.k_max, "Erdos-Turan frequency count");
    }
    if (kind == Subcommand::kConverge) {
      sub->add_option("--qmin", cfg.q_min, "Smallest schedule target");
      sub->add_option("--qmax", cfg.q_max, "Largest schedule target");
      sub->add_option("--count", cfg.count, "Number of schedule targets");
    }
    if (kind == Subcommand::kScan) {
      sub->add_option("--scan-limit", cfg.scan_limit, "Largest q to scan");
    }
    if (kind == Subcommand::kIntegrate) {
      sub->add_flag("--list", cfg.list, "List the test-function registry");
    }
    if (kind == Subcommand::kDecay) {
      sub->add_option("--H", cfg.decay_h, "Decay constant (default 1)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.format = format == "json" ? Format::kJson : Format::kCsv;
  try {
    for (const std::string& iv : intervals) {
      cfg.intervals.push_back(ParseInterval(iv));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return Run(cfg, out, err);
}

}  // namespace equidist::cli
