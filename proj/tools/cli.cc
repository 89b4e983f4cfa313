// Copyright 2026 The fdp-edgeworth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "fdp/accountant.h"
#include "fdp/csv_io.h"
#include "fdp/distributions.h"
#include "fdp/exact_composition.h"
#include "fdp/interpreter.h"
#include "fdp/status_macros.h"
#include "fdp/tradeoff_curve.h"
#include "json.hpp"

namespace fdp::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr char kGridEnv[] = "FDP_GRID_SIZE";

// An error raised by a flag value rather than by a computation.
struct UsageFailure {
  std::string message;
};

struct OutputFlags {
  std::string path;
  std::string format = "csv";
};

struct GridFlag {
  std::optional<int> value;
};

void AddOutputFlags(CLI::App* cmd, OutputFlags* o) {
  cmd->add_option("--out", o->path, "Output file (default: stdout)");
  cmd->add_option("--format", o->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void AddGridFlag(CLI::App* cmd, GridFlag* g) {
  cmd->add_option("--grid", g->value,
                  "Number of alpha grid points (overrides FDP_GRID_SIZE)")
      ->check(CLI::Range(2, 10000000));
}

// --grid, then FDP_GRID_SIZE, then the built-in default.
int ResolveGrid(const GridFlag& g) {
  if (g.value.has_value()) return *g.value;
  if (const char* env = std::getenv(kGridEnv); env != nullptr && *env != '\0') {
    int v = 0;
    if (!absl::SimpleAtoi(env, &v) || v < 2) {
      throw UsageFailure{absl::StrCat(kGridEnv, " must be an integer >= 2, got '",
                                      env, "'")};
    }
    return v;
  }
  return kDefaultAlphaGridSize;
}

DistributionPair MakePair(const std::string& name,
                          const std::vector<double>& params) {
  auto expect = [&](size_t count, const char* what) {
    if (params.size() != count) {
      throw UsageFailure{absl::StrCat("--pair ", name, " takes --param ", what)};
    }
  };
  absl::StatusOr<DistributionPair> pair;
  if (name == "gaussian") {
    expect(1, "<mu>");
    pair = DistributionPair::Gaussian(params[0]);
  } else if (name == "laplace") {
    expect(1, "<theta>");
    pair = DistributionPair::Laplace(params[0]);
  } else {
    expect(2, "<p>,<sigma>");
    pair = DistributionPair::SubsampledGaussian(params[0], params[1]);
  }
  if (!pair.ok()) throw UsageFailure{std::string(pair.status().message())};
  return *pair;
}

std::vector<Method> ExpandMethods(const std::string& method) {
  if (method == "all") return {Method::kClt, Method::kEdgeworth, Method::kExact};
  return {*ParseMethod(method)};
}

Json ArrayOf(std::span<const double> v) {
  return Json(std::vector<double>(v.begin(), v.end()));
}

// Writes one or more beta columns sharing an alpha grid.
absl::Status EmitCurves(const std::vector<std::pair<std::string, TradeoffCurve>>& curves,
                        std::ostream& os, const std::string& format) {
  std::span<const double> alphas = curves.front().second.alphas();
  if (format == "json") {
    Json j;
    j["alpha"] = ArrayOf(alphas);
    for (const auto& [name, c] : curves) j[name] = ArrayOf(c.betas());
    os << j.dump() << '\n';
    return os.good() ? absl::OkStatus() : absl::DataLossError("write failed");
  }
  std::vector<NamedColumn> cols;
  for (const auto& [name, c] : curves) cols.push_back({name, c.betas()});
  return WriteColumnsCsv(os, alphas, cols);
}

// Runs `write` against the --out file or the default stream.
absl::Status WithOutput(const std::string& path, std::ostream& fallback,
                        const std::function<absl::Status(std::ostream&)>& write) {
  if (path.empty()) return write(fallback);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw UsageFailure{absl::StrCat("cannot open --out file '", path, "'")};
  }
  FDP_RETURN_IF_ERROR(write(file));
  file.close();
  if (!file) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

absl::StatusOr<TradeoffCurve> ReadCurveFile(const std::string& path,
                                            const std::string& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{absl::StrCat("cannot open --in file '", path, "'")};
  return ReadCurveCsv(in, column);
}

std::string ColumnName(Method m, bool multi) {
  return multi ? absl::StrCat("beta_", std::string(MethodName(m))) : "beta";
}

struct ComposeFlags {
  std::string pair;
  std::vector<double> params;
  int64_t n = 1;
  std::string method = "edgeworth";
  int degree = 2;
  std::string inverse = "numeric";
  GridFlag grid;
  int eps_grid = kDefaultEpsGridSize;
  std::optional<double> eps_max;
  OutputFlags output;
};

AccountantOptions MakeAccountantOptions(int alpha_grid, int degree,
                                        const std::string& inverse,
                                        int eps_grid,
                                        std::optional<double> eps_max) {
  AccountantOptions o;
  o.alpha_grid_size = alpha_grid;
  o.edgeworth_degree = degree;
  o.inverse = inverse == "cf" ? InverseMethod::kCornishFisher
                              : InverseMethod::kNumeric;
  o.exact.eps_grid_size = eps_grid;
  o.exact.eps_max = eps_max;
  return o;
}

absl::Status RunCompose(const ComposeFlags& f, std::ostream& out,
                        std::ostream& err) {
  const DistributionPair pair = MakePair(f.pair, f.params);
  const AccountantOptions opts = MakeAccountantOptions(
      ResolveGrid(f.grid), f.degree, f.inverse, f.eps_grid, f.eps_max);
  const std::vector<Method> methods = ExpandMethods(f.method);
  std::vector<std::pair<std::string, TradeoffCurve>> curves;
  for (Method m : methods) {
    if (m == Method::kExact && !pair.IsTrivial()) {
      ExactOptions xo = opts.exact;
      xo.alpha_grid_size = opts.alpha_grid_size;
      FDP_ASSIGN_OR_RETURN(ExactResult r, ComposeExact(pair, f.n, xo));
      if (r.truncation_warning) {
        err << "fdp: warning: eps grid truncation bound "
            << r.right_truncation_bound << " exceeds "
            << kTruncationWarningLevel << "; widen --eps-max\n";
      }
      curves.emplace_back(ColumnName(m, methods.size() > 1), std::move(r.curve));
    } else {
      FDP_ASSIGN_OR_RETURN(TradeoffCurve c, ComposeIid(pair, f.n, m, opts));
      curves.emplace_back(ColumnName(m, methods.size() > 1), std::move(c));
    }
  }
  return WithOutput(f.output.path, out, [&](std::ostream& os) {
    return EmitCurves(curves, os, f.output.format);
  });
}

struct SgdFlags {
  int64_t n = 1;
  double p = 0.0;
  double sigma = 1.0;
  std::string method = "edgeworth";
  int degree = 2;
  std::string inverse = "numeric";
  GridFlag grid;
  int eps_grid = kDefaultEpsGridSize;
  std::optional<double> eps_max;
  OutputFlags output;
};

absl::Status RunSgd(const SgdFlags& f, std::ostream& out) {
  if (auto probe = DistributionPair::SubsampledGaussian(f.p, f.sigma); !probe.ok()) {
    throw UsageFailure{std::string(probe.status().message())};
  }
  const AccountantOptions opts = MakeAccountantOptions(
      ResolveGrid(f.grid), f.degree, f.inverse, f.eps_grid, f.eps_max);
  const std::vector<Method> methods = ExpandMethods(f.method);
  std::vector<std::pair<std::string, TradeoffCurve>> curves;
  for (Method m : methods) {
    FDP_ASSIGN_OR_RETURN(TradeoffCurve c, SgdPrivacy(f.n, f.p, f.sigma, m, opts));
    curves.emplace_back(ColumnName(m, methods.size() > 1), std::move(c));
  }
  return WithOutput(f.output.path, out, [&](std::ostream& os) {
    return EmitCurves(curves, os, f.output.format);
  });
}

struct DualFlags {
  std::string in;
  std::string column;
  double eps_min = -10.0;
  double eps_max = 10.0;
  int eps_grid = kDefaultEpsGridSize;
  OutputFlags output;
};

absl::Status RunDual(const DualFlags& f, std::ostream& out) {
  if (!(f.eps_max > f.eps_min)) {
    throw UsageFailure{"--eps-max must be greater than --eps-min"};
  }
  FDP_ASSIGN_OR_RETURN(TradeoffCurve curve, ReadCurveFile(f.in, f.column));
  std::vector<double> eps(f.eps_grid);
  const double h = (f.eps_max - f.eps_min) / (f.eps_grid - 1);
  for (int i = 0; i < f.eps_grid; ++i) eps[i] = f.eps_min + h * i;
  eps.back() = f.eps_max;
  const DualCurve dual = PrimalToDual(curve, eps);
  return WithOutput(f.output.path, out, [&](std::ostream& os) {
    if (f.output.format == "json") {
      Json j;
      j["eps"] = ArrayOf(dual.epsilons());
      j["delta"] = ArrayOf(dual.deltas());
      os << j.dump() << '\n';
      return os.good() ? absl::OkStatus() : absl::DataLossError("write failed");
    }
    return WriteDualCsv(os, dual);
  });
}

struct InterpretFlags {
  std::string in;
  std::string column;
  std::string out;
};

absl::Status RunInterpret(const InterpretFlags& f, std::ostream& out) {
  FDP_ASSIGN_OR_RETURN(TradeoffCurve curve, ReadCurveFile(f.in, f.column));
  const bool symmetrize = !curve.IsSymmetric();
  if (symmetrize) curve = Symmetrize(curve);
  FDP_ASSIGN_OR_RETURN(PrivacyParams params, Interpret(curve));
  Json j;
  j["mu_star"] = params.mu_star;
  j["gamma"] = params.gamma;
  j["alpha_star"] = params.alpha_star;
  if (symmetrize) j["symmetrized"] = true;
  return WithOutput(f.out, out, [&](std::ostream& os) {
    os << j.dump() << '\n';
    return os.good() ? absl::OkStatus() : absl::DataLossError("write failed");
  });
}

struct BenchFlags {
  std::string pair;
  std::vector<double> params;
  std::vector<int64_t> n_list;
  std::vector<std::string> methods = {"clt", "edgeworth", "exact"};
  GridFlag grid;
  int eps_grid = kDefaultEpsGridSize;
  std::optional<double> eps_step;
  int repeats = 3;
  OutputFlags output;
};

absl::Status RunBench(const BenchFlags& f, std::ostream& out) {
  const DistributionPair pair = MakePair(f.pair, f.params);
  AccountantOptions opts =
      MakeAccountantOptions(ResolveGrid(f.grid), 2, "numeric", f.eps_grid, {});
  opts.exact.eps_step = f.eps_step;
  struct Row {
    std::string method;
    int64_t n;
    double seconds;
  };
  std::vector<Row> rows;
  for (const std::string& name : f.methods) {
    const Method m = *ParseMethod(name);
    for (int64_t n : f.n_list) {
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < f.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        FDP_ASSIGN_OR_RETURN(TradeoffCurve c, ComposeIid(pair, n, m, opts));
        const std::chrono::duration<double> took =
            std::chrono::steady_clock::now() - start;
        best = std::min(best, took.count());
        (void)c;
      }
      rows.push_back({name, n, best});
    }
  }
  return WithOutput(f.output.path, out, [&](std::ostream& os) {
    if (f.output.format == "json") {
      Json j = Json::array();
      for (const Row& r : rows) {
        j.push_back({{"method", r.method}, {"n", r.n}, {"seconds", r.seconds}});
      }
      os << j.dump() << '\n';
    } else {
      os << "method,n,seconds\n";
      for (const Row& r : rows) {
        os << r.method << ',' << r.n << ',' << FormatDouble(r.seconds) << '\n';
      }
    }
    return os.good() ? absl::OkStatus() : absl::DataLossError("write failed");
  });
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Trade-off curves for composed private mechanisms", "fdp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const std::vector<std::string> pairs = {"gaussian", "laplace",
                                          "subsampled-gaussian"};
  const std::vector<std::string> methods = {"clt", "edgeworth", "exact", "all"};

  ComposeFlags compose;
  auto* c = app.add_subcommand("compose", "Compose n copies of a pair");
  c->add_option("--pair", compose.pair, "Distribution pair")
      ->required()
      ->check(CLI::IsMember(pairs));
  c->add_option("--param", compose.params,
                "Pair parameters: mu | theta | p,sigma")
      ->required()
      ->delimiter(',');
  c->add_option("--n", compose.n, "Number of compositions")
      ->required()
      ->check(CLI::PositiveNumber);
  c->add_option("--method", compose.method, "Engine")
      ->check(CLI::IsMember(methods));
  c->add_option("--degree", compose.degree, "Edgeworth degree")
      ->check(CLI::IsMember({0, 2}));
  c->add_option("--inverse", compose.inverse, "Quantile method")
      ->check(CLI::IsMember({"numeric", "cf"}));
  AddGridFlag(c, &compose.grid);
  c->add_option("--eps-grid", compose.eps_grid, "Exact engine eps grid points")
      ->check(CLI::Range(3, 10000000));
  c->add_option("--eps-max", compose.eps_max, "Exact engine eps half-width")
      ->check(CLI::PositiveNumber);
  AddOutputFlags(c, &compose.output);

  DualFlags dual;
  auto* d = app.add_subcommand("dual", "Convert a curve CSV to (eps, delta)");
  d->add_option("--in", dual.in, "Curve CSV")->required();
  d->add_option("--column", dual.column, "Beta column to read");
  d->add_option("--eps-min", dual.eps_min, "Smallest eps");
  d->add_option("--eps-max", dual.eps_max, "Largest eps");
  d->add_option("--eps-grid", dual.eps_grid, "Number of eps points")
      ->check(CLI::Range(2, 10000000));
  AddOutputFlags(d, &dual.output);

  SgdFlags sgd;
  auto* s = app.add_subcommand("sgd", "Privacy of noisy SGD, symmetrized");
  s->add_option("--n", sgd.n, "Number of steps")
      ->required()
      ->check(CLI::PositiveNumber);
  s->add_option("--p", sgd.p, "Sampling rate")->required();
  s->add_option("--sigma", sgd.sigma, "Noise multiplier")->required();
  s->add_option("--method", sgd.method, "Engine")->check(CLI::IsMember(methods));
  s->add_option("--degree", sgd.degree, "Edgeworth degree")
      ->check(CLI::IsMember({0, 2}));
  s->add_option("--inverse", sgd.inverse, "Quantile method")
      ->check(CLI::IsMember({"numeric", "cf"}));
  AddGridFlag(s, &sgd.grid);
  s->add_option("--eps-grid", sgd.eps_grid, "Exact engine eps grid points")
      ->check(CLI::Range(3, 10000000));
  s->add_option("--eps-max", sgd.eps_max, "Exact engine eps half-width")
      ->check(CLI::PositiveNumber);
  AddOutputFlags(s, &sgd.output);

  InterpretFlags interpret;
  auto* i = app.add_subcommand(
      "interpret", "Summarize a curve CSV by (mu*, gamma, alpha*) as JSON");
  i->add_option("--in", interpret.in, "Curve CSV")->required();
  i->add_option("--column", interpret.column, "Beta column to read");
  i->add_option("--out", interpret.out, "Output file (default: stdout)");

  BenchFlags bench;
  auto* b = app.add_subcommand("bench", "Wall-clock time per engine and n");
  b->add_option("--pair", bench.pair, "Distribution pair")
      ->required()
      ->check(CLI::IsMember(pairs));
  b->add_option("--param", bench.params, "Pair parameters")
      ->required()
      ->delimiter(',');
  b->add_option("--n-list", bench.n_list, "Comma-separated n values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  b->add_option("--methods", bench.methods, "Engines to time")
      ->delimiter(',')
      ->check(CLI::IsMember({"clt", "edgeworth", "exact"}));
  AddGridFlag(b, &bench.grid);
  b->add_option("--eps-grid", bench.eps_grid, "Exact engine eps grid points")
      ->check(CLI::Range(3, 10000000));
  b->add_option("--eps-step", bench.eps_step,
                "Fix the exact engine's eps spacing instead of its size")
      ->check(CLI::PositiveNumber);
  b->add_option("--repeats", bench.repeats, "Timed runs per cell (minimum kept)")
      ->check(CLI::Range(1, 1000));
  AddOutputFlags(b, &bench.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fdp: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  absl::Status status;
  try {
    if (*c) {
      status = RunCompose(compose, out, err);
    } else if (*d) {
      status = RunDual(dual, out);
    } else if (*s) {
      status = RunSgd(sgd, out);
    } else if (*i) {
      status = RunInterpret(interpret, out);
    } else if (*b) {
      status = RunBench(bench, out);
    }
  } catch (const UsageFailure& u) {
    err << "fdp: " << u.message << "\n\n" << app.help();
    return kExitUsage;
  }
  if (!status.ok()) {
    err << "fdp: " << status.message() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace fdp::cli
