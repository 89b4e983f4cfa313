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

#include "fdp/csv_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "fdp/status_macros.h"

namespace fdp {
namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

absl::StatusOr<double> ParseDouble(absl::string_view text, int line) {
  text = absl::StripAsciiWhitespace(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", line, ": not a number: '", std::string(text), "'"));
  }
  return v;
}

absl::StatusOr<Table> ReadTable(std::istream& in) {
  Table t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    absl::string_view view = absl::StripTrailingAsciiWhitespace(line);
    if (view.empty()) continue;
    std::vector<absl::string_view> cells = absl::StrSplit(view, ',');
    if (t.header.empty()) {
      for (auto c : cells) {
        t.header.emplace_back(absl::StripAsciiWhitespace(c));
      }
      t.columns.resize(t.header.size());
      continue;
    }
    if (cells.size() != t.header.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected ", t.header.size(), " fields"));
    }
    for (size_t i = 0; i < cells.size(); ++i) {
      FDP_ASSIGN_OR_RETURN(double v, ParseDouble(cells[i], line_no));
      t.columns[i].push_back(v);
    }
  }
  if (t.header.empty()) return absl::InvalidArgumentError("empty CSV input");
  return t;
}

int FindColumn(const Table& t, const std::string& name) {
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

absl::Status CheckStream(const std::ostream& out) {
  return out.good() ? absl::OkStatus()
                    : absl::DataLossError("failed writing CSV output");
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

absl::Status WriteColumnsCsv(std::ostream& out, std::span<const double> alphas,
                             std::span<const NamedColumn> columns) {
  out << "alpha";
  for (const auto& c : columns) {
    if (c.values.size() != alphas.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("column ", c.name, " has the wrong length"));
    }
    out << ',' << c.name;
  }
  out << '\n';
  for (size_t i = 0; i < alphas.size(); ++i) {
    out << FormatDouble(alphas[i]);
    for (const auto& c : columns) out << ',' << FormatDouble(c.values[i]);
    out << '\n';
  }
  return CheckStream(out);
}

absl::Status WriteCurveCsv(std::ostream& out, const TradeoffCurve& f) {
  const NamedColumn col{"beta", f.betas()};
  return WriteColumnsCsv(out, f.alphas(), std::span<const NamedColumn>(&col, 1));
}

absl::Status WriteDualCsv(std::ostream& out, const DualCurve& d) {
  out << "eps,delta\n";
  for (size_t i = 0; i < d.size(); ++i) {
    out << FormatDouble(d.epsilons()[i]) << ',' << FormatDouble(d.deltas()[i])
        << '\n';
  }
  return CheckStream(out);
}

absl::Status WriteDeltaGridCsv(std::ostream& out, const DeltaGrid& d) {
  out << "eps,delta,k\n";
  for (size_t i = 0; i < d.epsilons.size(); ++i) {
    out << FormatDouble(d.epsilons[i]) << ',' << FormatDouble(d.deltas[i])
        << ',' << d.k << '\n';
  }
  return CheckStream(out);
}

absl::StatusOr<TradeoffCurve> ReadCurveCsv(std::istream& in,
                                           const std::string& column) {
  FDP_ASSIGN_OR_RETURN(Table t, ReadTable(in));
  const int a = FindColumn(t, "alpha");
  if (a < 0) return absl::InvalidArgumentError("CSV has no 'alpha' column");
  int b = -1;
  if (column.empty()) {
    if (t.header.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "CSV has ", t.header.size() - 1,
          " value columns; choose one of: ", absl::StrJoin(t.header, ", ")));
    }
    b = 1 - a;
  } else {
    b = FindColumn(t, column);
    if (b < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("CSV has no column '", column, "'"));
    }
  }
  return TradeoffCurve::Create(std::move(t.columns[a]), std::move(t.columns[b]));
}

absl::StatusOr<DeltaGrid> ReadDeltaGridCsv(std::istream& in) {
  FDP_ASSIGN_OR_RETURN(Table t, ReadTable(in));
  const int e = FindColumn(t, "eps");
  const int d = FindColumn(t, "delta");
  const int k = FindColumn(t, "k");
  if (e < 0 || d < 0 || k < 0) {
    return absl::InvalidArgumentError("expected columns eps,delta,k");
  }
  DeltaGrid g;
  g.epsilons = std::move(t.columns[e]);
  g.deltas = std::move(t.columns[d]);
  if (g.epsilons.size() < 2) {
    return absl::InvalidArgumentError("delta grid needs at least 2 rows");
  }
  const double k0 = t.columns[k].front();
  for (double v : t.columns[k]) {
    if (v != k0 || v < 0.0 || v != std::floor(v)) {
      return absl::InvalidArgumentError("column k must hold one whole number");
    }
  }
  for (size_t i = 0; i < g.deltas.size(); ++i) {
    if (!(g.deltas[i] >= 0.0 && g.deltas[i] <= 1.0)) {
      return absl::InvalidArgumentError("delta outside [0, 1]");
    }
    if (i > 0 && !(g.epsilons[i] > g.epsilons[i - 1])) {
      return absl::InvalidArgumentError("eps must be strictly increasing");
    }
  }
  g.k = static_cast<int64_t>(k0);
  return g;
}

}  // namespace fdp
