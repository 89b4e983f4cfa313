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

#ifndef FDP_CSV_IO_H_
#define FDP_CSV_IO_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fdp/exact_composition.h"
#include "fdp/tradeoff_curve.h"

namespace fdp {

// %.17g, which round-trips every double and never uses a locale separator.
std::string FormatDouble(double v);

struct NamedColumn {
  std::string name;
  std::span<const double> values;
};

// Header `alpha,<name>...`, one row per alpha, LF line endings.
absl::Status WriteColumnsCsv(std::ostream& out, std::span<const double> alphas,
                             std::span<const NamedColumn> columns);

absl::Status WriteCurveCsv(std::ostream& out, const TradeoffCurve& f);

absl::Status WriteDualCsv(std::ostream& out, const DualCurve& d);

absl::Status WriteDeltaGridCsv(std::ostream& out, const DeltaGrid& d);

// Reads a curve from a CSV whose first column is `alpha`. With an empty
// `column` the file must have exactly one other column; otherwise the named
// column is used.
absl::StatusOr<TradeoffCurve> ReadCurveCsv(std::istream& in,
                                           const std::string& column = "");

absl::StatusOr<DeltaGrid> ReadDeltaGridCsv(std::istream& in);

}  // namespace fdp

#endif  // FDP_CSV_IO_H_
