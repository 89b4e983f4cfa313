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

#ifndef FDP_INTERPRETER_H_
#define FDP_INTERPRETER_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "fdp/tradeoff_curve.h"

namespace fdp {

// Summarizes a symmetric curve by (mu*, gamma): the GDP parameter whose curve
// crosses the diagonal at the same point, and the area under the curve.
// Returns FailedPrecondition when f is not symmetric within `tol_cells` grid
// cells; callers holding an asymmetric curve should Symmetrize it first.
absl::StatusOr<PrivacyParams> Interpret(const TradeoffCurve& f,
                                        double tol_cells = 3.0);

// Position of `b` relative to `a` in the (mu*, gamma) partial order.
enum class PrivacyOrder { kMorePrivate, kLessPrivate, kIncomparable, kEqual };

inline constexpr double kCompareTolerance = 1e-12;

PrivacyOrder Compare(const PrivacyParams& a, const PrivacyParams& b);

std::string_view PrivacyOrderName(PrivacyOrder order);

}  // namespace fdp

#endif  // FDP_INTERPRETER_H_
