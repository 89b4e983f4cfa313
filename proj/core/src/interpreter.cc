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

#include "fdp/interpreter.h"

#include <cmath>

#include "absl/status/status.h"
#include "fdp/normal.h"
#include "fdp/status_macros.h"

namespace fdp {

absl::StatusOr<PrivacyParams> Interpret(const TradeoffCurve& f,
                                        double tol_cells) {
  if (!f.IsSymmetric(tol_cells)) {
    return absl::FailedPreconditionError(
        "curve is not symmetric; symmetrize it before interpreting");
  }
  PrivacyParams out;
  FDP_ASSIGN_OR_RETURN(out.alpha_star, FixedPoint(f));
  // Phi^{-1}(1 - a) - Phi^{-1}(a) = -2 Phi^{-1}(a).
  out.mu_star = out.alpha_star >= 0.5
                    ? 0.0
                    : -2.0 * NormalQuantile(out.alpha_star);
  out.gamma = AreaUnderCurve(f);
  return out;
}

PrivacyOrder Compare(const PrivacyParams& a, const PrivacyParams& b) {
  const double dmu = b.mu_star - a.mu_star;
  const double dgamma = b.gamma - a.gamma;
  const bool mu_tie = std::abs(dmu) <= kCompareTolerance;
  const bool gamma_tie = std::abs(dgamma) <= kCompareTolerance;
  if (mu_tie && gamma_tie) return PrivacyOrder::kEqual;
  if (dmu < 0.0 && dgamma > 0.0 && !mu_tie && !gamma_tie) {
    return PrivacyOrder::kMorePrivate;
  }
  if (dmu > 0.0 && dgamma < 0.0 && !mu_tie && !gamma_tie) {
    return PrivacyOrder::kLessPrivate;
  }
  return PrivacyOrder::kIncomparable;
}

std::string_view PrivacyOrderName(PrivacyOrder order) {
  switch (order) {
    case PrivacyOrder::kMorePrivate:
      return "more_private";
    case PrivacyOrder::kLessPrivate:
      return "less_private";
    case PrivacyOrder::kIncomparable:
      return "incomparable";
    case PrivacyOrder::kEqual:
      return "equal";
  }
  return "unknown";
}

}  // namespace fdp
