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

#include "fdp/cumulants.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "fdp/status_macros.h"

namespace fdp {

double CompositionCumulants::Standardized(int r) const {
  return bold_kappa[r - 1] / std::pow(sigma_n, r);
}

absl::StatusOr<CumulantSet> MomentsToCumulants(std::span<const double> moments) {
  if (moments.size() < 4) {
    return absl::InvalidArgumentError("need four moments");
  }
  const double m1 = moments[0];
  const double m2 = moments[1];
  const double m3 = moments[2];
  const double m4 = moments[3];
  CumulantSet c;
  c.kappa[0] = m1;
  c.kappa[1] = m2 - m1 * m1;
  c.kappa[2] = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
  c.kappa[3] = m4 - 4.0 * m3 * m1 - 3.0 * m2 * m2 + 12.0 * m2 * m1 * m1 -
               6.0 * m1 * m1 * m1 * m1;
  if (!(c.kappa[1] > 0.0)) {
    return absl::FailedPreconditionError(
        "degenerate variance: kappa_2 <= 0 (P and Q identical?)");
  }
  return c;
}

double FifthCumulant(std::span<const double> m) {
  const double m1 = m[0], m2 = m[1], m3 = m[2], m4 = m[3], m5 = m[4];
  return m5 - 5.0 * m4 * m1 - 10.0 * m3 * m2 + 20.0 * m3 * m1 * m1 +
         30.0 * m2 * m2 * m1 - 60.0 * m2 * m1 * m1 * m1 +
         24.0 * std::pow(m1, 5);
}

absl::StatusOr<CompositionCumulants> Aggregate(
    std::span<const CumulantSet> components) {
  if (components.empty()) {
    return absl::InvalidArgumentError("cannot aggregate an empty composition");
  }
  CompositionCumulants cc;
  for (const CumulantSet& c : components) {
    for (int r = 0; r < 4; ++r) cc.bold_kappa[r] += c.kappa[r];
  }
  cc.n = static_cast<int64_t>(components.size());
  cc.sigma_n = std::sqrt(cc.bold_kappa[1]);
  return cc;
}

CompositionCumulants Aggregate(const CumulantSet& component, int64_t n) {
  CompositionCumulants cc;
  for (int r = 0; r < 4; ++r) {
    cc.bold_kappa[r] = static_cast<double>(n) * component.kappa[r];
  }
  cc.n = n;
  cc.sigma_n = std::sqrt(cc.bold_kappa[1]);
  return cc;
}

absl::StatusOr<CumulantSet> LlrCumulants(const DistributionPair& pair,
                                         Law law) {
  FDP_ASSIGN_OR_RETURN(std::vector<double> first, LlrMoments(pair, law, 2));
  const double mean = first[0];
  FDP_ASSIGN_OR_RETURN(std::vector<double> central,
                       LlrMoments(pair, law, 4, mean));
  // Cumulants of order >= 2 are shift invariant; kappa_1 picks up the shift.
  FDP_ASSIGN_OR_RETURN(CumulantSet c, MomentsToCumulants(central));
  c.kappa[0] += mean;
  return c;
}

absl::StatusOr<double> LlrFifthCumulant(const DistributionPair& pair, Law law) {
  FDP_ASSIGN_OR_RETURN(std::vector<double> first, LlrMoments(pair, law, 2));
  FDP_ASSIGN_OR_RETURN(std::vector<double> central,
                       LlrMoments(pair, law, 5, first[0]));
  return FifthCumulant(central);
}

}  // namespace fdp
