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

// Cumulants of the log-likelihood ratio and their sums over a composition.

#ifndef FDP_CUMULANTS_H_
#define FDP_CUMULANTS_H_

#include <array>
#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "fdp/distributions.h"

namespace fdp {

// kappa_1..kappa_4 of one component under one law.
struct CumulantSet {
  std::array<double, 4> kappa{};

  double mean() const { return kappa[0]; }
  double variance() const { return kappa[1]; }
};

// Sums over n components: bold_kappa[r-1] = sum_i kappa_r(L_i), and
// sigma_n = sqrt(bold_kappa[1]).
struct CompositionCumulants {
  std::array<double, 4> bold_kappa{};
  double sigma_n = 0.0;
  int64_t n = 0;

  // bold_kappa_r / sigma_n^r; equals 1 for r = 2.
  double Standardized(int r) const;
};

// kappa_1 = mu_1, kappa_2 = mu_2 - mu_1^2, kappa_3 = mu_3 - 3 mu_2 mu_1 +
// 2 mu_1^3, kappa_4 = mu_4 - 4 mu_3 mu_1 - 3 mu_2^2 + 12 mu_2 mu_1^2 -
// 6 mu_1^4. Needs at least four moments; FailedPrecondition if kappa_2 <= 0.
absl::StatusOr<CumulantSet> MomentsToCumulants(std::span<const double> moments);

// kappa_5 from five non-central moments, for truncation diagnostics.
double FifthCumulant(std::span<const double> moments);

// Elementwise sum over components. InvalidArgument on an empty list.
absl::StatusOr<CompositionCumulants> Aggregate(
    std::span<const CumulantSet> components);

// n iid copies of `component`: O(1).
CompositionCumulants Aggregate(const CumulantSet& component, int64_t n);

// Moments of L under `law` (taken about the mean for stability, then shifted
// back) converted to cumulants.
absl::StatusOr<CumulantSet> LlrCumulants(const DistributionPair& pair, Law law);

// kappa_5 of L under `law`.
absl::StatusOr<double> LlrFifthCumulant(const DistributionPair& pair, Law law);

}  // namespace fdp

#endif  // FDP_CUMULANTS_H_
