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

#ifndef FDP_ACCOUNTANT_H_
#define FDP_ACCOUNTANT_H_

#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"
#include "fdp/distributions.h"
#include "fdp/edgeworth.h"
#include "fdp/exact_composition.h"
#include "fdp/tradeoff_curve.h"

namespace fdp {

enum class Method { kClt, kEdgeworth, kExact };

absl::StatusOr<Method> ParseMethod(std::string_view name);
std::string_view MethodName(Method method);

struct AccountantOptions {
  int alpha_grid_size = kDefaultAlphaGridSize;
  int edgeworth_degree = 2;
  InverseMethod inverse = InverseMethod::kNumeric;
  // alpha_grid_size here overrides the one inside `exact`.
  ExactOptions exact;
};

// The n-fold composition of T(P, Q) for an iid pair. The result may be
// asymmetric.
//   clt:       G_{mu_n} with mu_n the standardized gap of the LLR sum means.
//   edgeworth: the degree-`edgeworth_degree` expansion under both laws.
//   exact:     the dual-domain recursion.
absl::StatusOr<TradeoffCurve> ComposeIid(const DistributionPair& pair,
                                         int64_t n, Method method,
                                         const AccountantOptions& options = {});

// p * sqrt(n (e^{1/sigma^2} - 1)), the limiting GDP parameter of noisy SGD.
double SgdCltMu(int64_t n, double p, double sigma);

// Privacy of n noisy SGD steps with sampling rate p and noise sigma, after
// symmetrization. clt uses the closed-form limit; the other methods compose
// the subsampled Gaussian pair and then apply min{g, g^{-1}}**.
absl::StatusOr<TradeoffCurve> SgdPrivacy(int64_t n, double p, double sigma,
                                         Method method,
                                         const AccountantOptions& options = {});

// min{f_p, f_p^{-1}}** with f_p = p f + (1 - p) Id.
absl::StatusOr<TradeoffCurve> SubsampleCurve(const TradeoffCurve& f, double p);

}  // namespace fdp

#endif  // FDP_ACCOUNTANT_H_
