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

#include "fdp/accountant.h"

#include <cmath>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fdp/status_macros.h"

namespace fdp {

absl::StatusOr<Method> ParseMethod(std::string_view name) {
  if (name == "clt") return Method::kClt;
  if (name == "edgeworth") return Method::kEdgeworth;
  if (name == "exact") return Method::kExact;
  return absl::InvalidArgumentError(absl::StrCat("unknown method: ", std::string(name)));
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kClt:
      return "clt";
    case Method::kEdgeworth:
      return "edgeworth";
    case Method::kExact:
      return "exact";
  }
  return "unknown";
}

absl::StatusOr<TradeoffCurve> ComposeIid(const DistributionPair& pair,
                                         int64_t n, Method method,
                                         const AccountantOptions& options) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (pair.IsTrivial()) return MakeCurve(IdentityFamily{}, options.alpha_grid_size);
  switch (method) {
    case Method::kClt: {
      EdgeworthOptions eo;
      eo.degree = 0;
      eo.unit_variance_ratio = true;
      return ComposeEdgeworthCurve(pair, n, eo, options.alpha_grid_size);
    }
    case Method::kEdgeworth: {
      EdgeworthOptions eo;
      eo.degree = options.edgeworth_degree;
      eo.inverse = options.inverse;
      return ComposeEdgeworthCurve(pair, n, eo, options.alpha_grid_size);
    }
    case Method::kExact: {
      ExactOptions xo = options.exact;
      xo.alpha_grid_size = options.alpha_grid_size;
      return ComposeExactCurve(pair, n, xo);
    }
  }
  return absl::InvalidArgumentError("unknown method");
}

double SgdCltMu(int64_t n, double p, double sigma) {
  return p * std::sqrt(static_cast<double>(n) *
                       std::expm1(1.0 / (sigma * sigma)));
}

absl::StatusOr<TradeoffCurve> SgdPrivacy(int64_t n, double p, double sigma,
                                         Method method,
                                         const AccountantOptions& options) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  FDP_ASSIGN_OR_RETURN(DistributionPair pair,
                       DistributionPair::SubsampledGaussian(p, sigma));
  if (pair.IsTrivial()) return MakeCurve(IdentityFamily{}, options.alpha_grid_size);
  if (method == Method::kClt) {
    return MakeCurve(GdpFamily{SgdCltMu(n, p, sigma)}, options.alpha_grid_size);
  }
  FDP_ASSIGN_OR_RETURN(TradeoffCurve g, ComposeIid(pair, n, method, options));
  return Symmetrize(g);
}

absl::StatusOr<TradeoffCurve> SubsampleCurve(const TradeoffCurve& f, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError("p must be in [0, 1]");
  }
  std::vector<double> alphas(f.alphas().begin(), f.alphas().end());
  std::vector<double> betas(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    betas[i] = p * f.betas()[i] + (1.0 - p) * (1.0 - alphas[i]);
  }
  return Symmetrize(TradeoffCurve::FromSamples(std::move(alphas),
                                               std::move(betas)));
}

}  // namespace fdp
