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

#include "fdp/edgeworth.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fdp/normal.h"
#include "fdp/status_macros.h"

namespace fdp {
namespace {

constexpr double kQuantileLimit = 64.0;
constexpr double kResidualTol = 1e-10;
constexpr double kEndpointGuard = 1e-6;

// Bisection on a bracket with g(lo) and g(hi) of opposite sign.
double Bisect(const EdgeworthApproximant& a, double target, double lo,
              double hi) {
  double glo = EdgeworthCdf(a, lo) - target;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double gm = EdgeworthCdf(a, mid) - target;
    if (std::abs(gm) <= 0.01 * kResidualTol ||
        hi - lo <= 1e-15 * std::max(1.0, std::abs(mid))) {
      return mid;
    }
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double EdgeworthCdf(const EdgeworthApproximant& a, double h) {
  const double base = NormalCdf(h);
  if (a.degree == 0) return base;
  const double pdf = NormalPdf(h);
  if (pdf == 0.0) return base;
  const double s3 = a.cc.Standardized(3);
  const double h2 = h * h;
  double value = base - s3 / 6.0 * (h2 - 1.0) * pdf;
  if (a.degree >= 2) {
    const double s4 = a.cc.Standardized(4);
    const double he3 = h * (h2 - 3.0);
    const double he5 = h * (h2 * h2 - 10.0 * h2 + 15.0);
    value -= (s4 / 24.0 * he3 + s3 * s3 / 72.0 * he5) * pdf;
  }
  return value;
}

double CornishFisherQuantile(const EdgeworthApproximant& a, double alpha) {
  const double z = NormalUpperQuantile(alpha);
  if (a.degree == 0) return z;
  const double s3 = a.cc.Standardized(3);
  const double z2 = z * z;
  double q = z + s3 / 6.0 * (z2 - 1.0);
  if (a.degree >= 2) {
    const double s4 = a.cc.Standardized(4);
    q += s4 / 24.0 * z * (z2 - 3.0) - s3 * s3 / 36.0 * z * (2.0 * z2 - 5.0);
  }
  return q;
}

absl::StatusOr<double> NumericQuantile(const EdgeworthApproximant& a,
                                       double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError("alpha must be in (0, 1)");
  }
  if (a.degree == 0) return NormalUpperQuantile(alpha);
  const double target = 1.0 - alpha;
  auto g = [&](double h) { return EdgeworthCdf(a, h) - target; };

  double h0 = CornishFisherQuantile(a, alpha);
  if (!std::isfinite(h0)) h0 = 0.0;
  h0 = std::clamp(h0, -kQuantileLimit, kQuantileLimit);
  const double g0 = g(h0);
  if (std::abs(g0) <= kResidualTol) return h0;

  // Walk outward from h0 with doubling steps; the first sign change on either
  // side brackets the root nearest the initializer.
  double left = h0, right = h0;
  double gleft = g0, gright = g0;
  for (double step = 0.25;; step *= 2.0) {
    const double r = std::min(h0 + step, kQuantileLimit);
    const double l = std::max(h0 - step, -kQuantileLimit);
    const double gr = g(r);
    const double gl = g(l);
    const bool right_hit = r > right && (gr < 0.0) != (gright < 0.0);
    const bool left_hit = l < left && (gl < 0.0) != (gleft < 0.0);
    if (right_hit && left_hit) {
      const double root_r = Bisect(a, target, right, r);
      const double root_l = Bisect(a, target, l, left);
      return std::abs(root_r - h0) <= std::abs(root_l - h0) ? root_r : root_l;
    }
    if (right_hit) return Bisect(a, target, right, r);
    if (left_hit) return Bisect(a, target, l, left);
    if (r >= kQuantileLimit && l <= -kQuantileLimit) break;
    right = r;
    gright = gr;
    left = l;
    gleft = gl;
  }
  return absl::NotFoundError(absl::StrCat(
      "no sign change of F_EW(h) - ", target, " within [-64, 64]"));
}

absl::StatusOr<EdgeworthComposer> EdgeworthComposer::Create(
    const CumulantSet& under_p, const CumulantSet& under_q, int64_t n,
    const EdgeworthOptions& options) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (options.degree < 0 || options.degree > 2) {
    return absl::InvalidArgumentError("degree must be 0, 1 or 2");
  }
  if (!(under_p.variance() > 0.0) || !(under_q.variance() > 0.0)) {
    return absl::FailedPreconditionError("degenerate LLR variance");
  }
  EdgeworthApproximant p{Aggregate(under_p, n), options.degree};
  EdgeworthApproximant q{Aggregate(under_q, n), options.degree};
  const double mu_n = (q.cc.bold_kappa[0] - p.cc.bold_kappa[0]) / p.cc.sigma_n;
  const double ratio =
      options.unit_variance_ratio ? 1.0 : p.cc.sigma_n / q.cc.sigma_n;
  return EdgeworthComposer(p, q, options, mu_n, ratio);
}

absl::StatusOr<EdgeworthComposer> EdgeworthComposer::ForPair(
    const DistributionPair& pair, int64_t n, const EdgeworthOptions& options) {
  FDP_ASSIGN_OR_RETURN(CumulantSet under_p, LlrCumulants(pair, Law::kP));
  FDP_ASSIGN_OR_RETURN(CumulantSet under_q, LlrCumulants(pair, Law::kQ));
  return Create(under_p, under_q, n, options);
}

absl::StatusOr<double> EdgeworthComposer::Evaluate(double alpha) const {
  if (std::isnan(alpha)) return absl::InvalidArgumentError("alpha is NaN");
  if (alpha <= 0.0) return 1.0;
  if (alpha >= 1.0) return 0.0;
  const double a = std::clamp(alpha, kEndpointGuard, 1.0 - kEndpointGuard);
  double h = 0.0;
  if (options_.degree == 0) {
    h = NormalUpperQuantile(a);
  } else if (options_.inverse == InverseMethod::kCornishFisher) {
    h = CornishFisherQuantile(p_, a);
  } else {
    FDP_ASSIGN_OR_RETURN(h, NumericQuantile(p_, a));
  }
  return std::clamp(EdgeworthCdf(q_, (h - mu_n_) * ratio_), 0.0, 1.0);
}

absl::StatusOr<TradeoffCurve> EdgeworthComposer::Curve(int grid_size) const {
  if (grid_size < 2) return absl::InvalidArgumentError("grid_size must be >= 2");
  std::vector<double> alphas = TradeoffCurve::UniformGrid(grid_size);
  std::vector<double> betas(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    FDP_ASSIGN_OR_RETURN(betas[i], Evaluate(alphas[i]));
  }
  return TradeoffCurve::FromSamples(std::move(alphas), std::move(betas));
}

absl::StatusOr<double> ComposeEdgeworth(const DistributionPair& pair, int64_t n,
                                        double alpha,
                                        const EdgeworthOptions& options) {
  FDP_ASSIGN_OR_RETURN(EdgeworthComposer composer,
                       EdgeworthComposer::ForPair(pair, n, options));
  return composer.Evaluate(alpha);
}

absl::StatusOr<TradeoffCurve> ComposeEdgeworthCurve(
    const DistributionPair& pair, int64_t n, const EdgeworthOptions& options,
    int grid_size) {
  FDP_ASSIGN_OR_RETURN(EdgeworthComposer composer,
                       EdgeworthComposer::ForPair(pair, n, options));
  return composer.Curve(grid_size);
}

absl::StatusOr<TruncationTerms> EdgeworthTruncationTerms(
    const DistributionPair& pair, Law law, int64_t n) {
  FDP_ASSIGN_OR_RETURN(CumulantSet c, LlrCumulants(pair, law));
  FDP_ASSIGN_OR_RETURN(double k5, LlrFifthCumulant(pair, law));
  const CompositionCumulants cc = Aggregate(c, n);
  TruncationTerms t;
  t.fifth_cumulant_term =
      static_cast<double>(n) * k5 / (120.0 * std::pow(cc.sigma_n, 5));
  t.squared_fourth_term =
      cc.bold_kappa[3] * cc.bold_kappa[3] / (576.0 * std::pow(cc.sigma_n, 8));
  return t;
}

}  // namespace fdp
