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

// Trade-off functions f : [0, 1] -> [0, 1] (type II error as a function of
// type I error) and their (epsilon, delta) dual representation.
//
// A TradeoffCurve is a sampled, non-increasing function on a sorted alpha grid
// with alpha_0 = 0 and alpha_last = 1. Between samples it is linear. All
// operations here are pure and work on the samples only, so the errors they
// introduce are bounded by one grid cell.

#ifndef FDP_TRADEOFF_CURVE_H_
#define FDP_TRADEOFF_CURVE_H_

#include <span>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"

namespace fdp {

inline constexpr int kDefaultAlphaGridSize = 10001;

class TradeoffCurve {
 public:
  // Validates the grid (strictly increasing, 0 and 1 at the ends) and the
  // samples (finite, non-increasing up to `monotone_tol`). Betas are clamped
  // to [0, 1] and small monotonicity violations are repaired.
  static absl::StatusOr<TradeoffCurve> Create(std::vector<double> alphas,
                                              std::vector<double> betas,
                                              double monotone_tol = 1e-9);

  // For engines whose raw output may leave [0, 1] or wiggle: clamps, then
  // takes the running minimum from the left. `alphas` must already be a valid
  // grid.
  static TradeoffCurve FromSamples(std::vector<double> alphas,
                                   std::vector<double> betas);

  // `grid_size` points, uniformly spaced on [0, 1].
  static std::vector<double> UniformGrid(int grid_size);

  std::span<const double> alphas() const { return alphas_; }
  std::span<const double> betas() const { return betas_; }
  size_t size() const { return alphas_.size(); }

  // Largest distance between neighbouring alphas.
  double grid_spacing() const;

  // Piecewise-linear value at alpha (clamped into [0, 1]).
  double operator()(double alpha) const;

  // True when sup |f - f^{-1}| <= tol_cells * grid_spacing(), where the gap
  // at each sample is measured along whichever axis is shorter so that steep
  // and flat stretches are treated alike.
  bool IsSymmetric(double tol_cells = 3.0) const;

 private:
  TradeoffCurve(std::vector<double> alphas, std::vector<double> betas)
      : alphas_(std::move(alphas)), betas_(std::move(betas)) {}

  std::vector<double> alphas_;
  std::vector<double> betas_;
};

// delta(eps) sampled on a sorted epsilon grid; epsilons may be negative.
class DualCurve {
 public:
  static absl::StatusOr<DualCurve> Create(std::vector<double> epsilons,
                                          std::vector<double> deltas,
                                          double monotone_tol = 1e-9);
  // Clamps into [max(1 - e^eps, 0), 1] and enforces non-increasing deltas.
  static DualCurve FromSamples(std::vector<double> epsilons,
                               std::vector<double> deltas);

  std::span<const double> epsilons() const { return epsilons_; }
  std::span<const double> deltas() const { return deltas_; }
  size_t size() const { return epsilons_.size(); }

  // Linear interpolation; outside the grid returns the end values.
  double operator()(double eps) const;

 private:
  DualCurve(std::vector<double> epsilons, std::vector<double> deltas)
      : epsilons_(std::move(epsilons)), deltas_(std::move(deltas)) {}

  std::vector<double> epsilons_;
  std::vector<double> deltas_;
};

// Two-parameter summary of a symmetric trade-off curve.
struct PrivacyParams {
  double mu_star = 0.0;     // GDP parameter with the same fixed point
  double gamma = 0.5;       // area under the curve, in [0, 1/2]
  double alpha_star = 0.5;  // the fixed point f(alpha*) = alpha*
};

// Closed-form families.
struct IdentityFamily {};
struct GdpFamily {
  double mu = 0.0;
};
struct EpsDeltaFamily {
  double eps = 0.0;
  double delta = 0.0;
};
// p * G_mu + (1 - p) * Id.
struct MixtureFamily {
  double p = 0.0;
  double mu = 0.0;
};
using CurveFamily =
    std::variant<IdentityFamily, GdpFamily, EpsDeltaFamily, MixtureFamily>;

absl::Status ValidateFamily(const CurveFamily& family);

// Exact value of the family at alpha; assumes a valid family.
double EvaluateFamily(const CurveFamily& family, double alpha);

absl::StatusOr<TradeoffCurve> MakeCurve(const CurveFamily& family,
                                        int grid_size = kDefaultAlphaGridSize);

// f^{-1}(alpha) = inf{t in [0, 1] : f(t) <= alpha}, sampled on f's grid.
// The infimum of an empty set is taken as 1.
TradeoffCurve CurveInverse(const TradeoffCurve& f);

// Greatest convex minorant of the samples, evaluated on f's grid.
TradeoffCurve DoubleConjugate(const TradeoffCurve& f);

// min{f, f^{-1}}^{**}.
TradeoffCurve Symmetrize(const TradeoffCurve& f);

// Pointwise min{f, g} on f's grid.
TradeoffCurve PointwiseMin(const TradeoffCurve& f, const TradeoffCurve& g);

// delta(eps) = 1 + sup_x (-e^eps x - f(x)). Only the lower convex hull of f
// matters, so f need not be convex; the result is the dual of f^{**}.
// `eps_grid` must be sorted ascending.
DualCurve PrimalToDual(const TradeoffCurve& f, std::span<const double> eps_grid);

// f(alpha) = max{0, sup_j 1 - delta_j - e^{eps_j} alpha} on `alpha_grid`,
// which must be a valid grid (sorted, 0 first, 1 last).
TradeoffCurve DualToPrimal(const DualCurve& d,
                           std::span<const double> alpha_grid);

// Trapezoidal area; in [0, 1].
double AreaUnderCurve(const TradeoffCurve& f);

// The alpha* with f(alpha*) = alpha*, residual at most 1e-10. Returns
// FailedPrecondition when f(0) < 0 or f(1) > 1 leaves no bracket.
absl::StatusOr<double> FixedPoint(const TradeoffCurve& f);

// sup over samples of both curves within [lo, hi] of |f - g|.
double SupDistance(const TradeoffCurve& f, const TradeoffCurve& g,
                   double lo = 0.0, double hi = 1.0);

}  // namespace fdp

#endif  // FDP_TRADEOFF_CURVE_H_
