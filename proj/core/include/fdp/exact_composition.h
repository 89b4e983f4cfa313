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

// Dual-domain composition: delta_k(eps) on a uniform eps grid, advanced one
// mechanism at a time by delta_{k+1}(eps) = E_Q[delta_k(eps - L)], then turned
// back into a trade-off curve through the sup over supporting lines.

#ifndef FDP_EXACT_COMPOSITION_H_
#define FDP_EXACT_COMPOSITION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "fdp/distributions.h"
#include "fdp/tradeoff_curve.h"

namespace fdp {

inline constexpr int kDefaultEpsGridSize = 2001;

struct DeltaGrid {
  std::vector<double> epsilons;
  std::vector<double> deltas;
  int64_t k = 0;
};

// `size` points uniformly spaced on [-eps_max, eps_max].
std::vector<double> UniformEpsGrid(double eps_max, int size);

// delta_0(eps) = max(1 - e^eps, 0) at every grid point.
DeltaGrid DeltaInitial(std::span<const double> eps_grid);

// int (q - e^eps p)_+ for a single mechanism, by adaptive quadrature to the
// right of the point where L crosses eps.
absl::StatusOr<double> DeltaOne(const DistributionPair& pair, double eps);

// DeltaOne at every grid point; k = 1.
absl::StatusOr<DeltaGrid> DeltaOneGrid(const DistributionPair& pair,
                                       std::span<const double> eps_grid);

// Advances a DeltaGrid by one copy of `pair`. The integral against Q of the
// piecewise-linear interpolant of delta_k is computed exactly: the real line
// is cut where L crosses a multiple of the grid spacing, and on each piece the
// zeroth and first moments of L under Q give the weights of the two grid
// values that the interpolant mixes. Those weights do not depend on the grid
// point, so they are computed once and each step is a discrete convolution.
class DeltaStepper {
 public:
  static absl::StatusOr<DeltaStepper> Create(const DistributionPair& pair,
                                             std::span<const double> eps_grid);

  absl::StatusOr<DeltaGrid> Step(const DeltaGrid& d) const;

  // Shift of the first kernel tap, in grid cells.
  int64_t first_shift() const { return first_shift_; }
  std::span<const double> kernel() const { return kernel_; }
  // Q-mass of L beyond the left end of every lookup; contributes delta = 1.
  double saturated_mass() const { return saturated_mass_; }

 private:
  DeltaStepper(std::vector<double> eps, int64_t first_shift,
               std::vector<double> kernel, double saturated_mass)
      : eps_(std::move(eps)),
        first_shift_(first_shift),
        kernel_(std::move(kernel)),
        saturated_mass_(saturated_mass) {}

  std::vector<double> eps_;
  int64_t first_shift_;
  std::vector<double> kernel_;
  double saturated_mass_;
};

// One step with a freshly built kernel. Prefer DeltaStepper for loops.
absl::StatusOr<DeltaGrid> DeltaStep(const DeltaGrid& d,
                                    const DistributionPair& pair);

struct ExactOptions {
  int eps_grid_size = kDefaultEpsGridSize;
  // Half-width of the eps grid; DefaultEpsMax when unset.
  std::optional<double> eps_max;
  // When set, fixes the grid spacing instead of the grid size: the grid then
  // holds as many points as [-eps_max, eps_max] needs at this spacing.
  std::optional<double> eps_step;
  int alpha_grid_size = kDefaultAlphaGridSize;
};

// Covers the bulk of the n-fold privacy loss under both laws with margin.
absl::StatusOr<double> DefaultEpsMax(const DistributionPair& pair, int64_t n);

// The eps grid ComposeExact would use. For laplace pairs with an odd grid
// size and no explicit eps_max, the spacing is widened slightly so that theta
// is a whole number of cells, which keeps delta_k exactly zero at k * theta.
absl::StatusOr<std::vector<double>> ExactEpsGrid(const DistributionPair& pair,
                                                 int64_t n,
                                                 const ExactOptions& options);

struct ExactResult {
  TradeoffCurve curve;
  DeltaGrid delta;
  // Sum over steps of delta_k at the right end of the grid. Bounds the error
  // from treating delta as 0 beyond the grid.
  double right_truncation_bound = 0.0;
  // (n - 1) * e^{-eps_max}. Bounds the error from treating delta as 1 left of
  // the grid instead of its true value 1 - O(e^eps).
  double left_truncation_bound = 0.0;
  bool truncation_warning = false;
};

inline constexpr double kTruncationWarningLevel = 1e-6;

absl::StatusOr<ExactResult> ComposeExact(const DistributionPair& pair,
                                         int64_t n,
                                         const ExactOptions& options = {});

absl::StatusOr<TradeoffCurve> ComposeExactCurve(
    const DistributionPair& pair, int64_t n, const ExactOptions& options = {});

}  // namespace fdp

#endif  // FDP_EXACT_COMPOSITION_H_
