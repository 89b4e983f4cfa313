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

// Hypothesis pairs (P, Q) on the real line and their log-likelihood ratio
// L(x) = log q(x) / p(x).
//
//   gaussian(mu):              N(0, 1)   vs N(mu, 1)
//   laplace(theta):            Lap(0, 1) vs Lap(theta, 1)
//   subsampled_gaussian(p, s): N(0, 1)   vs p N(1/s, 1) + (1 - p) N(0, 1)
//
// For all three families L is non-decreasing in x, which the exact
// composition engine relies on to split integrals at level sets of L.

#ifndef FDP_DISTRIBUTIONS_H_
#define FDP_DISTRIBUTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace fdp {

enum class Law { kP, kQ };

enum class PairKind { kGaussian, kLaplace, kSubsampledGaussian };

// A point mass of the law of L: L takes `value` with probability `mass`.
struct LlrAtom {
  double value = 0.0;
  double mass = 0.0;
};

class DistributionPair {
 public:
  static absl::StatusOr<DistributionPair> Gaussian(double mu);
  static absl::StatusOr<DistributionPair> Laplace(double theta);
  static absl::StatusOr<DistributionPair> SubsampledGaussian(double p,
                                                             double sigma);

  PairKind kind() const { return kind_; }
  // mu, theta or p depending on the kind.
  double param() const { return a_; }
  // sigma for subsampled_gaussian, unused otherwise.
  double sigma() const { return b_; }
  std::string DebugString() const;

  // True when P == Q, i.e. L vanishes identically.
  bool IsTrivial() const;

  double Llr(double x) const;
  double Density(Law law, double x) const;
  double Cdf(Law law, double x) const;
  double Survival(Law law, double x) const;

  // Points where a density or L is not smooth (sorted).
  std::vector<double> Kinks() const;

  // A finite interval of x outside of which both laws have mass < 1e-30,
  // widened to contain every kink.
  std::pair<double, double> EffectiveSupport() const;

  // Where L is strictly increasing: an x-interval (possibly infinite ends).
  // Empty for trivial pairs. Outside it L is constant and shows up as atoms.
  std::optional<std::pair<double, double>> StrictlyIncreasingRange() const;

  // Point masses of the law of L under `law` (Laplace: L = -theta on
  // x <= 0 and L = theta on x >= theta; trivial pairs: L = 0).
  std::vector<LlrAtom> Atoms(Law law) const;

  // x with L(x) = ell for ell strictly inside the range of L on the
  // strictly increasing part; nullopt otherwise.
  std::optional<double> LlrInverse(double ell) const;

  // inf and sup of L over the real line (may be infinite).
  double LlrInfimum() const;
  double LlrSupremum() const;

 private:
  DistributionPair(PairKind kind, double a, double b)
      : kind_(kind), a_(a), b_(b) {}

  PairKind kind_;
  double a_;
  double b_;
};

// Non-central moments E[(L - center)^r], r = 1..max_order, of L(X) with X
// drawn from `law`. Gaussian and Laplace pairs use adaptive Gauss-Kronrod
// split at the kinks with exponentially mapped tails; the subsampled pair
// uses 256-point Gauss-Hermite on each Gaussian component.
// Requires 2 <= max_order <= 8.
absl::StatusOr<std::vector<double>> LlrMoments(const DistributionPair& pair,
                                               Law law, int max_order,
                                               double center = 0.0);

}  // namespace fdp

#endif  // FDP_DISTRIBUTIONS_H_
