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

#include "fdp/distributions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fdp/normal.h"
#include "fdp/quadrature.h"

namespace fdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double LaplaceCdf(double x, double loc) {
  return x < loc ? 0.5 * std::exp(x - loc) : 1.0 - 0.5 * std::exp(loc - x);
}

double LaplaceSurvival(double x, double loc) {
  return x < loc ? 1.0 - 0.5 * std::exp(x - loc) : 0.5 * std::exp(loc - x);
}

double LaplaceDensity(double x, double loc) {
  return 0.5 * std::exp(-std::abs(x - loc));
}

}  // namespace

absl::StatusOr<DistributionPair> DistributionPair::Gaussian(double mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    return absl::InvalidArgumentError("gaussian pair: mu must be finite and >= 0");
  }
  return DistributionPair(PairKind::kGaussian, mu, 0.0);
}

absl::StatusOr<DistributionPair> DistributionPair::Laplace(double theta) {
  if (!std::isfinite(theta) || theta < 0.0) {
    return absl::InvalidArgumentError(
        "laplace pair: theta must be finite and >= 0");
  }
  return DistributionPair(PairKind::kLaplace, theta, 0.0);
}

absl::StatusOr<DistributionPair> DistributionPair::SubsampledGaussian(
    double p, double sigma) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError("subsampled gaussian: p must be in [0, 1]");
  }
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    return absl::InvalidArgumentError("subsampled gaussian: sigma must be > 0");
  }
  return DistributionPair(PairKind::kSubsampledGaussian, p, sigma);
}

std::string DistributionPair::DebugString() const {
  switch (kind_) {
    case PairKind::kGaussian:
      return absl::StrCat("gaussian(mu=", a_, ")");
    case PairKind::kLaplace:
      return absl::StrCat("laplace(theta=", a_, ")");
    case PairKind::kSubsampledGaussian:
      return absl::StrCat("subsampled_gaussian(p=", a_, ", sigma=", b_, ")");
  }
  return "unknown";
}

bool DistributionPair::IsTrivial() const { return a_ == 0.0; }

double DistributionPair::Llr(double x) const {
  switch (kind_) {
    case PairKind::kGaussian:
      return a_ * x - 0.5 * a_ * a_;
    case PairKind::kLaplace:
      // Piecewise form of |x| - |x - theta|, exact on the two flat pieces.
      if (x <= 0.0) return -a_;
      if (x >= a_) return a_;
      return std::clamp(2.0 * x - a_, -a_, a_);
    case PairKind::kSubsampledGaussian: {
      const double z = x / b_ - 0.5 / (b_ * b_);
      if (a_ == 1.0) return z;
      if (a_ == 0.0) return 0.0;
      if (z < 30.0) return std::log1p(a_ * std::expm1(z));
      return z + std::log(a_) + std::log1p((1.0 - a_) / a_ * std::exp(-z));
    }
  }
  return 0.0;
}

double DistributionPair::Density(Law law, double x) const {
  switch (kind_) {
    case PairKind::kGaussian:
      return law == Law::kP ? NormalPdf(x) : NormalPdf(x - a_);
    case PairKind::kLaplace:
      return law == Law::kP ? LaplaceDensity(x, 0.0) : LaplaceDensity(x, a_);
    case PairKind::kSubsampledGaussian:
      if (law == Law::kP) return NormalPdf(x);
      return a_ * NormalPdf(x - 1.0 / b_) + (1.0 - a_) * NormalPdf(x);
  }
  return 0.0;
}

double DistributionPair::Cdf(Law law, double x) const {
  switch (kind_) {
    case PairKind::kGaussian:
      return law == Law::kP ? NormalCdf(x) : NormalCdf(x - a_);
    case PairKind::kLaplace:
      return law == Law::kP ? LaplaceCdf(x, 0.0) : LaplaceCdf(x, a_);
    case PairKind::kSubsampledGaussian:
      if (law == Law::kP) return NormalCdf(x);
      return a_ * NormalCdf(x - 1.0 / b_) + (1.0 - a_) * NormalCdf(x);
  }
  return 0.0;
}

double DistributionPair::Survival(Law law, double x) const {
  switch (kind_) {
    case PairKind::kGaussian:
      return law == Law::kP ? NormalSurvival(x) : NormalSurvival(x - a_);
    case PairKind::kLaplace:
      return law == Law::kP ? LaplaceSurvival(x, 0.0) : LaplaceSurvival(x, a_);
    case PairKind::kSubsampledGaussian:
      if (law == Law::kP) return NormalSurvival(x);
      return a_ * NormalSurvival(x - 1.0 / b_) +
             (1.0 - a_) * NormalSurvival(x);
  }
  return 0.0;
}

std::vector<double> DistributionPair::Kinks() const {
  if (kind_ != PairKind::kLaplace) return {};
  if (a_ == 0.0) return {0.0};
  return {0.0, a_};
}

std::pair<double, double> DistributionPair::EffectiveSupport() const {
  switch (kind_) {
    case PairKind::kGaussian:
      return {-12.0, a_ + 12.0};
    case PairKind::kLaplace:
      return {-70.0, a_ + 70.0};
    case PairKind::kSubsampledGaussian:
      return {-12.0, 1.0 / b_ + 12.0};
  }
  return {-12.0, 12.0};
}

std::optional<std::pair<double, double>>
DistributionPair::StrictlyIncreasingRange() const {
  if (IsTrivial()) return std::nullopt;
  if (kind_ == PairKind::kLaplace) return std::make_pair(0.0, a_);
  return std::make_pair(-kInf, kInf);
}

std::vector<LlrAtom> DistributionPair::Atoms(Law law) const {
  if (IsTrivial()) return {LlrAtom{0.0, 1.0}};
  if (kind_ != PairKind::kLaplace) return {};
  const double small = 0.5 * std::exp(-a_);
  if (law == Law::kP) return {LlrAtom{-a_, 0.5}, LlrAtom{a_, small}};
  return {LlrAtom{-a_, small}, LlrAtom{a_, 0.5}};
}

std::optional<double> DistributionPair::LlrInverse(double ell) const {
  if (IsTrivial()) return std::nullopt;
  if (!(ell > LlrInfimum() && ell < LlrSupremum())) return std::nullopt;
  switch (kind_) {
    case PairKind::kGaussian:
      return (ell + 0.5 * a_ * a_) / a_;
    case PairKind::kLaplace:
      return 0.5 * (ell + a_);
    case PairKind::kSubsampledGaussian: {
      const double z = std::log((std::expm1(ell) + a_) / a_);
      return b_ * z + 0.5 / b_;
    }
  }
  return std::nullopt;
}

double DistributionPair::LlrInfimum() const {
  if (IsTrivial()) return 0.0;
  switch (kind_) {
    case PairKind::kGaussian:
      return -kInf;
    case PairKind::kLaplace:
      return -a_;
    case PairKind::kSubsampledGaussian:
      return a_ == 1.0 ? -kInf : std::log1p(-a_);
  }
  return -kInf;
}

double DistributionPair::LlrSupremum() const {
  if (IsTrivial()) return 0.0;
  return kind_ == PairKind::kLaplace ? a_ : kInf;
}

absl::StatusOr<std::vector<double>> LlrMoments(const DistributionPair& pair,
                                               Law law, int max_order,
                                               double center) {
  if (max_order < 2 || max_order > 8) {
    return absl::InvalidArgumentError("max_order must be in [2, 8]");
  }
  std::vector<double> moments(max_order, 0.0);

  if (pair.kind() == PairKind::kSubsampledGaussian) {
    const GaussHermiteRule& gh = GaussHermite256();
    auto component = [&](double shift, int r) {
      double sum = 0.0;
      for (size_t i = 0; i < gh.nodes.size(); ++i) {
        const double x = shift + std::numbers::sqrt2 * gh.nodes[i];
        sum += gh.weights[i] * std::pow(pair.Llr(x) - center, r);
      }
      return sum / std::sqrt(std::numbers::pi);
    };
    const double p = pair.param();
    for (int r = 1; r <= max_order; ++r) {
      moments[r - 1] = law == Law::kP
                           ? component(0.0, r)
                           : p * component(1.0 / pair.sigma(), r) +
                                 (1.0 - p) * component(0.0, r);
    }
    return moments;
  }

  // Both remaining families put P at 0 and Q at param().
  const double mean_x = law == Law::kP ? 0.0 : pair.param();
  std::vector<double> breaks = {-std::numeric_limits<double>::infinity(),
                                mean_x - 8.0, mean_x + 8.0,
                                std::numeric_limits<double>::infinity()};
  for (double k : pair.Kinks()) breaks.push_back(k);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  QuadratureOptions options;
  options.abs_tol = 1e-12;
  options.rel_tol = 1e-13;
  for (int r = 1; r <= max_order; ++r) {
    auto integrand = [&](double x) {
      const double d = pair.Density(law, x);
      if (d == 0.0) return 0.0;
      return std::pow(pair.Llr(x) - center, r) * d;
    };
    absl::StatusOr<double> m = IntegratePiecewise(integrand, breaks, options);
    if (!m.ok()) {
      return absl::Status(m.status().code(),
                          absl::StrCat("moment ", r, " of ", pair.DebugString(),
                                       ": ", m.status().message()));
    }
    moments[r - 1] = *m;
  }
  return moments;
}

}  // namespace fdp
