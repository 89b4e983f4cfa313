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

#include "fdp/exact_composition.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fdp/cumulants.h"
#include "fdp/quadrature.h"
#include "fdp/status_macros.h"

namespace fdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower bound delta >= max(1 - e^eps, 0) holds for every k.
double DeltaFloor(double eps) { return eps < 0.0 ? -std::expm1(eps) : 0.0; }

absl::StatusOr<double> UniformSpacing(std::span<const double> eps) {
  if (eps.size() < 2) {
    return absl::InvalidArgumentError("eps grid needs at least 2 points");
  }
  const double h = (eps.back() - eps.front()) / (eps.size() - 1);
  if (!(h > 0.0) || !std::isfinite(h)) {
    return absl::InvalidArgumentError("eps grid must be increasing and finite");
  }
  for (size_t i = 1; i < eps.size(); ++i) {
    if (std::abs(eps[i] - eps[i - 1] - h) > 1e-7 * h) {
      return absl::InvalidArgumentError("eps grid must be uniform");
    }
  }
  return h;
}

// Q-mass of the open x-interval (lo, hi), taken from whichever tail keeps the
// subtraction small.
double QMass(const DistributionPair& pair, double lo, double hi) {
  const double s_lo = pair.Survival(Law::kQ, lo);
  if (s_lo < 0.5) return std::max(0.0, s_lo - pair.Survival(Law::kQ, hi));
  return std::max(0.0, pair.Cdf(Law::kQ, hi) - pair.Cdf(Law::kQ, lo));
}

// x where L reaches `ell`, with the ends of the strictly increasing range
// standing in for values at or beyond the range of L.
double LlrPreimage(const DistributionPair& pair, double ell,
                   std::pair<double, double> range) {
  if (ell <= pair.LlrInfimum()) return range.first;
  if (ell >= pair.LlrSupremum()) return range.second;
  return *pair.LlrInverse(ell);
}

}  // namespace

std::vector<double> UniformEpsGrid(double eps_max, int size) {
  std::vector<double> grid(std::max(size, 2));
  const double h = 2.0 * eps_max / (grid.size() - 1);
  for (size_t i = 0; i < grid.size(); ++i) {
    grid[i] = -eps_max + h * static_cast<double>(i);
  }
  grid.back() = eps_max;
  return grid;
}

DeltaGrid DeltaInitial(std::span<const double> eps_grid) {
  DeltaGrid d;
  d.epsilons.assign(eps_grid.begin(), eps_grid.end());
  d.deltas.resize(eps_grid.size());
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    d.deltas[i] = DeltaFloor(eps_grid[i]);
  }
  return d;
}

absl::StatusOr<double> DeltaOne(const DistributionPair& pair, double eps) {
  if (std::isnan(eps)) return absl::InvalidArgumentError("eps is NaN");
  if (pair.IsTrivial() || eps <= pair.LlrInfimum()) return DeltaFloor(eps);
  if (eps >= pair.LlrSupremum()) return 0.0;
  const double x_star = *pair.LlrInverse(eps);
  const double scale = std::exp(eps);
  auto integrand = [&](double x) {
    return std::max(0.0, pair.Density(Law::kQ, x) -
                             scale * pair.Density(Law::kP, x));
  };
  // Split at the kinks and around the bulk of both laws so that no single
  // piece hides its mass from the Kronrod nodes.
  const double q_center = pair.kind() == PairKind::kSubsampledGaussian
                              ? 1.0 / pair.sigma()
                              : pair.param();
  std::vector<double> cuts = {x_star};
  for (double c : {-8.0, 0.0, 8.0, q_center - 8.0, q_center, q_center + 8.0}) {
    if (c > x_star) cuts.push_back(c);
  }
  for (double k : pair.Kinks()) {
    if (k > x_star) cuts.push_back(k);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(kInf);
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-12;
  FDP_ASSIGN_OR_RETURN(double value, IntegratePiecewise(integrand, cuts, opts));
  return std::clamp(value, DeltaFloor(eps), 1.0);
}

absl::StatusOr<DeltaGrid> DeltaOneGrid(const DistributionPair& pair,
                                       std::span<const double> eps_grid) {
  DeltaGrid d;
  d.epsilons.assign(eps_grid.begin(), eps_grid.end());
  d.deltas.resize(eps_grid.size());
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    FDP_ASSIGN_OR_RETURN(d.deltas[i], DeltaOne(pair, eps_grid[i]));
  }
  for (size_t i = 1; i < d.deltas.size(); ++i) {
    d.deltas[i] = std::min(d.deltas[i], d.deltas[i - 1]);
  }
  d.k = 1;
  return d;
}

absl::StatusOr<DeltaStepper> DeltaStepper::Create(
    const DistributionPair& pair, std::span<const double> eps_grid) {
  FDP_ASSIGN_OR_RETURN(const double h, UniformSpacing(eps_grid));
  std::vector<double> eps(eps_grid.begin(), eps_grid.end());
  if (pair.IsTrivial()) return DeltaStepper(std::move(eps), 0, {1.0}, 0.0);

  const int64_t n_pts = static_cast<int64_t>(eps.size());
  // Lookups at index j - m with m > n_pts - 1 + 1 fall left of the grid for
  // every j; m < -n_pts falls right of it. Only shifts in between need taps.
  const int64_t lo_shift = -n_pts;
  const int64_t hi_shift = n_pts + 1;
  std::vector<double> taps(hi_shift - lo_shift + 2, 0.0);
  double saturated = 0.0;
  auto add = [&](int64_t m, double w) { taps[m - lo_shift] += w; };

  auto place = [&](double s, double w) {
    const double r = std::round(s);
    if (std::abs(s - r) < 1e-9 * std::max(1.0, std::abs(s))) s = r;
    if (s >= static_cast<double>(hi_shift)) {
      saturated += w;
      return;
    }
    if (s < static_cast<double>(lo_shift)) return;
    const double m = std::floor(s);
    const double t = s - m;
    add(static_cast<int64_t>(m), w * (1.0 - t));
    if (t > 0.0) add(static_cast<int64_t>(m) + 1, w * t);
  };

  for (const LlrAtom& atom : pair.Atoms(Law::kQ)) {
    if (atom.mass > 0.0) place(atom.value / h, atom.mass);
  }

  const auto range = *pair.StrictlyIncreasingRange();
  const double l_inf = pair.LlrInfimum();
  const double l_sup = pair.LlrSupremum();
  const double s_lo = std::max(l_inf / h, static_cast<double>(lo_shift));
  const double s_hi = std::min(l_sup / h, static_cast<double>(hi_shift));
  if (l_sup / h > static_cast<double>(hi_shift)) {
    const double x = LlrPreimage(pair, hi_shift * h, range);
    saturated += QMass(pair, x, range.second);
  }

  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-11;
  const int64_t m_first = static_cast<int64_t>(std::floor(s_lo));
  const int64_t m_last = static_cast<int64_t>(std::ceil(s_hi)) - 1;
  for (int64_t m = m_first; m <= m_last; ++m) {
    const double l_lo = std::max(m * h, s_lo * h);
    const double l_hi = std::min((m + 1) * h, s_hi * h);
    if (!(l_hi > l_lo)) continue;
    const double x_lo = LlrPreimage(pair, l_lo, range);
    const double x_hi = LlrPreimage(pair, l_hi, range);
    if (!(x_hi > x_lo)) continue;
    const double q0 = QMass(pair, x_lo, x_hi);
    if (!(q0 > 1e-300)) continue;
    // First moment of the in-cell offset L / h - m.
    auto offset = [&](double x) {
      const double t = std::clamp(pair.Llr(x) / h - m, 0.0, 1.0);
      return t * pair.Density(Law::kQ, x);
    };
    auto q1 = Integrate(offset, x_lo, x_hi, opts);
    if (!q1.ok()) {
      return absl::ResourceExhaustedError(
          absl::StrCat("kernel moment on cell ", m, ": ", q1.status().message()));
    }
    const double w_right = std::clamp(*q1, 0.0, q0);
    add(m, q0 - w_right);
    add(m + 1, w_right);
  }

  // Trim zero taps at both ends.
  size_t first = 0;
  while (first < taps.size() && taps[first] == 0.0) ++first;
  size_t last = taps.size();
  while (last > first && taps[last - 1] == 0.0) --last;
  if (first == last) return DeltaStepper(std::move(eps), 0, {0.0}, saturated);
  std::vector<double> kernel(taps.begin() + first, taps.begin() + last);
  return DeltaStepper(std::move(eps), lo_shift + static_cast<int64_t>(first),
                      std::move(kernel), saturated);
}

absl::StatusOr<DeltaGrid> DeltaStepper::Step(const DeltaGrid& d) const {
  const int64_t n_pts = static_cast<int64_t>(eps_.size());
  if (d.epsilons.size() != eps_.size() || d.deltas.size() != eps_.size() ||
      std::abs(d.epsilons.front() - eps_.front()) > 1e-9 ||
      std::abs(d.epsilons.back() - eps_.back()) > 1e-9) {
    return absl::InvalidArgumentError("delta grid does not match the stepper");
  }
  const int64_t taps = static_cast<int64_t>(kernel_.size());
  const int64_t m_min = first_shift_;
  const int64_t m_max = first_shift_ + taps - 1;
  // padded[i + m_max] holds delta at grid index i, for i in
  // [-m_max, n_pts - 1 - m_min], with 1 to the left and 0 to the right.
  std::vector<double> padded(n_pts + taps - 1, 0.0);
  for (int64_t i = -m_max; i <= n_pts - 1 - m_min; ++i) {
    double v = 0.0;
    if (i < 0) {
      v = 1.0;
    } else if (i < n_pts) {
      v = d.deltas[i];
    }
    padded[i + m_max] = v;
  }
  DeltaGrid out;
  out.epsilons = d.epsilons;
  out.deltas.resize(n_pts);
  out.k = d.k + 1;
  const double* kern = kernel_.data();
  for (int64_t j = 0; j < n_pts; ++j) {
    // Tap t has shift m = m_min + t and reads index j - m.
    const double* base = padded.data() + (j - m_min + m_max);
    double acc = 0.0;
    for (int64_t t = 0; t < taps; ++t) acc += kern[t] * base[-t];
    const double v = saturated_mass_ + acc;
    // Composing one more mechanism cannot lower delta; on coarse grids the
    // interpolation bias near the 1 - e^eps floor can, so project it back.
    out.deltas[j] = std::clamp(std::max(v, d.deltas[j]),
                               DeltaFloor(out.epsilons[j]), 1.0);
  }
  for (int64_t j = 1; j < n_pts; ++j) {
    out.deltas[j] = std::min(out.deltas[j], out.deltas[j - 1]);
  }
  return out;
}

absl::StatusOr<DeltaGrid> DeltaStep(const DeltaGrid& d,
                                    const DistributionPair& pair) {
  FDP_ASSIGN_OR_RETURN(DeltaStepper stepper,
                       DeltaStepper::Create(pair, d.epsilons));
  return stepper.Step(d);
}

absl::StatusOr<double> DefaultEpsMax(const DistributionPair& pair, int64_t n) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (pair.IsTrivial()) return 10.0;
  double spread = 0.0;
  for (Law law : {Law::kP, Law::kQ}) {
    FDP_ASSIGN_OR_RETURN(CumulantSet c, LlrCumulants(pair, law));
    const double nd = static_cast<double>(n);
    spread = std::max(spread, std::abs(nd * c.mean()) +
                                  8.0 * std::sqrt(nd * c.variance()));
  }
  if (pair.kind() == PairKind::kLaplace) {
    spread = std::min(spread, static_cast<double>(n) * pair.param());
  }
  return std::max(spread, 8.0) + 2.0;
}

absl::StatusOr<std::vector<double>> ExactEpsGrid(const DistributionPair& pair,
                                                 int64_t n,
                                                 const ExactOptions& options) {
  double eps_max = 0.0;
  if (options.eps_max.has_value()) {
    eps_max = *options.eps_max;
  } else {
    FDP_ASSIGN_OR_RETURN(eps_max, DefaultEpsMax(pair, n));
  }
  if (!(eps_max > 0.0) || !std::isfinite(eps_max)) {
    return absl::InvalidArgumentError("eps_max must be positive and finite");
  }
  const bool align = !options.eps_max.has_value() &&
                     pair.kind() == PairKind::kLaplace && !pair.IsTrivial();
  if (options.eps_step.has_value()) {
    double h = *options.eps_step;
    if (!(h > 0.0) || !std::isfinite(h)) {
      return absl::InvalidArgumentError("eps_step must be positive");
    }
    if (align) h = pair.param() / std::ceil(pair.param() / h);
    const double half = std::ceil(eps_max / h - 1e-9);
    if (half > 5e6) return absl::InvalidArgumentError("eps grid too large");
    return UniformEpsGrid(half * h, 2 * static_cast<int>(half) + 1);
  }
  const int size = options.eps_grid_size;
  if (size < 3) return absl::InvalidArgumentError("eps grid size must be >= 3");
  if (align && size % 2 == 1) {
    const int half = (size - 1) / 2;
    const double target = eps_max / half;
    const double cells = std::floor(pair.param() / target);
    if (cells >= 1.0) eps_max = half * (pair.param() / cells);
  }
  return UniformEpsGrid(eps_max, size);
}

absl::StatusOr<ExactResult> ComposeExact(const DistributionPair& pair,
                                         int64_t n,
                                         const ExactOptions& options) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (options.alpha_grid_size < 2) {
    return absl::InvalidArgumentError("alpha grid size must be >= 2");
  }
  FDP_ASSIGN_OR_RETURN(std::vector<double> grid,
                       ExactEpsGrid(pair, n, options));
  FDP_ASSIGN_OR_RETURN(DeltaGrid d, DeltaOneGrid(pair, grid));
  double right_bound = 0.0;
  if (n > 1) {
    FDP_ASSIGN_OR_RETURN(DeltaStepper stepper, DeltaStepper::Create(pair, grid));
    for (int64_t k = 2; k <= n; ++k) {
      right_bound += d.deltas.back();
      FDP_ASSIGN_OR_RETURN(d, stepper.Step(d));
    }
  }
  const DualCurve dual = DualCurve::FromSamples(d.epsilons, d.deltas);
  TradeoffCurve curve =
      DualToPrimal(dual, TradeoffCurve::UniformGrid(options.alpha_grid_size));
  ExactResult result{std::move(curve), std::move(d)};
  result.right_truncation_bound = right_bound;
  result.left_truncation_bound =
      static_cast<double>(n - 1) * std::exp(grid.front());
  result.truncation_warning = right_bound > kTruncationWarningLevel;
  return result;
}

absl::StatusOr<TradeoffCurve> ComposeExactCurve(const DistributionPair& pair,
                                                int64_t n,
                                                const ExactOptions& options) {
  FDP_ASSIGN_OR_RETURN(ExactResult r, ComposeExact(pair, n, options));
  return std::move(r.curve);
}

}  // namespace fdp
