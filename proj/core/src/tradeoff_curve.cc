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

#include "fdp/tradeoff_curve.h"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "fdp/normal.h"

namespace fdp {
namespace {

absl::Status ValidateAlphaGrid(std::span<const double> alphas) {
  if (alphas.size() < 2) {
    return absl::InvalidArgumentError("alpha grid needs at least 2 points");
  }
  if (alphas.front() != 0.0 || alphas.back() != 1.0) {
    return absl::InvalidArgumentError("alpha grid must start at 0 and end at 1");
  }
  for (size_t i = 1; i < alphas.size(); ++i) {
    if (!(alphas[i] > alphas[i - 1])) {
      return absl::InvalidArgumentError(
          absl::StrCat("alpha grid not strictly increasing at index ", i));
    }
  }
  return absl::OkStatus();
}

// Index k of the cell [xs[k], xs[k+1]] containing x, clamped to valid cells.
size_t CellIndex(std::span<const double> xs, double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  size_t k = it == xs.begin() ? 0 : static_cast<size_t>(it - xs.begin()) - 1;
  return std::min(k, xs.size() - 2);
}

double Interpolate(std::span<const double> xs, std::span<const double> ys,
                   double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const size_t k = CellIndex(xs, x);
  const double t = (x - xs[k]) / (xs[k + 1] - xs[k]);
  return ys[k] + t * (ys[k + 1] - ys[k]);
}

// Lower convex hull (monotone chain) of points sorted by x. Returns indices.
std::vector<size_t> LowerHull(std::span<const double> xs,
                              std::span<const double> ys) {
  std::vector<size_t> hull;
  hull.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    while (hull.size() >= 2) {
      const size_t a = hull[hull.size() - 2];
      const size_t b = hull.back();
      // Drop b unless it lies strictly below the chord a -> i.
      const double cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) -
                           (ys[b] - ys[a]) * (xs[i] - xs[a]);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  return hull;
}

}  // namespace

absl::StatusOr<TradeoffCurve> TradeoffCurve::Create(std::vector<double> alphas,
                                                    std::vector<double> betas,
                                                    double monotone_tol) {
  if (alphas.size() != betas.size()) {
    return absl::InvalidArgumentError("alphas and betas differ in length");
  }
  if (absl::Status s = ValidateAlphaGrid(alphas); !s.ok()) return s;
  for (size_t i = 0; i < betas.size(); ++i) {
    if (!std::isfinite(betas[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite beta at alpha = ", alphas[i]));
    }
    betas[i] = std::clamp(betas[i], 0.0, 1.0);
    if (i > 0 && betas[i] > betas[i - 1]) {
      if (betas[i] - betas[i - 1] > monotone_tol) {
        return absl::InvalidArgumentError(
            absl::StrCat("betas increase at alpha = ", alphas[i]));
      }
      betas[i] = betas[i - 1];
    }
  }
  return TradeoffCurve(std::move(alphas), std::move(betas));
}

TradeoffCurve TradeoffCurve::FromSamples(std::vector<double> alphas,
                                         std::vector<double> betas) {
  double running = 1.0;
  for (double& b : betas) {
    b = std::clamp(std::isnan(b) ? 0.0 : b, 0.0, 1.0);
    running = std::min(running, b);
    b = running;
  }
  return TradeoffCurve(std::move(alphas), std::move(betas));
}

std::vector<double> TradeoffCurve::UniformGrid(int grid_size) {
  std::vector<double> grid(std::max(grid_size, 2));
  const double last = static_cast<double>(grid.size() - 1);
  for (size_t i = 0; i < grid.size(); ++i) grid[i] = i / last;
  grid.back() = 1.0;
  return grid;
}

double TradeoffCurve::grid_spacing() const {
  double h = 0.0;
  for (size_t i = 1; i < alphas_.size(); ++i) {
    h = std::max(h, alphas_[i] - alphas_[i - 1]);
  }
  return h;
}

double TradeoffCurve::operator()(double alpha) const {
  return Interpolate(alphas_, betas_, alpha);
}

bool TradeoffCurve::IsSymmetric(double tol_cells) const {
  const double tol = tol_cells * grid_spacing();
  const TradeoffCurve inv = CurveInverse(*this);
  for (size_t i = 0; i < size(); ++i) {
    const double vertical = std::abs(betas_[i] - inv.betas_[i]);
    if (vertical <= tol) continue;
    // Reflection of (alpha_i, beta_i) must sit on the graph as well.
    const double reflected = std::abs((*this)(betas_[i]) - alphas_[i]);
    if (reflected > tol) return false;
  }
  return true;
}

absl::StatusOr<DualCurve> DualCurve::Create(std::vector<double> epsilons,
                                            std::vector<double> deltas,
                                            double monotone_tol) {
  if (epsilons.size() != deltas.size() || epsilons.empty()) {
    return absl::InvalidArgumentError("epsilon/delta sizes differ or are empty");
  }
  for (size_t i = 0; i < epsilons.size(); ++i) {
    if (!std::isfinite(epsilons[i]) || !std::isfinite(deltas[i])) {
      return absl::InvalidArgumentError("non-finite dual sample");
    }
    if (i > 0 && !(epsilons[i] > epsilons[i - 1])) {
      return absl::InvalidArgumentError("epsilon grid not strictly increasing");
    }
    if (i > 0 && deltas[i] > deltas[i - 1] + monotone_tol) {
      return absl::InvalidArgumentError(
          absl::StrCat("delta increases at eps = ", epsilons[i]));
    }
  }
  return FromSamples(std::move(epsilons), std::move(deltas));
}

DualCurve DualCurve::FromSamples(std::vector<double> epsilons,
                                 std::vector<double> deltas) {
  double running = 1.0;
  for (size_t i = 0; i < deltas.size(); ++i) {
    const double floor = std::max(-std::expm1(epsilons[i]), 0.0);
    double d = std::isnan(deltas[i]) ? 1.0 : deltas[i];
    d = std::clamp(d, floor, 1.0);
    running = std::min(running, d);
    deltas[i] = std::max(running, floor);
  }
  return DualCurve(std::move(epsilons), std::move(deltas));
}

double DualCurve::operator()(double eps) const {
  if (epsilons_.size() == 1) return deltas_.front();
  return Interpolate(epsilons_, deltas_, eps);
}

absl::Status ValidateFamily(const CurveFamily& family) {
  return std::visit(
      [](const auto& fam) -> absl::Status {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, GdpFamily>) {
          if (!(fam.mu >= 0.0) || !std::isfinite(fam.mu)) {
            return absl::InvalidArgumentError("gdp: mu must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, EpsDeltaFamily>) {
          if (!(fam.eps >= 0.0) || !std::isfinite(fam.eps)) {
            return absl::InvalidArgumentError("eps_delta: eps must be >= 0");
          }
          if (!(fam.delta >= 0.0 && fam.delta <= 1.0)) {
            return absl::InvalidArgumentError("eps_delta: delta must be in [0, 1]");
          }
        } else if constexpr (std::is_same_v<T, MixtureFamily>) {
          if (!(fam.p >= 0.0 && fam.p <= 1.0)) {
            return absl::InvalidArgumentError("mixture: p must be in [0, 1]");
          }
          if (!(fam.mu >= 0.0) || !std::isfinite(fam.mu)) {
            return absl::InvalidArgumentError("mixture: mu must be >= 0");
          }
        }
        return absl::OkStatus();
      },
      family);
}

double EvaluateFamily(const CurveFamily& family, double alpha) {
  alpha = std::clamp(alpha, 0.0, 1.0);
  auto gdp = [](double mu, double a) {
    if (a <= 0.0) return 1.0;
    if (a >= 1.0) return 0.0;
    // Phi(Phi^{-1}(1 - a) - mu) with the quantile taken from the small side.
    return NormalCdf(NormalUpperQuantile(a) - mu);
  };
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, IdentityFamily>) {
          return 1.0 - alpha;
        } else if constexpr (std::is_same_v<T, GdpFamily>) {
          return gdp(fam.mu, alpha);
        } else if constexpr (std::is_same_v<T, EpsDeltaFamily>) {
          const double e = std::exp(fam.eps);
          return std::max({0.0, 1.0 - fam.delta - e * alpha,
                           (1.0 - fam.delta - alpha) / e});
        } else {
          return fam.p * gdp(fam.mu, alpha) + (1.0 - fam.p) * (1.0 - alpha);
        }
      },
      family);
}

absl::StatusOr<TradeoffCurve> MakeCurve(const CurveFamily& family,
                                        int grid_size) {
  if (grid_size < 2) {
    return absl::InvalidArgumentError("grid_size must be >= 2");
  }
  if (absl::Status s = ValidateFamily(family); !s.ok()) return s;
  std::vector<double> alphas = TradeoffCurve::UniformGrid(grid_size);
  std::vector<double> betas(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    betas[i] = EvaluateFamily(family, alphas[i]);
  }
  return TradeoffCurve::FromSamples(std::move(alphas), std::move(betas));
}

TradeoffCurve CurveInverse(const TradeoffCurve& f) {
  const std::span<const double> a = f.alphas();
  const std::span<const double> b = f.betas();
  const size_t n = a.size();
  std::vector<double> out(n);
  // k = first index with b[k] <= alpha; non-increasing as alpha grows.
  size_t k = n;
  for (size_t i = 0; i < n; ++i) {
    const double alpha = a[i];
    while (k > 0 && b[k - 1] <= alpha) --k;
    if (k == n) {
      out[i] = 1.0;
    } else if (k == 0) {
      out[i] = 0.0;
    } else {
      // b[k-1] > alpha >= b[k].
      const double t = (b[k - 1] - alpha) / (b[k - 1] - b[k]);
      out[i] = a[k - 1] + t * (a[k] - a[k - 1]);
    }
  }
  return TradeoffCurve::FromSamples(std::vector<double>(a.begin(), a.end()),
                                    std::move(out));
}

TradeoffCurve DoubleConjugate(const TradeoffCurve& f) {
  const std::span<const double> a = f.alphas();
  const std::span<const double> b = f.betas();
  const std::vector<size_t> hull = LowerHull(a, b);
  std::vector<double> out(a.size());
  size_t h = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    while (h + 1 < hull.size() && a[hull[h + 1]] < a[i]) ++h;
    if (h + 1 == hull.size()) {
      out[i] = b[hull[h]];
      continue;
    }
    const size_t l = hull[h];
    const size_t r = hull[h + 1];
    const double t = (a[i] - a[l]) / (a[r] - a[l]);
    out[i] = std::min(b[i], b[l] + t * (b[r] - b[l]));
  }
  return TradeoffCurve::FromSamples(std::vector<double>(a.begin(), a.end()),
                                    std::move(out));
}

TradeoffCurve PointwiseMin(const TradeoffCurve& f, const TradeoffCurve& g) {
  std::vector<double> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    out[i] = std::min(f.betas()[i], g(f.alphas()[i]));
  }
  return TradeoffCurve::FromSamples(
      std::vector<double>(f.alphas().begin(), f.alphas().end()),
      std::move(out));
}

TradeoffCurve Symmetrize(const TradeoffCurve& f) {
  return DoubleConjugate(PointwiseMin(f, CurveInverse(f)));
}

DualCurve PrimalToDual(const TradeoffCurve& f,
                       std::span<const double> eps_grid) {
  const std::span<const double> a = f.alphas();
  const std::span<const double> b = f.betas();
  const std::vector<size_t> hull = LowerHull(a, b);
  std::vector<double> deltas(eps_grid.size());
  // As e^eps grows the minimiser of f(x) + e^eps x moves left along the hull.
  size_t v = hull.size() - 1;
  for (size_t j = 0; j < eps_grid.size(); ++j) {
    const double slope = std::exp(eps_grid[j]);
    auto cost = [&](size_t idx) { return b[hull[idx]] + slope * a[hull[idx]]; };
    while (v > 0 && cost(v - 1) <= cost(v)) --v;
    deltas[j] = 1.0 - cost(v);
  }
  return DualCurve::FromSamples(
      std::vector<double>(eps_grid.begin(), eps_grid.end()), std::move(deltas));
}

TradeoffCurve DualToPrimal(const DualCurve& d,
                           std::span<const double> alpha_grid) {
  // Upper envelope of the lines 1 - delta_j - e^{eps_j} alpha. Slopes
  // -e^{eps_j} increase as j decreases, so feed lines from the largest eps.
  struct Line {
    double slope;
    double intercept;
    double at(double x) const { return intercept + slope * x; }
  };
  std::vector<Line> env;
  env.reserve(d.size());
  for (size_t jj = d.size(); jj-- > 0;) {
    const Line l{-std::exp(d.epsilons()[jj]), 1.0 - d.deltas()[jj]};
    if (!std::isfinite(l.slope)) continue;
    if (!env.empty() && env.back().slope == l.slope) {
      if (env.back().intercept >= l.intercept) continue;
      env.pop_back();
    }
    while (env.size() >= 2) {
      const Line& l1 = env[env.size() - 2];
      const Line& l2 = env.back();
      // l2 is dominated when l1 and l meet no later than l1 and l2 do.
      if ((l1.intercept - l2.intercept) * (l.slope - l1.slope) >=
          (l1.intercept - l.intercept) * (l2.slope - l1.slope)) {
        env.pop_back();
      } else {
        break;
      }
    }
    env.push_back(l);
  }
  std::vector<double> betas(alpha_grid.size());
  size_t p = 0;
  for (size_t i = 0; i < alpha_grid.size(); ++i) {
    const double x = alpha_grid[i];
    while (p + 1 < env.size() && env[p + 1].at(x) >= env[p].at(x)) ++p;
    betas[i] = std::max(0.0, env[p].at(x));
  }
  return TradeoffCurve::FromSamples(
      std::vector<double>(alpha_grid.begin(), alpha_grid.end()),
      std::move(betas));
}

double AreaUnderCurve(const TradeoffCurve& f) {
  const std::span<const double> a = f.alphas();
  const std::span<const double> b = f.betas();
  double area = 0.0;
  for (size_t i = 1; i < a.size(); ++i) {
    area += 0.5 * (b[i] + b[i - 1]) * (a[i] - a[i - 1]);
  }
  return std::clamp(area, 0.0, 1.0);
}

absl::StatusOr<double> FixedPoint(const TradeoffCurve& f) {
  constexpr double kResidualTol = 1e-10;
  const std::span<const double> a = f.alphas();
  const std::span<const double> b = f.betas();
  auto g = [&](double x) { return f(x) - x; };
  if (g(0.0) < 0.0 || g(1.0) > 0.0) {
    return absl::FailedPreconditionError(
        "fixed point cannot be bracketed: need f(0) >= 0 and f(1) <= 1");
  }
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double r = g(mid);
    if (std::abs(r) < kResidualTol || hi - lo < 1e-16) break;
    if (r > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // On smooth stretches the linear interpolant is off by O(h^2 f''); refine
  // with the cubic through the four surrounding samples when those samples
  // look smooth (second differences of one sign and comparable size).
  const size_t k = CellIndex(a, mid);
  if (k >= 1 && k + 2 < a.size()) {
    const double d2a = (b[k + 1] - b[k]) / (a[k + 1] - a[k]) -
                       (b[k] - b[k - 1]) / (a[k] - a[k - 1]);
    const double d2b = (b[k + 2] - b[k + 1]) / (a[k + 2] - a[k + 1]) -
                       (b[k + 1] - b[k]) / (a[k + 1] - a[k]);
    const bool smooth = d2a > 0.0 && d2b > 0.0 &&
                        std::max(d2a, d2b) <= 4.0 * std::min(d2a, d2b);
    if (smooth) {
      auto cubic = [&](double x) {
        double sum = 0.0;
        for (size_t i = k - 1; i <= k + 2; ++i) {
          double w = b[i];
          for (size_t j = k - 1; j <= k + 2; ++j) {
            if (j != i) w *= (x - a[j]) / (a[i] - a[j]);
          }
          sum += w;
        }
        return sum - x;
      };
      double clo = a[k];
      double chi = a[k + 1];
      if (cubic(clo) >= 0.0 && cubic(chi) <= 0.0) {
        for (int iter = 0; iter < 200 && chi - clo > 1e-16; ++iter) {
          const double cm = 0.5 * (clo + chi);
          if (cubic(cm) > 0.0) {
            clo = cm;
          } else {
            chi = cm;
          }
        }
        return 0.5 * (clo + chi);
      }
    }
  }
  return mid;
}

double SupDistance(const TradeoffCurve& f, const TradeoffCurve& g, double lo,
                   double hi) {
  double sup = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    const double x = f.alphas()[i];
    if (x < lo || x > hi) continue;
    sup = std::max(sup, std::abs(f.betas()[i] - g(x)));
  }
  for (size_t i = 0; i < g.size(); ++i) {
    const double x = g.alphas()[i];
    if (x < lo || x > hi) continue;
    sup = std::max(sup, std::abs(g.betas()[i] - f(x)));
  }
  return sup;
}

}  // namespace fdp
