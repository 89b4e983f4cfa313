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

#include "fdp/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fdp {
namespace {

using Kronrod15 = boost::math::quadrature::gauss_kronrod<double, 15>;

// Below this relative accuracy the Kronrod estimate is dominated by rounding.
constexpr double kRoundoffFloor = 100.0 * std::numeric_limits<double>::epsilon();
constexpr size_t kMaxPieces = 4096;

struct Piece {
  double a;
  double b;
  double value;
  double error;
  double l1;
  unsigned depth;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece Evaluate(const std::function<double(double)>& f, double a, double b,
               unsigned depth) {
  Piece p{a, b, 0.0, 0.0, 0.0, depth};
  // With no subdivision Boost reports the error estimate in the coordinates of
  // the reference interval [-1, 1]; rescale it to [a, b].
  p.value = Kronrod15::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  p.error *= 0.5 * (b - a);
  return p;
}

// Globally adaptive bisection: the piece with the largest error estimate is
// split until the summed estimate meets the target. Pieces whose estimate is
// already at the rounding floor of their own L1 norm are not split further.
absl::StatusOr<double> IntegrateFinite(const std::function<double(double)>& f,
                                       double a, double b,
                                       const QuadratureOptions& options) {
  if (a == b) return 0.0;
  std::priority_queue<Piece> open;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  double settled_error = 0.0;
  auto push = [&](const Piece& p) {
    value += p.value;
    l1 += p.l1;
    if (p.error <= kRoundoffFloor * p.l1) {
      settled_error += p.error;
    } else {
      error += p.error;
      open.push(p);
    }
  };
  push(Evaluate(f, a, b, 0));
  auto target = [&] {
    return std::max({options.abs_tol, options.rel_tol * std::abs(value),
                     kRoundoffFloor * l1});
  };
  while (!open.empty() && std::isfinite(value) &&
         error + settled_error > target()) {
    Piece worst = open.top();
    if (worst.depth >= options.max_depth || open.size() >= kMaxPieces) break;
    open.pop();
    value -= worst.value;
    l1 -= worst.l1;
    error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    push(Evaluate(f, worst.a, mid, worst.depth + 1));
    push(Evaluate(f, mid, worst.b, worst.depth + 1));
  }
  if (!std::isfinite(value)) {
    return absl::InternalError(
        absl::StrCat("non-finite integrand on [", a, ", ", b, "]"));
  }
  const double total_error = std::max(error, 0.0) + settled_error;
  if (total_error > target()) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "quadrature did not converge on [", a, ", ", b, "]: error estimate ",
        total_error, " after depth ", options.max_depth));
  }
  return value;
}

}  // namespace

absl::StatusOr<double> Integrate(const std::function<double(double)>& f,
                                 double a, double b,
                                 const QuadratureOptions& options) {
  if (std::isnan(a) || std::isnan(b)) {
    return absl::InvalidArgumentError("NaN integration limit");
  }
  if (a > b) {
    absl::StatusOr<double> r = Integrate(f, b, a, options);
    if (!r.ok()) return r;
    return -*r;
  }
  const bool lower_inf = std::isinf(a);
  const bool upper_inf = std::isinf(b);
  if (lower_inf && upper_inf) {
    absl::StatusOr<double> left = Integrate(f, a, 0.0, options);
    if (!left.ok()) return left;
    absl::StatusOr<double> right = Integrate(f, 0.0, b, options);
    if (!right.ok()) return right;
    return *left + *right;
  }
  if (upper_inf) {
    // x = a - log(u), dx = du / u.
    auto g = [&](double u) { return u > 0.0 ? f(a - std::log(u)) / u : 0.0; };
    return IntegrateFinite(g, 0.0, 1.0, options);
  }
  if (lower_inf) {
    auto g = [&](double u) { return u > 0.0 ? f(b + std::log(u)) / u : 0.0; };
    return IntegrateFinite(g, 0.0, 1.0, options);
  }
  return IntegrateFinite(f, a, b, options);
}

absl::StatusOr<double> IntegratePiecewise(
    const std::function<double(double)>& f, std::span<const double> breakpoints,
    const QuadratureOptions& options) {
  double total = 0.0;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    absl::StatusOr<double> piece =
        Integrate(f, breakpoints[i], breakpoints[i + 1], options);
    if (!piece.ok()) return piece;
    total += *piece;
  }
  return total;
}

GaussHermiteRule MakeGaussHermiteRule(int n) {
  // Orthonormal Hermite recurrence. Returns p_n(z) and sets *deriv to p_n'(z).
  const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  auto eval = [&](double z, double* deriv) {
    double p1 = pim4;
    double p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
           std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
    }
    *deriv = std::sqrt(2.0 * n) * p2;
    return p1;
  };
  // Newton from asymptotic guesses skips roots once n reaches the hundreds,
  // so bracket every positive root by scanning at a fraction of the smallest
  // root spacing, then polish with safeguarded Newton steps.
  std::vector<double> positive;
  const double step = 0.125 * std::numbers::pi / std::sqrt(2.0 * n + 1.0);
  const double limit = std::sqrt(2.0 * n + 1.0) + 1.0;
  double deriv = 0.0;
  double lo = step * 0.5;
  double f_lo = eval(lo, &deriv);
  for (double hi = lo + step; hi <= limit; hi += step) {
    const double f_hi = eval(hi, &deriv);
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      double a = lo, b = hi, fa = f_lo;
      double z = 0.5 * (a + b);
      for (int iter = 0; iter < 100; ++iter) {
        const double fz = eval(z, &deriv);
        if ((fz < 0.0) == (fa < 0.0)) {
          a = z;
          fa = fz;
        } else {
          b = z;
        }
        double next = z - fz / deriv;
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - z) <= 1e-15 * std::max(1.0, std::abs(z))) {
          z = next;
          break;
        }
        z = next;
      }
      positive.push_back(z);
    }
    lo = hi;
    f_lo = f_hi;
  }
  GaussHermiteRule rule;
  auto weight_at = [&](double z) {
    eval(z, &deriv);
    return 2.0 / (deriv * deriv);
  };
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    rule.nodes.push_back(-*it);
    rule.weights.push_back(weight_at(*it));
  }
  if (n % 2 == 1) {
    rule.nodes.push_back(0.0);
    rule.weights.push_back(weight_at(0.0));
  }
  for (double z : positive) {
    rule.nodes.push_back(z);
    rule.weights.push_back(weight_at(z));
  }
  return rule;
}

const GaussHermiteRule& GaussHermite256() {
  static const GaussHermiteRule* const kRule =
      new GaussHermiteRule(MakeGaussHermiteRule(256));
  return *kRule;
}

}  // namespace fdp
