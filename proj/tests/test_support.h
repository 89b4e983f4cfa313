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

#ifndef FDP_TESTS_TEST_SUPPORT_H_
#define FDP_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <random>
#include <vector>

#include "fdp/tradeoff_curve.h"

namespace fdp::testing {

inline constexpr int kSweepCases = 120;

// A random member of one of the closed-form curve families.
inline CurveFamily RandomFamily(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (rng() % 4) {
    case 0:
      return IdentityFamily{};
    case 1:
      return GdpFamily{4.0 * u(rng)};
    case 2:
      return EpsDeltaFamily{3.0 * u(rng), 0.3 * u(rng)};
    default:
      return MixtureFamily{u(rng), 4.0 * u(rng)};
  }
}

// A random valid but possibly non-convex curve: a decreasing staircase of
// linear pieces through random knots.
inline TradeoffCurve RandomWigglyCurve(std::mt19937_64& rng, int grid_size) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int knots = 2 + static_cast<int>(rng() % 6);
  std::vector<double> kx = {0.0}, ky = {1.0 - 0.2 * u(rng)};
  for (int i = 1; i < knots; ++i) {
    kx.push_back(static_cast<double>(i) / knots);
    ky.push_back(ky.back() * u(rng));
  }
  kx.push_back(1.0);
  ky.push_back(0.0);
  std::vector<double> alphas = TradeoffCurve::UniformGrid(grid_size);
  std::vector<double> betas(alphas.size());
  size_t k = 0;
  for (size_t i = 0; i < alphas.size(); ++i) {
    while (k + 2 < kx.size() && alphas[i] > kx[k + 1]) ++k;
    const double t = (alphas[i] - kx[k]) / (kx[k + 1] - kx[k]);
    betas[i] = ky[k] + t * (ky[k + 1] - ky[k]);
  }
  return TradeoffCurve::FromSamples(std::move(alphas), std::move(betas));
}

// Largest |f(alpha) - g(alpha)| over the grid points of f inside [lo, hi].
inline double MaxGap(const TradeoffCurve& f, const TradeoffCurve& g,
                     double lo = 0.0, double hi = 1.0) {
  double m = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    const double a = f.alphas()[i];
    if (a >= lo && a <= hi) m = std::max(m, std::abs(f.betas()[i] - g(a)));
  }
  return m;
}

}  // namespace fdp::testing

#endif  // FDP_TESTS_TEST_SUPPORT_H_
