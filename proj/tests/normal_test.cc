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

#include "fdp/normal.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracle_values.h"

namespace fdp {
namespace {

TEST(NormalCdf, MatchesHighPrecisionValues) {
  for (const auto& [x, y] : oracle::kNormalCdf) {
    // Rounding x / sqrt(2) costs about x^2 ulps of relative accuracy.
    const double tol = 4e-16 * (1.0 + x * x) * y;
    EXPECT_NEAR(NormalCdf(x), y, tol) << "x = " << x;
    EXPECT_NEAR(NormalSurvival(-x), y, tol) << "x = " << x;
  }
}

TEST(NormalQuantile, MatchesHighPrecisionValues) {
  for (const auto& [p, z] : oracle::kNormalQuantile) {
    EXPECT_NEAR(NormalQuantile(p), z, 1e-14 * std::max(1.0, std::abs(z)))
        << "p = " << p;
    EXPECT_NEAR(NormalUpperQuantile(p), -z, 1e-14 * std::max(1.0, std::abs(z)));
  }
}

TEST(NormalQuantile, EndpointsAreInfinite) {
  EXPECT_EQ(NormalQuantile(0.0), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(NormalQuantile(1.0), std::numeric_limits<double>::infinity());
}

TEST(NormalQuantile, InvertsTheCdf) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    // Invert from the tail that keeps full relative precision.
    const double back = x < 0.0 ? NormalQuantile(NormalCdf(x))
                                : NormalUpperQuantile(NormalSurvival(x));
    EXPECT_NEAR(back, x, 1e-12 * (1.0 + std::abs(x)));
  }
}

TEST(NormalPdf, IsTheGaussianDensity) {
  EXPECT_NEAR(NormalPdf(0.0), 0.3989422804014327, 1e-16);
  EXPECT_NEAR(NormalPdf(2.0), 0.05399096651318806, 1e-16);
  EXPECT_DOUBLE_EQ(NormalPdf(-1.3), NormalPdf(1.3));
}

}  // namespace
}  // namespace fdp
