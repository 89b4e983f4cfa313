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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace fdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(Integrate, PolynomialOnFiniteInterval) {
  auto r = Integrate([](double x) { return 3.0 * x * x - x; }, -1.0, 2.0);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_NEAR(*r, 7.5, 1e-13);
}

TEST(Integrate, ReversedLimitsFlipSign) {
  auto r = Integrate([](double x) { return x; }, 1.0, 0.0);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(*r, -0.5, 1e-15);
}

TEST(Integrate, SemiInfiniteExponential) {
  auto r = Integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_NEAR(*r, 1.0, 1e-12);
  auto l = Integrate([](double x) { return std::exp(x); }, -kInf, 1.0);
  ASSERT_TRUE(l.ok()) << l.status();
  EXPECT_NEAR(*l, std::exp(1.0), 1e-11);
}

TEST(Integrate, GaussianMomentsOverTheLine) {
  const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  auto mass = Integrate([&](double x) { return c * std::exp(-0.5 * x * x); },
                        -kInf, kInf);
  auto second = Integrate(
      [&](double x) { return x * x * c * std::exp(-0.5 * x * x); }, -kInf, kInf);
  ASSERT_TRUE(mass.ok() && second.ok());
  EXPECT_NEAR(*mass, 1.0, 1e-12);
  EXPECT_NEAR(*second, 1.0, 1e-12);
}

TEST(IntegratePiecewise, HandlesKinksAtBreakpoints) {
  const std::vector<double> cuts = {-1.0, 0.0, 2.0};
  auto r = IntegratePiecewise([](double x) { return std::abs(x); }, cuts);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(*r, 2.5, 1e-14);
}

TEST(Integrate, TinyIntegralsMeetTheAbsoluteTarget) {
  // A nearly vanishing integrand used to drive the adaptive rule to its depth
  // limit; the absolute target must be enough to stop it.
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  auto r = Integrate([](double x) { return 1e-9 * (x - 2.995); }, 2.995, 3.0,
                     opts);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_NEAR(*r, 1e-9 * 0.5 * 0.005 * 0.005, 1e-20);
}

TEST(Integrate, NanLimitIsAnError) {
  auto r = Integrate([](double) { return 1.0; }, std::nan(""), 1.0);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(Integrate, NonFiniteIntegrandIsAnError) {
  auto r = Integrate([](double) { return std::nan(""); }, 0.0, 1.0);
  EXPECT_FALSE(r.ok());
}

TEST(GaussHermite, IntegratesPolynomialsAgainstTheWeight) {
  const GaussHermiteRule& rule = GaussHermite256();
  ASSERT_EQ(rule.nodes.size(), 256u);
  double w = 0.0, x2 = 0.0, x4 = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    w += rule.weights[i];
    x2 += rule.weights[i] * x * x;
    x4 += rule.weights[i] * x * x * x * x;
    if (i > 0) EXPECT_LT(rule.nodes[i - 1], x);
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  EXPECT_NEAR(w, sqrt_pi, 1e-13);
  EXPECT_NEAR(x2, sqrt_pi / 2.0, 1e-13);
  EXPECT_NEAR(x4, 3.0 * sqrt_pi / 4.0, 1e-12);
}

TEST(GaussHermite, SmallRuleMatchesKnownNodes) {
  const GaussHermiteRule r = MakeGaussHermiteRule(3);
  EXPECT_NEAR(r.nodes[0], -std::sqrt(1.5), 1e-14);
  EXPECT_NEAR(r.nodes[1], 0.0, 1e-14);
  EXPECT_NEAR(r.weights[1], 2.0 * std::sqrt(std::numbers::pi) / 3.0, 1e-14);
}

}  // namespace
}  // namespace fdp
