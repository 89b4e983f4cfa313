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

#include "fdp/cumulants.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracle_values.h"
#include "test_support.h"

namespace fdp {
namespace {

// Non-central moments of X + c from those of X.
std::vector<double> Shift(const std::vector<double>& m, double c) {
  std::vector<double> raw = {1.0};
  raw.insert(raw.end(), m.begin(), m.end());
  std::vector<double> out(m.size());
  for (size_t r = 1; r <= m.size(); ++r) {
    double s = 0.0, binom = 1.0;
    for (size_t k = 0; k <= r; ++k) {
      s += binom * raw[k] * std::pow(c, static_cast<double>(r - k));
      binom = binom * static_cast<double>(r - k) / static_cast<double>(k + 1);
    }
    out[r - 1] = s;
  }
  return out;
}

TEST(MomentsToCumulants, Examples) {
  auto normal = MomentsToCumulants(std::vector<double>{0, 1, 0, 3});
  ASSERT_TRUE(normal.ok());
  EXPECT_EQ(normal->kappa, (std::array<double, 4>{0, 1, 0, 0}));
  auto k = MomentsToCumulants(std::vector<double>{1, 2, 5, 16});
  ASSERT_TRUE(k.ok());
  EXPECT_EQ(k->kappa, (std::array<double, 4>{1, 1, 1, 2}));
}

TEST(MomentsToCumulants, Errors) {
  EXPECT_FALSE(MomentsToCumulants(std::vector<double>{0, 1, 0}).ok());
  auto degenerate = MomentsToCumulants(std::vector<double>{2, 4, 8, 16});
  EXPECT_EQ(degenerate.status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(MomentsToCumulants, TranslationMovesOnlyTheMean) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < testing::kSweepCases; ++i) {
    // Moments of a random three-point law.
    double v[3] = {u(rng), u(rng) + 2.0, u(rng) - 2.0};
    double w[3] = {0.2 + 0.1 * u(rng), 0.3, 0.0};
    w[2] = 1.0 - w[0] - w[1];
    std::vector<double> m(4, 0.0);
    for (int r = 0; r < 4; ++r) {
      for (int j = 0; j < 3; ++j) m[r] += w[j] * std::pow(v[j], r + 1);
    }
    const double c = 2.0 * u(rng);
    auto a = MomentsToCumulants(m);
    auto b = MomentsToCumulants(Shift(m, c));
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_NEAR(b->kappa[0], a->kappa[0] + c, 1e-12);
    for (int r = 1; r < 4; ++r) EXPECT_NEAR(b->kappa[r], a->kappa[r], 1e-10);
  }
}

TEST(FifthCumulant, OfPoissonIsItsRate) {
  // Poisson(lambda) has every cumulant equal to lambda.
  const double l = 1.7;
  const std::vector<double> m = {l, l + l * l, l + 3 * l * l + l * l * l,
                                 l + 7 * l * l + 6 * l * l * l + l * l * l * l,
                                 l + 15 * l * l + 25 * std::pow(l, 3) +
                                     10 * std::pow(l, 4) + std::pow(l, 5)};
  EXPECT_NEAR(FifthCumulant(m), l, 1e-10);
  auto k = MomentsToCumulants(m);
  ASSERT_TRUE(k.ok());
  for (double x : k->kappa) EXPECT_NEAR(x, l, 1e-12);
}

TEST(Aggregate, Examples) {
  CumulantSet c;
  c.kappa = {0.1, 0.5, 0.2, 0.05};
  const CompositionCumulants cc = Aggregate(c, 10);
  EXPECT_NEAR(cc.bold_kappa[2], 2.0, 1e-15);
  EXPECT_EQ(cc.n, 10);
  EXPECT_NEAR(cc.sigma_n, std::sqrt(5.0), 1e-15);

  CumulantSet d;
  d.kappa = {-0.3, 1.0, 0.0, 0.4};
  const std::vector<CumulantSet> both = {c, d};
  auto sum = Aggregate(both);
  ASSERT_TRUE(sum.ok());
  EXPECT_NEAR(sum->bold_kappa[0], -0.2, 1e-15);
  EXPECT_NEAR(sum->bold_kappa[1], 1.5, 1e-15);
  EXPECT_NEAR(sum->bold_kappa[3], 0.45, 1e-15);
  EXPECT_EQ(sum->n, 2);
  EXPECT_FALSE(Aggregate(std::span<const CumulantSet>()).ok());
}

TEST(Aggregate, GaussianSigmaGrowsLikeRootN) {
  auto c = LlrCumulants(*DistributionPair::Gaussian(1.0), Law::kP);
  ASSERT_TRUE(c.ok());
  EXPECT_NEAR(Aggregate(*c, 9).sigma_n, 3.0, 1e-10);
  EXPECT_NEAR(c->kappa[2], 0.0, 1e-10);
  EXPECT_NEAR(c->kappa[3], 0.0, 1e-10);
}

TEST(Aggregate, AdditivityAndIidFastPath) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < testing::kSweepCases; ++t) {
    std::vector<CumulantSet> a(1 + rng() % 5), b(1 + rng() % 5);
    for (auto* v : {&a, &b}) {
      for (auto& c : *v) c.kappa = {u(rng), 1.0 + u(rng), u(rng), u(rng)};
    }
    std::vector<CumulantSet> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    auto sa = *Aggregate(a), sb = *Aggregate(b), sab = *Aggregate(ab);
    for (int r = 0; r < 4; ++r) {
      EXPECT_NEAR(sab.bold_kappa[r], sa.bold_kappa[r] + sb.bold_kappa[r], 1e-13);
    }
    const int64_t n = 1 + static_cast<int64_t>(rng() % 50);
    const std::vector<CumulantSet> rep(n, a[0]);
    auto slow = *Aggregate(rep);
    auto fast = Aggregate(a[0], n);
    for (int r = 0; r < 4; ++r) {
      EXPECT_NEAR(slow.bold_kappa[r], fast.bold_kappa[r],
                  1e-13 * n * (1.0 + std::abs(a[0].kappa[r])));
      EXPECT_EQ(fast.bold_kappa[r], static_cast<double>(n) * a[0].kappa[r]);
    }
    EXPECT_DOUBLE_EQ(fast.Standardized(2), 1.0);
  }
}

TEST(Aggregate, StandardizedOrdersShrinkWithN) {
  auto c = LlrCumulants(*DistributionPair::Laplace(1.0), Law::kQ);
  ASSERT_TRUE(c.ok());
  const auto c1 = Aggregate(*c, 1);
  for (int64_t n : {4, 25, 400}) {
    const auto cn = Aggregate(*c, n);
    const double root_n = std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(cn.Standardized(3) * root_n, c1.Standardized(3), 1e-12);
    EXPECT_NEAR(cn.Standardized(4) * n, c1.Standardized(4), 1e-12);
  }
}

TEST(LlrCumulants, MatchOracles) {
  for (const auto& c : oracle::kLaplaceCumulants) {
    const auto pair = *DistributionPair::Laplace(c.a);
    for (auto [law, want] : {std::pair{Law::kP, c.under_p}, std::pair{Law::kQ, c.under_q}}) {
      auto k = LlrCumulants(pair, law);
      ASSERT_TRUE(k.ok());
      const double w[4] = {want.k1, want.k2, want.k3, want.k4};
      for (int r = 0; r < 4; ++r) EXPECT_NEAR(k->kappa[r], w[r], 1e-10) << c.a;
      EXPECT_NEAR(*LlrFifthCumulant(pair, law), want.k5, 1e-9) << c.a;
    }
  }
  for (const auto& c : oracle::kSubsampledCumulants) {
    const auto pair = *DistributionPair::SubsampledGaussian(c.a, c.b);
    for (auto [law, want] : {std::pair{Law::kP, c.under_p}, std::pair{Law::kQ, c.under_q}}) {
      auto k = LlrCumulants(pair, law);
      ASSERT_TRUE(k.ok());
      const double w[4] = {want.k1, want.k2, want.k3, want.k4};
      for (int r = 0; r < 4; ++r) EXPECT_NEAR(k->kappa[r], w[r], 1e-10) << c.a;
      EXPECT_NEAR(*LlrFifthCumulant(pair, law), want.k5, 1e-9) << c.a;
    }
  }
}

TEST(LlrCumulants, TrivialPairIsDegenerate) {
  auto k = LlrCumulants(*DistributionPair::Gaussian(0.0), Law::kP);
  EXPECT_EQ(k.status().code(), absl::StatusCode::kFailedPrecondition);
}

}  // namespace
}  // namespace fdp
