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

// Edgeworth composition engine.
//
// With T_n = sum_i L_i, the composed trade-off curve is
//
//   f(alpha) = Ftilde_n((F_n^{-1}(1 - alpha) - mu_n) * sqrt(Var_P T_n / Var_Q T_n))
//
// where F_n and Ftilde_n are the CDFs of T_n standardised under P and under
// Q, and mu_n = (E_Q T_n - E_P T_n) / sqrt(Var_P T_n). Both CDFs are replaced
// by Edgeworth expansions built from the summed cumulants:
//
//   F_EW(h) = Phi(h) - s3/6 He2(h) phi(h)
//                    - [s4/24 He3(h) + s3^2/72 He5(h)] phi(h),
//
// with s_r = bold_kappa_r / sigma_n^r. Degree 0 is the plain CLT (Phi), degree
// 1 keeps only the s3 term, degree 2 keeps everything above. The expansion is
// not a proper CDF in general, so quantiles are found by a bracketed root
// search and the assembled curve is repaired into a non-increasing one.

#ifndef FDP_EDGEWORTH_H_
#define FDP_EDGEWORTH_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "fdp/cumulants.h"
#include "fdp/distributions.h"
#include "fdp/tradeoff_curve.h"

namespace fdp {

struct EdgeworthApproximant {
  CompositionCumulants cc;
  int degree = 2;  // 0, 1 or 2
};

// Raw (unclamped) expansion of the standardised CDF at h.
double EdgeworthCdf(const EdgeworthApproximant& a, double h);

// Cornish-Fisher approximation of the (1 - alpha) quantile:
//   z + s3/6 (z^2 - 1) + s4/24 (z^3 - 3z) - s3^2/36 (2z^3 - 5z),
// z = Phi^{-1}(1 - alpha). Lower degrees drop the corresponding terms.
double CornishFisherQuantile(const EdgeworthApproximant& a, double alpha);

// Root of EdgeworthCdf(a, h) = 1 - alpha, searched outward from the
// Cornish-Fisher value so that the nearest root wins when the expansion is
// not monotone. Residual <= 1e-10. NotFound if no sign change exists within
// [-64, 64].
absl::StatusOr<double> NumericQuantile(const EdgeworthApproximant& a,
                                       double alpha);

enum class InverseMethod { kNumeric, kCornishFisher };

struct EdgeworthOptions {
  int degree = 2;
  InverseMethod inverse = InverseMethod::kNumeric;
  // Replace sqrt(Var_P / Var_Q) by 1; degree 0 then gives G_{mu_n}.
  bool unit_variance_ratio = false;
};

// Composition of n copies of one pair, with cumulants fixed up front so that
// evaluating at any alpha costs O(1) in n.
class EdgeworthComposer {
 public:
  static absl::StatusOr<EdgeworthComposer> Create(const CumulantSet& under_p,
                                                  const CumulantSet& under_q,
                                                  int64_t n,
                                                  const EdgeworthOptions& options);
  static absl::StatusOr<EdgeworthComposer> ForPair(const DistributionPair& pair,
                                                   int64_t n,
                                                   const EdgeworthOptions& options);

  // Clamped to [0, 1]; alpha = 0 -> 1, alpha = 1 -> 0, and alphas within 1e-6
  // of an endpoint are moved inward to 1e-6 before expanding.
  absl::StatusOr<double> Evaluate(double alpha) const;

  absl::StatusOr<TradeoffCurve> Curve(int grid_size) const;

  double mu_n() const { return mu_n_; }
  double variance_ratio() const { return ratio_; }
  const EdgeworthApproximant& under_p() const { return p_; }
  const EdgeworthApproximant& under_q() const { return q_; }

 private:
  EdgeworthComposer(EdgeworthApproximant p, EdgeworthApproximant q,
                    EdgeworthOptions options, double mu_n, double ratio)
      : p_(p), q_(q), options_(options), mu_n_(mu_n), ratio_(ratio) {}

  EdgeworthApproximant p_;
  EdgeworthApproximant q_;
  EdgeworthOptions options_;
  double mu_n_;
  double ratio_;
};

// One point of the composed curve.
absl::StatusOr<double> ComposeEdgeworth(const DistributionPair& pair, int64_t n,
                                        double alpha,
                                        const EdgeworthOptions& options = {});

// The composed curve on a uniform grid, made non-increasing by a running
// minimum from the left.
absl::StatusOr<TradeoffCurve> ComposeEdgeworthCurve(
    const DistributionPair& pair, int64_t n, const EdgeworthOptions& options = {},
    int grid_size = kDefaultAlphaGridSize);

// Leading terms dropped by the degree-2 expansion, as coefficients of the
// characteristic function: sigma_n^-5 bold_kappa_5 / 120 (order n^{-3/2}) and
// sigma_n^-8 bold_kappa_4^2 / 576 (order n^{-2}).
struct TruncationTerms {
  double fifth_cumulant_term = 0.0;
  double squared_fourth_term = 0.0;
};
absl::StatusOr<TruncationTerms> EdgeworthTruncationTerms(
    const DistributionPair& pair, Law law, int64_t n);

}  // namespace fdp

#endif  // FDP_EDGEWORTH_H_
