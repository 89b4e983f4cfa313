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

#ifndef FDP_QUADRATURE_H_
#define FDP_QUADRATURE_H_

#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace fdp {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-12;
  // Maximum bisection depth of any piece. The number of pieces is also capped
  // at 4096.
  unsigned max_depth = 20;
};

// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b]. Either end may
// be infinite; semi-infinite pieces are mapped to (0, 1] with x = a - log(u).
// Returns ResourceExhausted when the error estimate exceeds
// max(abs_tol, rel_tol * |value|) after the budget is spent.
absl::StatusOr<double> Integrate(const std::function<double(double)>& f,
                                 double a, double b,
                                 const QuadratureOptions& options = {});

// Integrates over consecutive pieces [b_0, b_1], [b_1, b_2], ... so that the
// integrand only has to be smooth on each piece. `breakpoints` must be sorted
// and may start at -inf and end at +inf.
absl::StatusOr<double> IntegratePiecewise(
    const std::function<double(double)>& f, std::span<const double> breakpoints,
    const QuadratureOptions& options = {});

// Nodes and weights of the n-point Gauss-Hermite rule for the weight
// exp(-x^2): sum_i w_i g(x_i) ~ int g(x) exp(-x^2) dx.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule MakeGaussHermiteRule(int n);

// The 256-point rule, computed once.
const GaussHermiteRule& GaussHermite256();

}  // namespace fdp

#endif  // FDP_QUADRATURE_H_
