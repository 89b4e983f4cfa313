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

#ifndef FDP_NORMAL_H_
#define FDP_NORMAL_H_

namespace fdp {

// Standard normal density phi(x).
double NormalPdf(double x);

// Standard normal CDF Phi(x), accurate in both tails.
double NormalCdf(double x);

// Upper tail 1 - Phi(x) without cancellation.
double NormalSurvival(double x);

// Phi^{-1}(p). Returns -inf / +inf at p = 0 / 1.
double NormalQuantile(double p);

// Phi^{-1}(1 - p), computed without forming 1 - p.
double NormalUpperQuantile(double p);

}  // namespace fdp

#endif  // FDP_NORMAL_H_
