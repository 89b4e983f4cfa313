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

#ifndef FDP_STATUS_MACROS_H_
#define FDP_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define FDP_STATUS_CONCAT_INNER_(a, b) a##b
#define FDP_STATUS_CONCAT_(a, b) FDP_STATUS_CONCAT_INNER_(a, b)

#define FDP_RETURN_IF_ERROR(expr)                \
  do {                                           \
    const absl::Status fdp_status_ = (expr);     \
    if (!fdp_status_.ok()) return fdp_status_;   \
  } while (0)

#define FDP_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                               \
  if (!statusor.ok()) return statusor.status();          \
  lhs = std::move(statusor).value()

// lhs may be a declaration, e.g. FDP_ASSIGN_OR_RETURN(double x, Foo());
#define FDP_ASSIGN_OR_RETURN(lhs, rexpr) \
  FDP_ASSIGN_OR_RETURN_IMPL_(            \
      FDP_STATUS_CONCAT_(fdp_statusor_, __LINE__), lhs, rexpr)

#endif  // FDP_STATUS_MACROS_H_
