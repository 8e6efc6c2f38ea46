// Copyright 2026 The rpsgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RPSGRAPH_LINEAR_SYSTEM_H_
#define RPSGRAPH_LINEAR_SYSTEM_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/rational.h"

namespace rpsgraph {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct ExactSolution {
  std::vector<Rational> values;
  BigInt determinant;
};

// Solves a x = b exactly with fraction-free (Bareiss) elimination. Every
// intermediate entry is a minor of [a | b], so growth stays polynomial; the
// only divisions are exact. Back-substitution yields reduced fractions.
// Fails with FailedPrecondition when `a` is singular.
absl::StatusOr<ExactSolution> SolveFractionFree(IntMatrix a,
                                                std::vector<BigInt> b);

// Determinant by the same elimination.
BigInt Determinant(IntMatrix a);

}  // namespace rpsgraph

#endif  // RPSGRAPH_LINEAR_SYSTEM_H_
