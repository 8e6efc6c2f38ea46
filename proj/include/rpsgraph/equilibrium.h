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

#ifndef RPSGRAPH_EQUILIBRIUM_H_
#define RPSGRAPH_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "rpsgraph/rational.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

// A mixed strategy: non-negative exact probabilities summing to exactly 1.
class StrategyProfile {
 public:
  static absl::StatusOr<StrategyProfile> Create(std::vector<Rational> probs);
  static StrategyProfile Uniform(int n);
  static StrategyProfile Pure(int n, int strategy);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[i]; }
  const std::vector<Rational>& probs() const { return probs_; }

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;

 private:
  explicit StrategyProfile(std::vector<Rational> probs)
      : probs_(std::move(probs)) {}

  std::vector<Rational> probs_;
};

// The unique equilibrium of a tournament game together with the quantities
// that certify it.
struct EquilibriumReport {
  StrategyProfile profile = StrategyProfile::Uniform(1);
  std::vector<int> support;
  // c_j = sum_i g(i, j) a_i: the expected outcome (2P(W) + P(D)) of the
  // profile against the pure strategy j.
  std::vector<Rational> column_payoffs;
  bool all_positive = false;
  // The profile scaled by the least common denominator.
  std::vector<BigInt> normalized;
};

// Solution of sum_i g(i, j) x_i = 1 for every column j, with no sign
// constraint on x.
struct UnitSystemSolution {
  std::vector<Rational> values;
  BigInt determinant;
  bool determinant_odd = false;
};

absl::StatusOr<std::vector<Rational>> ColumnPayoffs(const OutcomeMatrix& g,
                                                    const StrategyProfile& a);

// 2P(W) + P(D) for row profile `a` against column profile `b`. A value of 1
// is a fair matchup.
absl::StatusOr<Rational> ExpectedOutcome(const OutcomeMatrix& g,
                                         const StrategyProfile& a,
                                         const StrategyProfile& b);

// Always solvable: the system matrix has odd diagonal and even off-diagonal
// entries, so its determinant is odd.
UnitSystemSolution SolveUnitSystem(const OutcomeMatrix& g);

// Builds the report for a profile already known to be the equilibrium.
EquilibriumReport MakeReport(const OutcomeMatrix& g, StrategyProfile profile);

// The equilibrium if every strategy is played with positive probability.
// Even n is never all-positive and returns nullopt immediately.
std::optional<EquilibriumReport> AllPositiveEquilibrium(const OutcomeMatrix& g);

// Restricted solve on support `support`: returns the full-length profile if
// the restricted unit system has a strictly positive solution and every
// column payoff of the full game is at least 1.
std::optional<StrategyProfile> ValidateSupport(const OutcomeMatrix& g,
                                               absl::Span<const int> support);

enum class SupportScan {
  kFirstAccepted,  // odd sizes ascending, lexicographic within a size
  kAll,            // every non-empty support; fails unless exactly one passes
};

// The unique equilibrium by support enumeration. Throws std::logic_error if
// the scan does not accept exactly one support.
EquilibriumReport NashEquilibrium(const OutcomeMatrix& g,
                                  SupportScan scan = SupportScan::kFirstAccepted);

// Every non-empty support (any parity) accepted by ValidateSupport.
std::vector<std::vector<int>> AcceptedSupports(const OutcomeMatrix& g);

// The game restricted to the equilibrium support. Throws std::logic_error if
// the sub-game's own equilibrium differs from the restricted profile.
OutcomeMatrix ReduceSupport(const OutcomeMatrix& g,
                            const EquilibriumReport& report);

// True iff each probability p/q in lowest terms has p and q both odd.
// Requires an all-positive report.
absl::StatusOr<bool> ParityCertificate(const EquilibriumReport& report);

struct MonteCarloResult {
  // Empirical mean outcome of the profile against each pure column.
  std::vector<double> column_estimates;
  double worst_estimate = 0.0;
  int worst_column = 0;
};

// Plays `rounds` sampled draws of `a` against every pure column strategy.
// Sampling uses std::mt19937_64 (fully specified by the standard) seeded with
// `seed`: a strategy is drawn by rejection-sampling an integer uniformly in
// [0, L), L the common denominator of `a`, and locating it in the cumulative
// scaled weights. Results are reproducible bit-for-bit across platforms.
absl::StatusOr<MonteCarloResult> MonteCarloCheck(const OutcomeMatrix& g,
                                                 const StrategyProfile& a,
                                                 int64_t rounds, uint64_t seed);

}  // namespace rpsgraph

#endif  // RPSGRAPH_EQUILIBRIUM_H_
