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

#include "rpsgraph/equilibrium.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rpsgraph/linear_system.h"

namespace rpsgraph {
namespace {

absl::Status CheckDimensions(const OutcomeMatrix& g, const StrategyProfile& a) {
  if (a.size() != g.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("profile has ", a.size(), " entries, game has ",
                     g.size(), " strategies"));
  }
  return absl::OkStatus();
}

// Unit system restricted to `support`: row r is the equation of column
// support[r], unknown c is the probability of support[c].
ExactSolution SolveRestricted(const OutcomeMatrix& g,
                              absl::Span<const int> support) {
  const int k = static_cast<int>(support.size());
  IntMatrix a(k, std::vector<BigInt>(k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a[r][c] = g(support[c], support[r]);
  }
  absl::StatusOr<ExactSolution> solution =
      SolveFractionFree(std::move(a), std::vector<BigInt>(k, BigInt(1)));
  if (!solution.ok()) {
    // Unreachable: every principal submatrix has an odd determinant.
    throw std::logic_error(absl::StrCat("unit system is singular on support {",
                                        absl::StrJoin(support, ","), "}"));
  }
  return *std::move(solution);
}

std::vector<Rational> PayoffsUnchecked(const OutcomeMatrix& g,
                                       absl::Span<const Rational> a) {
  const int n = g.size();
  std::vector<Rational> c(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != 0 && g(i, j) != 0) c[j] += g(i, j) * a[i];
    }
  }
  return c;
}

// Calls visit(subset) for every k-subset of 0..n-1 in lexicographic order
// until it returns true.
template <typename Visit>
bool ForEachSubset(int n, int k, Visit&& visit) {
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (visit(absl::Span<const int>(subset))) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

absl::StatusOr<StrategyProfile> StrategyProfile::Create(
    std::vector<Rational> probs) {
  if (probs.empty()) {
    return absl::InvalidArgumentError("profile must be non-empty");
  }
  Rational total(0);
  for (size_t i = 0; i < probs.size(); ++i) {
    probs[i].canonicalize();
    if (probs[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("probability ", i, " is negative"));
    }
    total += probs[i];
  }
  if (total != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("probabilities sum to ", ToString(total), ", not 1"));
  }
  return StrategyProfile(std::move(probs));
}

StrategyProfile StrategyProfile::Uniform(int n) {
  return StrategyProfile(std::vector<Rational>(n, Rational(1, n)));
}

StrategyProfile StrategyProfile::Pure(int n, int strategy) {
  std::vector<Rational> probs(n, Rational(0));
  probs[strategy] = 1;
  return StrategyProfile(std::move(probs));
}

absl::StatusOr<std::vector<Rational>> ColumnPayoffs(const OutcomeMatrix& g,
                                                    const StrategyProfile& a) {
  if (absl::Status s = CheckDimensions(g, a); !s.ok()) return s;
  return PayoffsUnchecked(g, a.probs());
}

absl::StatusOr<Rational> ExpectedOutcome(const OutcomeMatrix& g,
                                         const StrategyProfile& a,
                                         const StrategyProfile& b) {
  if (absl::Status s = CheckDimensions(g, a); !s.ok()) return s;
  if (absl::Status s = CheckDimensions(g, b); !s.ok()) return s;
  const std::vector<Rational> c = PayoffsUnchecked(g, a.probs());
  Rational total(0);
  for (int j = 0; j < g.size(); ++j) total += c[j] * b[j];
  return total;
}

UnitSystemSolution SolveUnitSystem(const OutcomeMatrix& g) {
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  ExactSolution solution = SolveRestricted(g, all);
  UnitSystemSolution result;
  result.values = std::move(solution.values);
  result.determinant = std::move(solution.determinant);
  result.determinant_odd = mpz_odd_p(result.determinant.get_mpz_t()) != 0;
  return result;
}

EquilibriumReport MakeReport(const OutcomeMatrix& g, StrategyProfile profile) {
  EquilibriumReport report;
  report.column_payoffs = PayoffsUnchecked(g, profile.probs());
  for (int i = 0; i < profile.size(); ++i) {
    if (profile[i] > 0) report.support.push_back(i);
  }
  report.all_positive =
      static_cast<int>(report.support.size()) == profile.size();
  report.normalized = ScaleToIntegers(profile.probs());
  report.profile = std::move(profile);
  return report;
}

std::optional<EquilibriumReport> AllPositiveEquilibrium(
    const OutcomeMatrix& g) {
  if (g.size() % 2 == 0) return std::nullopt;
  UnitSystemSolution solution = SolveUnitSystem(g);
  for (const Rational& v : solution.values) {
    if (v <= 0) return std::nullopt;
  }
  absl::StatusOr<StrategyProfile> profile =
      StrategyProfile::Create(std::move(solution.values));
  if (!profile.ok()) {
    throw std::logic_error("positive odd-n unit solution does not sum to 1");
  }
  return MakeReport(g, *std::move(profile));
}

std::optional<StrategyProfile> ValidateSupport(const OutcomeMatrix& g,
                                               absl::Span<const int> support) {
  const int n = g.size();
  ExactSolution restricted = SolveRestricted(g, support);
  std::vector<Rational> probs(n, Rational(0));
  for (size_t r = 0; r < support.size(); ++r) {
    if (restricted.values[r] <= 0) return std::nullopt;
    probs[support[r]] = restricted.values[r];
  }
  const std::vector<Rational> c = PayoffsUnchecked(g, probs);
  for (int j = 0; j < n; ++j) {
    if (c[j] < 1) return std::nullopt;
  }
  // sum_j a_j c_j equals both sum_j a_j and (sum_j a_j)^2, so a positive
  // restricted solution always sums to 1.
  absl::StatusOr<StrategyProfile> profile =
      StrategyProfile::Create(std::move(probs));
  if (!profile.ok()) return std::nullopt;
  return *std::move(profile);
}

std::vector<std::vector<int>> AcceptedSupports(const OutcomeMatrix& g) {
  const int n = g.size();
  std::vector<std::vector<int>> accepted;
  for (int k = 1; k <= n; ++k) {
    ForEachSubset(n, k, [&](absl::Span<const int> support) {
      if (ValidateSupport(g, support).has_value()) {
        accepted.emplace_back(support.begin(), support.end());
      }
      return false;
    });
  }
  return accepted;
}

EquilibriumReport NashEquilibrium(const OutcomeMatrix& g, SupportScan scan) {
  const int n = g.size();
  if (scan == SupportScan::kAll) {
    const std::vector<std::vector<int>> accepted = AcceptedSupports(g);
    if (accepted.size() != 1) {
      throw std::logic_error(absl::StrCat(
          "support scan accepted ", accepted.size(), " supports, expected 1"));
    }
    return MakeReport(g, *ValidateSupport(g, accepted.front()));
  }
  if (std::optional<EquilibriumReport> full = AllPositiveEquilibrium(g)) {
    return *std::move(full);
  }
  std::optional<StrategyProfile> found;
  for (int k = 1; k <= n && !found; k += 2) {
    ForEachSubset(n, k, [&](absl::Span<const int> support) {
      found = ValidateSupport(g, support);
      return found.has_value();
    });
  }
  if (!found) throw std::logic_error("no odd support validated");
  return MakeReport(g, *std::move(found));
}

OutcomeMatrix ReduceSupport(const OutcomeMatrix& g,
                            const EquilibriumReport& report) {
  OutcomeMatrix reduced = g.Submatrix(report.support);
  const EquilibriumReport sub = NashEquilibrium(reduced);
  for (size_t r = 0; r < report.support.size(); ++r) {
    if (sub.profile[static_cast<int>(r)] != report.profile[report.support[r]]) {
      throw std::logic_error(
          "reduced game equilibrium differs from the restricted profile");
    }
  }
  return reduced;
}

absl::StatusOr<bool> ParityCertificate(const EquilibriumReport& report) {
  if (!report.all_positive) {
    return absl::FailedPreconditionError(
        "parity certificate requires an all-positive equilibrium");
  }
  for (const Rational& p : report.profile.probs()) {
    if (mpz_even_p(p.get_num_mpz_t()) || mpz_even_p(p.get_den_mpz_t())) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<MonteCarloResult> MonteCarloCheck(const OutcomeMatrix& g,
                                                 const StrategyProfile& a,
                                                 int64_t rounds,
                                                 uint64_t seed) {
  if (absl::Status s = CheckDimensions(g, a); !s.ok()) return s;
  if (rounds < 1) return absl::InvalidArgumentError("rounds must be >= 1");
  const BigInt denominator = CommonDenominator(a.probs());
  if (!denominator.fits_ulong_p() ||
      denominator > BigInt(uint64_t{1} << 62)) {
    return absl::OutOfRangeError("profile denominator too large to sample");
  }
  const uint64_t range = denominator.get_ui();
  std::vector<uint64_t> cumulative;
  uint64_t running = 0;
  for (const BigInt& w : ScaleToIntegers(a.probs())) {
    running += w.get_ui();
    cumulative.push_back(running);
  }
  // Largest multiple of `range` representable, for unbiased reduction.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % range;

  const int n = g.size();
  std::mt19937_64 engine(seed);
  MonteCarloResult result;
  result.column_estimates.assign(n, 0.0);
  std::vector<int64_t> totals(n, 0);
  for (int64_t round = 0; round < rounds; ++round) {
    uint64_t draw;
    do {
      draw = engine();
    } while (draw >= limit);
    draw %= range;
    const int row = static_cast<int>(
        std::upper_bound(cumulative.begin(), cumulative.end(), draw) -
        cumulative.begin());
    for (int j = 0; j < n; ++j) totals[j] += g(row, j);
  }
  for (int j = 0; j < n; ++j) {
    result.column_estimates[j] =
        static_cast<double>(totals[j]) / static_cast<double>(rounds);
  }
  result.worst_column = static_cast<int>(
      std::min_element(result.column_estimates.begin(),
                       result.column_estimates.end()) -
      result.column_estimates.begin());
  result.worst_estimate = result.column_estimates[result.worst_column];
  return result;
}

}  // namespace rpsgraph
