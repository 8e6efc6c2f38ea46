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

#ifndef RPSGRAPH_ENUMERATE_H_
#define RPSGRAPH_ENUMERATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/canonical.h"
#include "rpsgraph/equilibrium.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

inline constexpr int kMaxEnumerationVertices = 8;
inline constexpr int kMaxCatalogVertices = 7;

enum class EnumerationStrategy {
  // Every orientation of all n(n-1)/2 pairs.
  kFull,
  // Edges i+1 -> i are fixed along the path n-1 -> ... -> 0 and only the
  // (n-1)(n-2)/2 remaining pairs vary. Every tournament with a Hamiltonian
  // path (in particular every royal flock) is reached up to isomorphism.
  kPathFixed,
};

enum class Filter { kPrime, kAllPositive, kRoyalFlock, kEulerian };

struct EnumerationPlan {
  int n = 1;
  EnumerationStrategy strategy = EnumerationStrategy::kFull;
  std::vector<Filter> filters;
  // Worker threads. The output does not depend on this value.
  int jobs = 1;
};

struct EnumerationResult {
  // One canonical representative per isomorphism class passing every filter,
  // ordered by canonical code.
  std::vector<Tournament> classes;
  uint64_t raw_candidates = 0;
};

absl::StatusOr<EnumerationResult> EnumerateTournaments(
    const EnumerationPlan& plan);

uint64_t PathFixedCandidateCount(int n);

// Candidate `index` of the path-fixed scheme: bit f of `index` (f counted
// over pairs (i, j), j >= i + 2, row by row) decides whether i beats j.
Tournament PathFixedCandidate(int n, uint64_t index);

bool PassesFilters(const Tournament& t, const std::vector<Filter>& filters);

struct CatalogFlags {
  bool all_positive = false;
  bool prime = false;
  bool eulerian = false;
  bool royal_flock = false;
};

struct CatalogEntry {
  CanonicalForm canonical;
  // Equilibrium of the canonically labeled tournament.
  EquilibriumReport equilibrium;
  std::vector<BigInt> normalized;
  // "n_k": k ranks entries by ascending Euclidean norm of the equilibrium,
  // ties broken by canonical code.
  std::string name;
  CatalogFlags flags;
};

// Solves, flags, ranks and names a set of canonical tournaments of size n.
std::vector<CatalogEntry> BuildCatalog(int n,
                                       const std::vector<Tournament>& classes);

// The all-positive prime variants of size n <= 7, via path-fixed search.
absl::StatusOr<std::vector<CatalogEntry>> Classify(int n, int jobs = 1);

struct CatalogSummary {
  int n = 0;
  int64_t total_classes = 0;
  int64_t royal_flocks = 0;
  int64_t eulerian = 0;
  int64_t all_positive = 0;
  int64_t all_positive_prime = 0;
  int64_t uniform_all_positive_prime = 0;
};

absl::StatusOr<CatalogSummary> CatalogCounts(int n, int jobs = 1);

// Squared Euclidean norm of a profile.
Rational SquaredNorm(const StrategyProfile& profile);

}  // namespace rpsgraph

#endif  // RPSGRAPH_ENUMERATE_H_
