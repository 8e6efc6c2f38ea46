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

#include "rpsgraph/enumerate.h"

#include <algorithm>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "rpsgraph/analysis.h"
#include "rpsgraph/compose.h"

namespace rpsgraph {
namespace {

// Splits [0, total) into `jobs` contiguous ranges, runs `work` on each, and
// concatenates the results in range order.
template <typename T, typename Work>
std::vector<T> RunPartitioned(int jobs, uint64_t total, Work work) {
  if (static_cast<uint64_t>(jobs) > total) jobs = std::max<uint64_t>(1, total);
  std::vector<std::vector<T>> parts(jobs);
  std::vector<std::thread> workers;
  const uint64_t chunk = (total + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const uint64_t begin = std::min(total, chunk * w);
    const uint64_t end = std::min(total, begin + chunk);
    if (jobs == 1) {
      parts[w] = work(begin, end);
    } else {
      workers.emplace_back(
          [&parts, &work, w, begin, end] { parts[w] = work(begin, end); });
    }
  }
  for (std::thread& worker : workers) worker.join();
  std::vector<T> merged;
  for (std::vector<T>& part : parts) {
    merged.insert(merged.end(), part.begin(), part.end());
  }
  return merged;
}

bool PassesFilter(const Tournament& t, Filter filter) {
  switch (filter) {
    case Filter::kEulerian:
      return IsEulerian(t);
    case Filter::kRoyalFlock:
      return IsRoyalFlock(t);
    case Filter::kPrime:
      return IsPrime(t);
    case Filter::kAllPositive:
      return AllPositiveEquilibrium(OutcomeMatrix::FromTournament(t))
          .has_value();
  }
  return false;
}

int FilterCost(Filter filter) {
  switch (filter) {
    case Filter::kEulerian:
      return 0;
    case Filter::kRoyalFlock:
      return 1;
    case Filter::kPrime:
      return 2;
    case Filter::kAllPositive:
      return 3;
  }
  return 4;
}

}  // namespace

bool PassesFilters(const Tournament& t, const std::vector<Filter>& filters) {
  std::vector<Filter> ordered = filters;
  std::sort(ordered.begin(), ordered.end(), [](Filter a, Filter b) {
    return FilterCost(a) < FilterCost(b);
  });
  for (Filter f : ordered) {
    if (!PassesFilter(t, f)) return false;
  }
  return true;
}

uint64_t PathFixedCandidateCount(int n) {
  return n <= 2 ? 1 : uint64_t{1} << ((n - 1) * (n - 2) / 2);
}

Tournament PathFixedCandidate(int n, uint64_t index) {
  std::vector<int> free_bit(n * n, -1);
  int f = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) free_bit[i * n + j] = f++;
  }
  return *Tournament::FromPairs(n, [&](int i, int j) {
    if (j == i + 1) return false;  // i+1 beats i along the fixed path
    return ((index >> free_bit[i * n + j]) & 1u) != 0;
  });
}

absl::StatusOr<EnumerationResult> EnumerateTournaments(
    const EnumerationPlan& plan) {
  const int n = plan.n;
  if (n < 1 || n > kMaxEnumerationVertices) {
    return absl::OutOfRangeError(absl::StrCat(
        "enumeration supports 1 <= n <= ", kMaxEnumerationVertices,
        ", got n = ", n));
  }
  if (plan.jobs < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("jobs must be positive, got ", plan.jobs));
  }
  EnumerationResult result;
  std::vector<uint64_t> codes;
  if (plan.strategy == EnumerationStrategy::kFull) {
    result.raw_candidates = uint64_t{1} << NumPairs(n);
    codes = RunPartitioned<uint64_t>(
        plan.jobs, result.raw_candidates, [&](uint64_t begin, uint64_t end) {
          std::vector<uint64_t> found;
          for (uint64_t code = begin; code < end; ++code) {
            if (!IsCanonicalPacked(n, code)) continue;
            if (!PassesFilters(UnpackCode(n, code), plan.filters)) continue;
            found.push_back(code);
          }
          return found;
        });
  } else {
    result.raw_candidates = PathFixedCandidateCount(n);
    codes = RunPartitioned<uint64_t>(
        plan.jobs, result.raw_candidates, [&](uint64_t begin, uint64_t end) {
          std::vector<uint64_t> found;
          for (uint64_t index = begin; index < end; ++index) {
            const Tournament candidate = PathFixedCandidate(n, index);
            if (!PassesFilters(candidate, plan.filters)) continue;
            found.push_back(CanonicalPacked(n, PackCode(candidate)));
          }
          std::sort(found.begin(), found.end());
          found.erase(std::unique(found.begin(), found.end()), found.end());
          return found;
        });
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  }
  result.classes.reserve(codes.size());
  for (uint64_t code : codes) result.classes.push_back(UnpackCode(n, code));
  return result;
}

Rational SquaredNorm(const StrategyProfile& profile) {
  Rational total(0);
  for (const Rational& p : profile.probs()) total += p * p;
  return total;
}

std::vector<CatalogEntry> BuildCatalog(int n,
                                       const std::vector<Tournament>& classes) {
  std::vector<CatalogEntry> entries;
  entries.reserve(classes.size());
  for (const Tournament& t : classes) {
    CatalogEntry entry;
    entry.canonical = *ComputeCanonicalForm(t);
    const Tournament canonical = *Decode(entry.canonical.code);
    entry.equilibrium = NashEquilibrium(OutcomeMatrix::FromTournament(canonical));
    entry.normalized = entry.equilibrium.normalized;
    entry.flags.all_positive = entry.equilibrium.all_positive;
    entry.flags.prime = IsPrime(canonical);
    entry.flags.eulerian = IsEulerian(canonical);
    entry.flags.royal_flock = IsRoyalFlock(canonical);
    entries.push_back(std::move(entry));
  }
  std::vector<Rational> norms;
  std::vector<size_t> order(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    order[i] = i;
    norms.push_back(SquaredNorm(entries[i].equilibrium.profile));
  }
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (norms[a] != norms[b]) return norms[a] < norms[b];
    return entries[a].canonical.code < entries[b].canonical.code;
  });
  std::vector<CatalogEntry> ranked;
  ranked.reserve(entries.size());
  for (size_t k = 0; k < order.size(); ++k) {
    ranked.push_back(std::move(entries[order[k]]));
    ranked.back().name = absl::StrCat(n, "_", k + 1);
  }
  return ranked;
}

absl::StatusOr<std::vector<CatalogEntry>> Classify(int n, int jobs) {
  if (n < 1 || n > kMaxCatalogVertices) {
    return absl::OutOfRangeError(absl::StrCat(
        "catalog supports 1 <= n <= ", kMaxCatalogVertices, ", got n = ", n));
  }
  if (n % 2 == 0) return std::vector<CatalogEntry>{};
  EnumerationPlan plan;
  plan.n = n;
  plan.strategy = EnumerationStrategy::kPathFixed;
  plan.filters = {Filter::kPrime, Filter::kAllPositive};
  plan.jobs = jobs;
  absl::StatusOr<EnumerationResult> result = EnumerateTournaments(plan);
  if (!result.ok()) return result.status();
  return BuildCatalog(n, result->classes);
}

absl::StatusOr<CatalogSummary> CatalogCounts(int n, int jobs) {
  if (n < 1 || n > kMaxCatalogVertices) {
    return absl::OutOfRangeError(absl::StrCat(
        "catalog supports 1 <= n <= ", kMaxCatalogVertices, ", got n = ", n));
  }
  EnumerationPlan plan;
  plan.n = n;
  plan.jobs = jobs;
  absl::StatusOr<EnumerationResult> result = EnumerateTournaments(plan);
  if (!result.ok()) return result.status();
  CatalogSummary summary;
  summary.n = n;
  for (const CatalogEntry& entry : BuildCatalog(n, result->classes)) {
    ++summary.total_classes;
    summary.royal_flocks += entry.flags.royal_flock;
    summary.eulerian += entry.flags.eulerian;
    if (!entry.flags.all_positive) continue;
    ++summary.all_positive;
    if (!entry.flags.prime) continue;
    ++summary.all_positive_prime;
    const bool uniform = std::all_of(
        entry.normalized.begin(), entry.normalized.end(),
        [](const BigInt& v) { return v == 1; });
    summary.uniform_all_positive_prime += uniform;
  }
  return summary;
}

}  // namespace rpsgraph
