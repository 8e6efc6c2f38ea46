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

#include "rpsgraph/compose.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

// Outer vertex represented by vertex v of the substituted game.
int OuterVertex(int v, int at, int inner_size) {
  if (v < at) return v;
  if (v < at + inner_size) return at;
  return v - inner_size + 1;
}

uint64_t MaskOf(const std::vector<int>& vertices) {
  uint64_t mask = 0;
  for (int v : vertices) mask |= uint64_t{1} << v;
  return mask;
}

// Classifies the outside vertices of `mask`; false if one is mixed.
bool Split(const Tournament& t, uint64_t mask, ModuleWitness* witness) {
  for (int v = 0; v < t.size(); ++v) {
    if ((mask >> v) & 1u) continue;
    const uint64_t beaten = t.OutMask(v) & mask;
    if (beaten == mask) {
      if (witness) witness->beats_block.push_back(v);
    } else if (beaten == 0) {
      if (witness) witness->beaten_by_block.push_back(v);
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

absl::StatusOr<Tournament> Substitute(const SubstitutionSpec& spec) {
  const int m = spec.outer.size();
  const int k = spec.inner.size();
  if (spec.at < 0 || spec.at >= m) {
    return absl::OutOfRangeError(absl::StrCat(
        "substitution site ", spec.at, " out of range for outer size ", m));
  }
  const int at = spec.at;
  return Tournament::FromPairs(m - 1 + k, [&](int i, int j) {
    const bool i_inner = i >= at && i < at + k;
    const bool j_inner = j >= at && j < at + k;
    if (i_inner && j_inner) return spec.inner.Beats(i - at, j - at);
    return spec.outer.Beats(OuterVertex(i, at, k), OuterVertex(j, at, k));
  });
}

absl::StatusOr<StrategyProfile> ComposedEquilibrium(
    const StrategyProfile& outer_eq, int at, const StrategyProfile& inner_eq) {
  if (at < 0 || at >= outer_eq.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "substitution site ", at, " out of range for a profile of size ",
        outer_eq.size()));
  }
  std::vector<Rational> probs;
  probs.reserve(outer_eq.size() - 1 + inner_eq.size());
  for (int v = 0; v < at; ++v) probs.push_back(outer_eq[v]);
  for (int b = 0; b < inner_eq.size(); ++b) {
    probs.push_back(outer_eq[at] * inner_eq[b]);
  }
  for (int v = at + 1; v < outer_eq.size(); ++v) probs.push_back(outer_eq[v]);
  return StrategyProfile::Create(std::move(probs));
}

bool ValidateModule(const Tournament& t, const ModuleWitness& witness) {
  const int n = t.size();
  const int size = static_cast<int>(witness.block.size());
  if (size < 2 || size > n - 1) return false;
  const uint64_t mask = MaskOf(witness.block);
  if (std::popcount(mask) != size) return false;
  if (static_cast<int>(witness.beats_block.size() +
                       witness.beaten_by_block.size()) != n - size) {
    return false;
  }
  for (int v : witness.beats_block) {
    if ((mask >> v) & 1u) return false;
    for (int s : witness.block) {
      if (!t.Beats(v, s)) return false;
    }
  }
  for (int v : witness.beaten_by_block) {
    if ((mask >> v) & 1u) return false;
    for (int s : witness.block) {
      if (!t.Beats(s, v)) return false;
    }
  }
  return true;
}

std::optional<ModuleWitness> FindModule(const Tournament& t) {
  const int n = t.size();
  for (int k = 2; k <= n - 1; ++k) {
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      const uint64_t mask = MaskOf(subset);
      if (Split(t, mask, nullptr)) {
        ModuleWitness witness;
        witness.block = subset;
        Split(t, mask, &witness);
        return witness;
      }
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool IsPrime(const Tournament& t) { return !FindModule(t).has_value(); }

SubstitutionSpec Factor(const Tournament& t, const ModuleWitness& witness) {
  const uint64_t mask = MaskOf(witness.block);
  const int representative = witness.block.front();
  std::vector<int> survivors;
  for (int v = 0; v < t.size(); ++v) {
    if (!((mask >> v) & 1u) || v == representative) survivors.push_back(v);
  }
  SubstitutionSpec spec;
  spec.outer = t.Induced(survivors);
  spec.at = static_cast<int>(
      std::find(survivors.begin(), survivors.end(), representative) -
      survivors.begin());
  spec.inner = t.Induced(witness.block);
  return spec;
}

absl::StatusOr<Tournament> EulerianRotational(int n) {
  if (n < 1 || n % 2 == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Eulerian tournaments need odd n >= 1, got ", n));
  }
  const int half = (n - 1) / 2;
  return Tournament::FromPairs(n, [half](int i, int j) {
    return j - i <= half;
  });
}

}  // namespace rpsgraph
