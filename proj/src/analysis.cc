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

#include "rpsgraph/analysis.h"

#include <bit>
#include <stdexcept>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rpsgraph {
namespace {

bool DominatesUnchecked(const Tournament& t, int i, int j) {
  if (!t.Beats(i, j)) return false;
  // Some k with j -> k -> i would break the dominance.
  return (t.OutMask(j) & t.InMask(i)) == 0;
}

bool ExtendCycle(const Tournament& t, std::vector<int>& path, uint64_t used) {
  const int n = t.size();
  if (static_cast<int>(path.size()) == n) return t.Beats(path.back(), path[0]);
  uint64_t next = t.OutMask(path.back()) & ~used;
  while (next != 0) {
    const int v = std::countr_zero(next);
    next &= next - 1;
    path.push_back(v);
    if (ExtendCycle(t, path, used | (uint64_t{1} << v))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

absl::StatusOr<bool> Dominates(const Tournament& t, int i, int j) {
  const int n = t.size();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    return absl::OutOfRangeError(
        absl::StrCat("vertex pair (", i, ", ", j, ") out of range for n = ", n));
  }
  if (i == j) {
    return absl::InvalidArgumentError("dominance needs two distinct vertices");
  }
  return DominatesUnchecked(t, i, j);
}

std::vector<DominancePair> DominatedPairs(const Tournament& t) {
  std::vector<DominancePair> pairs;
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      if (i != j && DominatesUnchecked(t, i, j)) pairs.push_back({i, j});
    }
  }
  return pairs;
}

std::vector<int> KingChickens(const Tournament& t) {
  const int n = t.size();
  const uint64_t everyone = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::vector<int> kings;
  for (int i = 0; i < n; ++i) {
    // Row i of A + A^2, as a bitmask.
    uint64_t reach = t.OutMask(i);
    for (uint64_t row = t.OutMask(i); row != 0; row &= row - 1) {
      reach |= t.OutMask(std::countr_zero(row));
    }
    reach |= uint64_t{1} << i;
    if (reach == everyone) kings.push_back(i);
  }
  return kings;
}

bool IsRoyalFlock(const Tournament& t) {
  const bool all_kings = static_cast<int>(KingChickens(t).size()) == t.size();
  const bool no_dominance = DominatedPairs(t).empty();
  if (all_kings != no_dominance) {
    throw std::logic_error("king-chicken and dominance definitions disagree");
  }
  return all_kings;
}

bool IsEulerian(const Tournament& t) {
  const int n = t.size();
  if (n % 2 == 0) return false;
  for (int i = 0; i < n; ++i) {
    if (std::popcount(t.OutMask(i)) != (n - 1) / 2) return false;
  }
  return true;
}

std::optional<std::vector<int>> HamiltonianCycle(const Tournament& t) {
  if (t.size() < 3) return std::nullopt;
  std::vector<int> path = {0};
  if (ExtendCycle(t, path, 1)) return path;
  return std::nullopt;
}

DegreeScreen ScreenDegrees(const Tournament& t) {
  const int n = t.size();
  DegreeScreen screen;
  auto rest = [n](int a, int c) {
    std::vector<int> block;
    for (int v = 0; v < n; ++v) {
      if (v != a && v != c) block.push_back(v);
    }
    return block;
  };
  auto try_witness = [&](int a, int c) {
    if (screen.witness.has_value()) return;
    const uint64_t block_mask = ((n == 64 ? ~uint64_t{0}
                                          : (uint64_t{1} << n) - 1) &
                                 ~(uint64_t{1} << a) & ~(uint64_t{1} << c));
    if (t.Beats(a, c) && (t.OutMask(c) & block_mask) == block_mask &&
        (t.InMask(a) & block_mask) == block_mask) {
      screen.witness = RpsSubstitutionWitness{a, c, rest(a, c)};
    }
  };
  for (int v = 0; v < n; ++v) {
    const int out = std::popcount(t.OutMask(v));
    const int in = n - 1 - out;
    if (n >= 2 && out == n - 1) {
      screen.flags.push_back({v, DegreeFlag::kOutDegreeAll});
    }
    if (n >= 2 && in == n - 1) {
      screen.flags.push_back({v, DegreeFlag::kInDegreeAll});
    }
    if (n >= 3 && out == n - 2) {
      screen.flags.push_back({v, DegreeFlag::kOutDegreeAllButOne});
      // v plays c; a is its only conqueror.
      try_witness(std::countr_zero(t.InMask(v)), v);
    }
    if (n >= 3 && in == n - 2) {
      screen.flags.push_back({v, DegreeFlag::kInDegreeAllButOne});
      // v plays a; c is the only vertex it beats.
      try_witness(v, std::countr_zero(t.OutMask(v)));
    }
  }
  return screen;
}

StructuralClassification ClassifyStructure(const Tournament& t) {
  StructuralClassification c;
  c.is_royal_flock = IsRoyalFlock(t);
  c.is_eulerian = IsEulerian(t);
  c.hamiltonian_cycle = HamiltonianCycle(t);
  c.degree_screen = ScreenDegrees(t);
  return c;
}

const char* DegreeFlagName(DegreeFlag flag) {
  switch (flag) {
    case DegreeFlag::kOutDegreeAll:
      return "out_degree_n_minus_1";
    case DegreeFlag::kInDegreeAll:
      return "in_degree_n_minus_1";
    case DegreeFlag::kOutDegreeAllButOne:
      return "out_degree_n_minus_2";
    case DegreeFlag::kInDegreeAllButOne:
      return "in_degree_n_minus_2";
  }
  return "unknown";
}

}  // namespace rpsgraph
