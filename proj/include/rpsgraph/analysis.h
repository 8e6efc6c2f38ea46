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

#ifndef RPSGRAPH_ANALYSIS_H_
#define RPSGRAPH_ANALYSIS_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

// `winner` beats `loser` and no k has loser -> k -> winner.
struct DominancePair {
  int winner = 0;
  int loser = 0;

  friend bool operator==(const DominancePair&, const DominancePair&) = default;
};

absl::StatusOr<bool> Dominates(const Tournament& t, int i, int j);

// All dominance pairs, ordered by (winner, loser).
std::vector<DominancePair> DominatedPairs(const Tournament& t);

// Vertices that reach every other vertex by a path of length at most 2,
// read off the positive pattern of A + A^2.
std::vector<int> KingChickens(const Tournament& t);

// True iff every vertex is a king chicken. Also checks that this agrees with
// DominatedPairs(t) being empty and throws std::logic_error otherwise.
bool IsRoyalFlock(const Tournament& t);

bool IsEulerian(const Tournament& t);

// The lexicographically least Hamiltonian cycle starting at vertex 0, or
// nullopt. Tournaments with fewer than 3 vertices have none.
std::optional<std::vector<int>> HamiltonianCycle(const Tournament& t);

enum class DegreeFlag {
  kOutDegreeAll,        // out-degree n-1: dominates everything
  kInDegreeAll,         // in-degree n-1: dominated by everything
  kOutDegreeAllButOne,  // out-degree n-2
  kInDegreeAllButOne,   // in-degree n-2
};

struct FlaggedVertex {
  int vertex = 0;
  DegreeFlag flag = DegreeFlag::kOutDegreeAll;

  friend bool operator==(const FlaggedVertex&, const FlaggedVertex&) = default;
};

// The game is RPS with one strategy replaced by `block`: `a` beats `c`,
// `c` beats every vertex of the block, and the block beats `a`.
struct RpsSubstitutionWitness {
  int a = 0;
  int c = 0;
  std::vector<int> block;

  friend bool operator==(const RpsSubstitutionWitness&,
                         const RpsSubstitutionWitness&) = default;
};

struct DegreeScreen {
  // Every flagged vertex in vertex order. Degree n-1 flags apply for n >= 2,
  // degree n-2 flags for n >= 3.
  std::vector<FlaggedVertex> flags;
  // Present when some n-2 vertex completes the RPS-substitution shape.
  std::optional<RpsSubstitutionWitness> witness;
};

DegreeScreen ScreenDegrees(const Tournament& t);

struct StructuralClassification {
  bool is_royal_flock = false;
  bool is_eulerian = false;
  std::optional<std::vector<int>> hamiltonian_cycle;
  DegreeScreen degree_screen;
};

StructuralClassification ClassifyStructure(const Tournament& t);

const char* DegreeFlagName(DegreeFlag flag);

}  // namespace rpsgraph

#endif  // RPSGRAPH_ANALYSIS_H_
