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

#ifndef RPSGRAPH_COMPOSE_H_
#define RPSGRAPH_COMPOSE_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/equilibrium.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

// Replace strategy `at` of `outer` by the whole `inner` game.
struct SubstitutionSpec {
  Tournament outer = Tournament::Transitive(1);
  int at = 0;
  Tournament inner = Tournament::Transitive(1);
};

// Vertex numbering of the result: outer vertices below `at` keep their index,
// the inner game occupies [at, at + inner.size()), and the remaining outer
// vertices follow in order. An outer vertex beats the whole block iff it beat
// `at`.
absl::StatusOr<Tournament> Substitute(const SubstitutionSpec& spec);

// Product-form equilibrium of the substituted game, laid out in Substitute's
// vertex numbering: outer weights outside the block, outer_eq[at] * inner_eq
// inside it.
absl::StatusOr<StrategyProfile> ComposedEquilibrium(
    const StrategyProfile& outer_eq, int at, const StrategyProfile& inner_eq);

// A block S, 2 <= |S| <= n-1, that every outside vertex either beats
// entirely or loses to entirely.
struct ModuleWitness {
  std::vector<int> block;
  std::vector<int> beats_block;   // outside vertices beating all of S
  std::vector<int> beaten_by_block;  // outside vertices losing to all of S
};

// Checks a witness against the edge relation.
bool ValidateModule(const Tournament& t, const ModuleWitness& witness);

// The first nontrivial module, scanning subsets by increasing size and
// lexicographically within a size.
std::optional<ModuleWitness> FindModule(const Tournament& t);

// No nontrivial module. n = 1 and n = 2 are prime.
bool IsPrime(const Tournament& t);

// Inverts Substitute for a module: the outer game contracts the block to its
// smallest vertex (numbered by rank among the survivors), the inner game is
// the block in increasing vertex order. Substitute(Factor(t, w)) is
// isomorphic to t.
SubstitutionSpec Factor(const Tournament& t, const ModuleWitness& witness);

// Vertex i beats i+1, ..., i+(n-1)/2 (mod n). Requires odd n >= 1.
absl::StatusOr<Tournament> EulerianRotational(int n);

}  // namespace rpsgraph

#endif  // RPSGRAPH_COMPOSE_H_
