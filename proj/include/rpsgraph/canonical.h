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

#ifndef RPSGRAPH_CANONICAL_H_
#define RPSGRAPH_CANONICAL_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

// Canonicalization is an exhaustive minimization over all n! relabelings.
inline constexpr int kMaxCanonicalVertices = 8;

struct CanonicalForm {
  // Lexicographically least PairCode over all relabelings.
  PairCode code;
  // source.Relabel(witness) encodes to `code`.
  std::vector<int> witness;
};

absl::StatusOr<CanonicalForm> ComputeCanonicalForm(const Tournament& t);

// Same minimization on a packed code (see PackCode). Returns the minimal
// packed code; `witness`, when non-null, receives the relabeling.
uint64_t CanonicalPacked(int n, uint64_t packed,
                         std::vector<int>* witness = nullptr);

// True iff `packed` is already the minimum of its isomorphism class. Exits
// on the first relabeling that produces a smaller code.
bool IsCanonicalPacked(int n, uint64_t packed);

bool Isomorphic(const Tournament& a, const Tournament& b);

}  // namespace rpsgraph

#endif  // RPSGRAPH_CANONICAL_H_
