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

#ifndef RPSGRAPH_TOURNAMENT_H_
#define RPSGRAPH_TOURNAMENT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace rpsgraph {

// Largest tournament the bitset representation can hold.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;  // (winner, loser)

// A complete oriented graph on vertices 0..n-1. Vertex i "beats" j when the
// edge i -> j is present. Exactly one of Beats(i, j), Beats(j, i) holds for
// every i != j. Instances are immutable.
class Tournament {
 public:
  // Builds a tournament from an explicit edge list. Every unordered pair must
  // be covered exactly once.
  static absl::StatusOr<Tournament> FromEdges(int n,
                                              absl::Span<const Edge> edges);

  // Builds a tournament by asking `i_beats_j(i, j)` for every pair i < j.
  static absl::StatusOr<Tournament> FromPairs(
      int n, const std::function<bool(int, int)>& i_beats_j);

  // The transitive tournament in which i beats j whenever i < j.
  static Tournament Transitive(int n);

  int size() const { return n_; }
  bool Beats(int i, int j) const { return (out_[i] >> j) & 1u; }

  // Bitmask of the vertices beaten by / beating `i`.
  uint64_t OutMask(int i) const { return out_[i]; }
  uint64_t InMask(int i) const;

  // All n(n-1)/2 edges, ordered by winner then loser.
  std::vector<Edge> Edges() const;

  // Relabels vertex v as perm[v]; the result has perm[i] beat perm[j] iff
  // i beats j here. `perm` must be a permutation of 0..n-1.
  Tournament Relabel(absl::Span<const int> perm) const;

  // The sub-tournament on `vertices`, renumbered 0..k-1 in the given order.
  Tournament Induced(absl::Span<const int> vertices) const;

  // A copy with the single edge between i and j reversed.
  Tournament WithEdgeReversed(int i, int j) const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  explicit Tournament(int n) : n_(n), out_(n, 0) {}

  int n_;
  std::vector<uint64_t> out_;
};

// Serialized orientation: one character per pair (i, j), i < j, in the order
// (0,1),(0,2),...,(0,n-1),(1,2),...; '1' means i beats j.
struct PairCode {
  int n = 0;
  std::string bits;

  friend bool operator==(const PairCode&, const PairCode&) = default;
  friend auto operator<=>(const PairCode&, const PairCode&) = default;
};

inline constexpr int NumPairs(int n) { return n * (n - 1) / 2; }

// Index of pair (i, j), i < j, within a PairCode of size n.
inline constexpr int PairIndex(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

PairCode Encode(const Tournament& t);
absl::StatusOr<Tournament> Decode(const PairCode& code);

// Validates a bit string. With no declared size, n is inferred from the
// length (the empty string is the single-strategy game).
absl::StatusOr<PairCode> ParsePairCode(const std::string& bits,
                                       std::optional<int> n = std::nullopt);

// Packs the code into an integer whose numeric order equals the string order
// (pair 0 is the most significant bit). Requires NumPairs(n) <= 64.
uint64_t PackCode(const Tournament& t);
Tournament UnpackCode(int n, uint64_t packed);
std::string PackedToBits(int n, uint64_t packed);

// The game matrix: g(i, j) = 2 if i beats j, 1 on the diagonal, 0 otherwise.
class OutcomeMatrix {
 public:
  static OutcomeMatrix FromTournament(const Tournament& t);

  // Validates diagonal entries of 1 and off-diagonal pairs {0, 2}.
  static absl::StatusOr<OutcomeMatrix> FromRows(
      const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int i, int j) const { return g_[i * n_ + j]; }

  // Principal submatrix on `indices` (kept in the given order).
  OutcomeMatrix Submatrix(absl::Span<const int> indices) const;

  std::vector<std::vector<int>> Rows() const;

  friend bool operator==(const OutcomeMatrix&, const OutcomeMatrix&) = default;

 private:
  OutcomeMatrix(int n, std::vector<int> g) : n_(n), g_(std::move(g)) {}

  int n_;
  std::vector<int> g_;
};

struct Degrees {
  std::vector<int> out;
  std::vector<int> in;
};

Degrees ComputeDegrees(const Tournament& t);

}  // namespace rpsgraph

#endif  // RPSGRAPH_TOURNAMENT_H_
