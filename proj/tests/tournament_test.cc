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

#include "rpsgraph/tournament.h"

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "rpsgraph/games.h"

namespace rpsgraph {
namespace {

using ::testing::HasSubstr;

TEST(TournamentTest, FromEdgesBuildsRockPaperScissors) {
  absl::StatusOr<Tournament> t =
      Tournament::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}});
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_TRUE(t->Beats(0, 1));
  EXPECT_TRUE(t->Beats(1, 2));
  EXPECT_TRUE(t->Beats(2, 0));
  EXPECT_FALSE(t->Beats(1, 0));
  EXPECT_FALSE(t->Beats(0, 0));
  EXPECT_EQ(t->Edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(TournamentTest, FromEdgesRejectsMalformedInput) {
  auto message = [](const absl::StatusOr<Tournament>& t) {
    return std::string(t.status().message());
  };
  absl::StatusOr<Tournament> self_loop =
      Tournament::FromEdges(3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(self_loop.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(message(self_loop), HasSubstr("self-loop"));

  absl::StatusOr<Tournament> duplicate =
      Tournament::FromEdges(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  EXPECT_THAT(message(duplicate), HasSubstr("duplicate pair {0, 1}"));

  absl::StatusOr<Tournament> missing =
      Tournament::FromEdges(3, {{0, 1}, {1, 2}});
  EXPECT_THAT(message(missing), HasSubstr("missing pair {0, 2}"));

  absl::StatusOr<Tournament> range =
      Tournament::FromEdges(3, {{0, 3}, {1, 2}, {2, 0}});
  EXPECT_EQ(range.status().code(), absl::StatusCode::kOutOfRange);

  EXPECT_FALSE(Tournament::FromEdges(0, {}).ok());
  EXPECT_FALSE(Tournament::FromEdges(kMaxVertices + 1, {}).ok());
}

TEST(TournamentTest, SingleVertexHasNoEdges) {
  absl::StatusOr<Tournament> t = Tournament::FromEdges(1, {});
  ASSERT_TRUE(t.ok());
  EXPECT_TRUE(t->Edges().empty());
  EXPECT_EQ(Encode(*t).bits, "");
}

TEST(PairCodeTest, RockPaperScissorsCode) {
  EXPECT_EQ(Encode(RockPaperScissors().tournament).bits, "101");
}

TEST(PairCodeTest, FourVertexCode) {
  absl::StatusOr<PairCode> code = ParsePairCode("011001");
  ASSERT_TRUE(code.ok());
  EXPECT_EQ(code->n, 4);
  absl::StatusOr<Tournament> t = Decode(*code);
  ASSERT_TRUE(t.ok());
  // Pairs in order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
  EXPECT_TRUE(t->Beats(1, 0));
  EXPECT_TRUE(t->Beats(0, 2));
  EXPECT_TRUE(t->Beats(0, 3));
  EXPECT_TRUE(t->Beats(2, 1));
  EXPECT_TRUE(t->Beats(3, 1));
  EXPECT_TRUE(t->Beats(2, 3));
}

TEST(PairCodeTest, ParseErrors) {
  EXPECT_FALSE(ParsePairCode("10").ok());     // not a triangular length
  EXPECT_FALSE(ParsePairCode("1x1").ok());    // bad character
  EXPECT_FALSE(ParsePairCode("101", 4).ok());  // declared n mismatch
  absl::StatusOr<PairCode> empty = ParsePairCode("");
  ASSERT_TRUE(empty.ok());
  EXPECT_EQ(empty->n, 1);
  absl::StatusOr<PairCode> two = ParsePairCode("0", 2);
  ASSERT_TRUE(two.ok());
  EXPECT_EQ(two->n, 2);
}

TEST(PairCodeTest, RoundTripEveryLabeledTournamentUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const uint64_t total = uint64_t{1} << NumPairs(n);
    for (uint64_t mask = 0; mask < total; ++mask) {
      const Tournament t =
          oracle::FromAdjacency(oracle::AdjacencyFromMask(n, mask));
      const PairCode code = Encode(t);
      ASSERT_EQ(static_cast<int>(code.bits.size()), NumPairs(n));
      absl::StatusOr<Tournament> back = Decode(code);
      ASSERT_TRUE(back.ok());
      EXPECT_EQ(*back, t);
      const uint64_t packed = PackCode(t);
      EXPECT_EQ(UnpackCode(n, packed), t);
      EXPECT_EQ(PackedToBits(n, packed), code.bits);
    }
  }
}

TEST(PairCodeTest, PackedOrderMatchesStringOrder) {
  const int n = 5;
  std::string previous;
  for (uint64_t packed = 0; packed < (uint64_t{1} << NumPairs(n));
       ++packed) {
    const std::string bits = PackedToBits(n, packed);
    if (packed > 0) EXPECT_LT(previous, bits);
    previous = bits;
  }
}

TEST(TournamentTest, RelabelMovesEdges) {
  const Tournament t = Tournament::Transitive(4);
  const std::vector<int> perm = {2, 0, 3, 1};
  const Tournament r = t.Relabel(perm);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(r.Beats(perm[i], perm[j]), t.Beats(i, j));
    }
  }
}

TEST(TournamentTest, InducedAndReversal) {
  const Tournament t = RockPaperScissorsLizardSpock().tournament;
  const Tournament sub = t.Induced({0, 2, 4});
  EXPECT_EQ(sub.size(), 3);
  EXPECT_EQ(sub.Beats(0, 1), t.Beats(0, 2));
  EXPECT_EQ(sub.Beats(1, 2), t.Beats(2, 4));
  const Tournament flipped = t.WithEdgeReversed(0, 1);
  EXPECT_EQ(flipped.Beats(0, 1), !t.Beats(0, 1));
  EXPECT_EQ(flipped.WithEdgeReversed(1, 0), t);
}

TEST(TournamentTest, InMaskComplementsOutMask) {
  const Tournament t = MaurerFlock().tournament;
  const uint64_t all = (uint64_t{1} << t.size()) - 1;
  for (int v = 0; v < t.size(); ++v) {
    EXPECT_EQ(t.OutMask(v) | t.InMask(v) | (uint64_t{1} << v), all);
    EXPECT_EQ(t.OutMask(v) & t.InMask(v), 0u);
  }
}

TEST(OutcomeMatrixTest, RockPaperScissorsRows) {
  const OutcomeMatrix g =
      OutcomeMatrix::FromTournament(RockPaperScissors().tournament);
  EXPECT_EQ(g.Rows(), (std::vector<std::vector<int>>{
                          {1, 2, 0}, {0, 1, 2}, {2, 0, 1}}));
}

TEST(OutcomeMatrixTest, EntriesSumToTwoAcrossTheDiagonal) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const OutcomeMatrix g =
        OutcomeMatrix::FromTournament(RandomTournament(9, seed));
    for (int i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g(i, i), 1);
      for (int j = 0; j < g.size(); ++j) EXPECT_EQ(g(i, j) + g(j, i), 2);
    }
  }
}

TEST(OutcomeMatrixTest, FromRowsValidates) {
  EXPECT_TRUE(OutcomeMatrix::FromRows({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}).ok());
  EXPECT_FALSE(OutcomeMatrix::FromRows({{1, 2}, {2, 1}}).ok());
  EXPECT_FALSE(OutcomeMatrix::FromRows({{0, 2}, {0, 1}}).ok());
  EXPECT_FALSE(OutcomeMatrix::FromRows({{1, 2, 0}, {0, 1}}).ok());
}

TEST(OutcomeMatrixTest, SubmatrixKeepsOrder) {
  const OutcomeMatrix g =
      OutcomeMatrix::FromTournament(RockPaperScissorsLizardSpock().tournament);
  const OutcomeMatrix sub = g.Submatrix({4, 1});
  EXPECT_EQ(sub(0, 1), g(4, 1));
  EXPECT_EQ(sub(1, 0), g(1, 4));
}

TEST(DegreesTest, DegreesSumToPairs) {
  const Degrees d = ComputeDegrees(TurtleBalloon().tournament);
  int out_total = 0;
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(d.out[v] + d.in[v], 4);
    out_total += d.out[v];
  }
  EXPECT_EQ(out_total, NumPairs(5));
}

}  // namespace
}  // namespace rpsgraph
