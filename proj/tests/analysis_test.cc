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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "rpsgraph/canonical.h"
#include "rpsgraph/equilibrium.h"
#include "rpsgraph/games.h"

namespace rpsgraph {
namespace {

TEST(DominatesTest, Examples) {
  // Rock, Paper, Scissors 1, Scissors 2.
  const Tournament fig4 = TwoScissors().tournament;
  EXPECT_TRUE(*Dominates(fig4, 2, 3));
  EXPECT_FALSE(*Dominates(fig4, 3, 2));

  const Tournament rps = RockPaperScissors().tournament;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) EXPECT_FALSE(*Dominates(rps, i, j));
    }
  }
  EXPECT_TRUE(DominatedPairs(MaurerFlock().tournament).empty());
}

TEST(DominatesTest, Errors) {
  const Tournament rps = RockPaperScissors().tournament;
  EXPECT_EQ(Dominates(rps, 0, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(Dominates(rps, 0, 3).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(Dominates(rps, -1, 1).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(KingChickensTest, Examples) {
  EXPECT_EQ(KingChickens(MaurerFlock().tournament),
            (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(KingChickens(TwoScissors().tournament),
            (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(KingChickens(Tournament::Transitive(1)), (std::vector<int>{0}));
}

// Labeled tournaments up to n = 6 against BFS and the plain definition.
TEST(AnalysisOracleTest, AgreesOnEveryTournamentUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << NumPairs(n)); ++mask) {
      const oracle::Adjacency adj = oracle::AdjacencyFromMask(n, mask);
      const Tournament t = oracle::FromAdjacency(adj);
      const std::vector<int> kings = KingChickens(t);
      ASSERT_EQ(kings, oracle::BruteKings(adj));
      std::vector<DominancePair> expected;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (oracle::BruteDominates(adj, i, j)) expected.push_back({i, j});
        }
      }
      ASSERT_EQ(DominatedPairs(t), expected);
      ASSERT_EQ(IsRoyalFlock(t), expected.empty());
      ASSERT_EQ(IsRoyalFlock(t), static_cast<int>(kings.size()) == n);
      ASSERT_EQ(HamiltonianCycle(t).has_value(),
                oracle::BruteHasHamiltonianCycle(adj));
    }
  }
}

TEST(RoyalFlockTest, Examples) {
  EXPECT_TRUE(IsRoyalFlock(RockPaperScissorsLizardSpock().tournament));
  EXPECT_TRUE(IsRoyalFlock(MaurerFlock().tournament));
  EXPECT_FALSE(IsRoyalFlock(Tournament::Transitive(3)));
  EXPECT_TRUE(IsRoyalFlock(Tournament::Transitive(1)));
}

TEST(RoyalFlockTest, NoneAtTwoOrFour) {
  for (int n : {2, 4}) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << NumPairs(n)); ++mask) {
      EXPECT_FALSE(IsRoyalFlock(UnpackCode(n, mask)));
    }
  }
}

TEST(HamiltonianCycleTest, Examples) {
  EXPECT_EQ(HamiltonianCycle(RockPaperScissors().tournament),
            (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(HamiltonianCycle(Tournament::Transitive(3)).has_value());
  // Rock, Lizard, Spock, Scissors, Paper.
  EXPECT_EQ(HamiltonianCycle(RockPaperScissorsLizardSpock().tournament),
            (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(HamiltonianCycle(Tournament::Transitive(2)).has_value());
  EXPECT_FALSE(HamiltonianCycle(Tournament::Transitive(1)).has_value());
}

TEST(HamiltonianCycleTest, ReturnedCycleIsValid) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Tournament t = RandomTournament(10, seed);
    const std::optional<std::vector<int>> cycle = HamiltonianCycle(t);
    if (!cycle.has_value()) continue;
    std::vector<bool> seen(10, false);
    for (int k = 0; k < 10; ++k) {
      EXPECT_TRUE(t.Beats((*cycle)[k], (*cycle)[(k + 1) % 10]));
      seen[(*cycle)[k]] = true;
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 10);
    EXPECT_EQ((*cycle)[0], 0);
  }
}

TEST(DegreeScreenTest, Transitive) {
  const DegreeScreen s = ScreenDegrees(Tournament::Transitive(3));
  EXPECT_NE(std::find(s.flags.begin(), s.flags.end(),
                      FlaggedVertex{0, DegreeFlag::kOutDegreeAll}),
            s.flags.end());
  EXPECT_NE(std::find(s.flags.begin(), s.flags.end(),
                      FlaggedVertex{2, DegreeFlag::kInDegreeAll}),
            s.flags.end());
}

TEST(DegreeScreenTest, TurtleBalloonWitness) {
  const DegreeScreen s = ScreenDegrees(TurtleBalloon().tournament);
  EXPECT_NE(std::find(s.flags.begin(), s.flags.end(),
                      FlaggedVertex{3, DegreeFlag::kOutDegreeAllButOne}),
            s.flags.end());
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(*s.witness, (RpsSubstitutionWitness{4, 3, {0, 1, 2}}));
}

TEST(DegreeScreenTest, LizardSpockHasNoFlags) {
  const DegreeScreen s = ScreenDegrees(RockPaperScissorsLizardSpock().tournament);
  EXPECT_TRUE(s.flags.empty());
  EXPECT_FALSE(s.witness.has_value());
}

// In a royal flock an n-2 degree forces the a -> c -> block -> a shape.
TEST(DegreeScreenTest, WitnessShapeHoldsForRoyalFlocksUpToSeven) {
  for (int n = 3; n <= 7; ++n) {
    for (uint64_t packed = 0; packed < (uint64_t{1} << NumPairs(n));
         ++packed) {
      if (!IsCanonicalPacked(n, packed)) continue;
      const Tournament t = UnpackCode(n, packed);
      if (!IsRoyalFlock(t)) continue;
      const DegreeScreen s = ScreenDegrees(t);
      bool all_but_one = false;
      for (const FlaggedVertex& f : s.flags) {
        ASSERT_NE(f.flag, DegreeFlag::kOutDegreeAll);
        ASSERT_NE(f.flag, DegreeFlag::kInDegreeAll);
        all_but_one = true;
      }
      ASSERT_EQ(all_but_one, s.witness.has_value());
      if (!s.witness.has_value()) continue;
      const RpsSubstitutionWitness& w = *s.witness;
      ASSERT_EQ(static_cast<int>(w.block.size()), n - 2);
      ASSERT_TRUE(t.Beats(w.a, w.c));
      for (int b : w.block) {
        ASSERT_TRUE(t.Beats(w.c, b));
        ASSERT_TRUE(t.Beats(b, w.a));
      }
    }
  }
}

TEST(EulerianTest, Examples) {
  EXPECT_TRUE(IsEulerian(RockPaperScissorsLizardSpock().tournament));
  EXPECT_TRUE(IsEulerian(RockPaperScissors().tournament));
  EXPECT_FALSE(IsEulerian(TurtleBalloon().tournament));
  EXPECT_FALSE(IsEulerian(MaurerFlock().tournament));
  EXPECT_TRUE(IsEulerian(Tournament::Transitive(1)));
}

// Dominated strategies never carry weight in the equilibrium.
TEST(DominanceBridgeTest, DominatedStrategiesGetZero) {
  for (int n = 2; n <= 5; ++n) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << NumPairs(n)); ++mask) {
      const Tournament t = UnpackCode(n, mask);
      const EquilibriumReport r =
          NashEquilibrium(OutcomeMatrix::FromTournament(t));
      for (const DominancePair& p : DominatedPairs(t)) {
        ASSERT_EQ(r.profile[p.loser], 0);
      }
      if (r.all_positive) ASSERT_TRUE(IsRoyalFlock(t));
    }
  }
}

TEST(ClassifyStructureTest, CombinesPredicates) {
  const StructuralClassification c =
      ClassifyStructure(MaurerFlock().tournament);
  EXPECT_TRUE(c.is_royal_flock);
  EXPECT_FALSE(c.is_eulerian);
  ASSERT_TRUE(c.hamiltonian_cycle.has_value());
  EXPECT_EQ(c.hamiltonian_cycle->size(), 6u);
  EXPECT_STREQ(DegreeFlagName(DegreeFlag::kInDegreeAllButOne),
               "in_degree_n_minus_2");
}

}  // namespace
}  // namespace rpsgraph
