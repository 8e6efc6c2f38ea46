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

#ifndef RPSGRAPH_GAMES_H_
#define RPSGRAPH_GAMES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

// A tournament plus display names for its strategies.
struct NamedGame {
  std::string name;
  Tournament tournament;
  std::vector<std::string> strategy_names;
};

// Rock(0) beats Scissors(1), Scissors beats Paper(2), Paper beats Rock.
NamedGame RockPaperScissors();

// Strategies in cycle order Rock, Lizard, Spock, Scissors, Paper; each beats
// the next two.
NamedGame RockPaperScissorsLizardSpock();

// Strategies 0 -> 2 -> 1 -> 0 form an RPS cycle; 3 beats all three, all
// three beat 4, and 4 beats 3.
NamedGame TurtleBalloon();

// Rock(0), Paper(1), Scissors1(2), Scissors2(3), where Scissors1 beats
// Scissors2.
NamedGame TwoScissors();

// A royal flock on six vertices c1..c6 (vertices 0..5) that is not
// all-positive.
NamedGame MaurerFlock();

// Built-in names: rps, rpsls, turtle-balloon, two-scissors, maurer6,
// eulerian:<odd n>, transitive:<n>.
absl::StatusOr<NamedGame> BuiltinGame(const std::string& name);

std::vector<std::string> BuiltinGameNames();

// Uniformly random orientation of every pair, from std::mt19937_64(seed).
Tournament RandomTournament(int n, uint64_t seed);

// Applies `reversals` random directed 3-cycle reversals, which preserve every
// vertex's degrees. Starting from an Eulerian tournament yields random
// Eulerian tournaments.
Tournament ShuffleByTriangleReversals(const Tournament& t, int reversals,
                                      uint64_t seed);

}  // namespace rpsgraph

#endif  // RPSGRAPH_GAMES_H_
