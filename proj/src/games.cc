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

#include "rpsgraph/games.h"

#include <random>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "rpsgraph/compose.h"

namespace rpsgraph {
namespace {

NamedGame Build(std::string name, int n, std::vector<Edge> edges,
                std::vector<std::string> strategy_names) {
  return NamedGame{std::move(name), *Tournament::FromEdges(n, edges),
                   std::move(strategy_names)};
}

std::vector<std::string> Numbered(const std::string& prefix, int n,
                                  int first = 0) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(absl::StrCat(prefix, i + first));
  return names;
}

absl::StatusOr<int> ParseSizeSuffix(const std::string& name,
                                    const std::string& prefix) {
  int n = 0;
  if (!absl::SimpleAtoi(name.substr(prefix.size()), &n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed size in game name \"", name, "\""));
  }
  if (n < 1 || n > kMaxVertices) {
    return absl::OutOfRangeError(
        absl::StrCat("game size ", n, " outside [1, ", kMaxVertices, "]"));
  }
  return n;
}

}  // namespace

NamedGame RockPaperScissors() {
  return Build("rps", 3, {{0, 1}, {1, 2}, {2, 0}},
               {"Rock", "Scissors", "Paper"});
}

NamedGame RockPaperScissorsLizardSpock() {
  // Rock 0, Lizard 1, Spock 2, Scissors 3, Paper 4.
  return Build("rpsls", 5,
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                {0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}},
               {"Rock", "Lizard", "Spock", "Scissors", "Paper"});
}

NamedGame TurtleBalloon() {
  return Build("turtle-balloon", 5,
               {{0, 2}, {2, 1}, {1, 0},
                {3, 0}, {3, 1}, {3, 2},
                {0, 4}, {1, 4}, {2, 4},
                {4, 3}},
               Numbered("", 5, 1));
}

NamedGame TwoScissors() {
  return Build("two-scissors", 4,
               {{1, 0}, {0, 2}, {0, 3}, {2, 1}, {3, 1}, {2, 3}},
               {"Rock", "Paper", "Scissors1", "Scissors2"});
}

NamedGame MaurerFlock() {
  return Build("maurer6", 6,
               {{0, 1}, {0, 2}, {0, 3},
                {1, 2}, {1, 5},
                {2, 3}, {2, 4}, {2, 5},
                {3, 4}, {3, 1},
                {4, 5}, {4, 0}, {4, 1},
                {5, 0}, {5, 3}},
               Numbered("c", 6, 1));
}

absl::StatusOr<NamedGame> BuiltinGame(const std::string& name) {
  if (name == "rps") return RockPaperScissors();
  if (name == "rpsls") return RockPaperScissorsLizardSpock();
  if (name == "turtle-balloon") return TurtleBalloon();
  if (name == "two-scissors") return TwoScissors();
  if (name == "maurer6") return MaurerFlock();
  if (absl::StartsWith(name, "eulerian:")) {
    absl::StatusOr<int> n = ParseSizeSuffix(name, "eulerian:");
    if (!n.ok()) return n.status();
    absl::StatusOr<Tournament> t = EulerianRotational(*n);
    if (!t.ok()) return t.status();
    return NamedGame{name, *std::move(t), Numbered("s", *n)};
  }
  if (absl::StartsWith(name, "transitive:")) {
    absl::StatusOr<int> n = ParseSizeSuffix(name, "transitive:");
    if (!n.ok()) return n.status();
    return NamedGame{name, Tournament::Transitive(*n), Numbered("s", *n)};
  }
  return absl::NotFoundError(absl::StrCat("unknown built-in game \"", name,
                                          "\""));
}

std::vector<std::string> BuiltinGameNames() {
  return {"rps",      "rpsls",          "turtle-balloon", "two-scissors",
          "maurer6",  "eulerian:<n>",   "transitive:<n>"};
}

Tournament RandomTournament(int n, uint64_t seed) {
  std::mt19937_64 engine(seed);
  return *Tournament::FromPairs(n, [&](int, int) { return (engine() >> 63) != 0; });
}

Tournament ShuffleByTriangleReversals(const Tournament& t, int reversals,
                                      uint64_t seed) {
  const int n = t.size();
  if (n < 3) return t;
  std::mt19937_64 engine(seed);
  Tournament current = t;
  int done = 0;
  for (int64_t attempt = 0; done < reversals && attempt < 100LL * reversals + 100;
       ++attempt) {
    const int a = static_cast<int>(engine() % n);
    const int b = static_cast<int>(engine() % n);
    const int c = static_cast<int>(engine() % n);
    if (a == b || b == c || a == c) continue;
    const bool forward = current.Beats(a, b) && current.Beats(b, c) &&
                         current.Beats(c, a);
    const bool backward = current.Beats(b, a) && current.Beats(c, b) &&
                          current.Beats(a, c);
    if (!forward && !backward) continue;
    current = current.WithEdgeReversed(a, b)
                  .WithEdgeReversed(b, c)
                  .WithEdgeReversed(c, a);
    ++done;
  }
  return current;
}

}  // namespace rpsgraph
