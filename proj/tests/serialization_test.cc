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

#include "rpsgraph/serialization.h"

#include <string>

#include "absl/strings/match.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "rpsgraph/canonical.h"
#include "rpsgraph/games.h"

namespace rpsgraph {
namespace {

int CountEdgeLines(const std::string& dot) {
  int edges = 0;
  for (absl::string_view line : absl::StrSplit(dot, '\n')) {
    edges += absl::StrContains(line, "->");
  }
  return edges;
}

TEST(TournamentJsonTest, RoundTripKeepsCanonicalCode) {
  for (const std::string& name : BuiltinGameNames()) {
    if (absl::StrContains(name, "<")) continue;
    const Tournament t = BuiltinGame(name)->tournament;
    const std::string text = TournamentToJson(t).dump();
    absl::StatusOr<Tournament> back = ParseTournamentJson(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, t);
    EXPECT_EQ(ComputeCanonicalForm(*back)->code,
              ComputeCanonicalForm(t)->code);
    EXPECT_EQ(*TournamentFromJson(TournamentCodeToJson(t)), t);
  }
}

TEST(TournamentJsonTest, Schema) {
  EXPECT_EQ(TournamentToJson(RockPaperScissors().tournament).dump(),
            R"({"n":3,"edges":[[0,1],[1,2],[2,0]]})");
  EXPECT_EQ(TournamentCodeToJson(RockPaperScissors().tournament).dump(),
            R"({"n":3,"code":"101"})");
}

TEST(TournamentJsonTest, RejectsMalformedInput) {
  EXPECT_FALSE(ParseTournamentJson("{").ok());
  EXPECT_FALSE(ParseTournamentJson("[]").ok());
  EXPECT_FALSE(ParseTournamentJson(R"({"edges":[]})").ok());
  EXPECT_FALSE(ParseTournamentJson(R"({"n":3})").ok());
  EXPECT_FALSE(
      ParseTournamentJson(R"({"n":3,"code":"101","edges":[[0,1]]})").ok());
  EXPECT_FALSE(ParseTournamentJson(R"({"n":4,"code":"101"})").ok());
  EXPECT_FALSE(ParseTournamentJson(R"({"n":3,"edges":[[0,1],[1,2]]})").ok());
  EXPECT_FALSE(
      ParseTournamentJson(R"({"n":3,"edges":[[0,1],[1,2],[2]]})").ok());
  EXPECT_FALSE(ParseTournamentJson(R"({"n":"3","code":"101"})").ok());
}

TEST(EquilibriumJsonTest, SchemaUsesRationalStrings) {
  const EquilibriumReport r = NashEquilibrium(
      OutcomeMatrix::FromTournament(RockPaperScissors().tournament));
  EXPECT_EQ(EquilibriumToJson(r).dump(),
            R"({"profile":["1/3","1/3","1/3"],"support":[0,1,2],)"
            R"("column_payoffs":["1","1","1"],"all_positive":true,)"
            R"("normalized":[1,1,1]})");
}

TEST(EquilibriumJsonTest, RoundTrip) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const OutcomeMatrix g =
        OutcomeMatrix::FromTournament(RandomTournament(7, seed));
    const EquilibriumReport r = NashEquilibrium(g);
    absl::StatusOr<EquilibriumReport> back =
        EquilibriumFromJson(Json::parse(EquilibriumToJson(r).dump()));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(back->profile, r.profile);
    EXPECT_EQ(back->support, r.support);
    EXPECT_EQ(back->column_payoffs, r.column_payoffs);
    EXPECT_EQ(back->all_positive, r.all_positive);
    EXPECT_EQ(back->normalized, r.normalized);
  }
}

TEST(EquilibriumJsonTest, RejectsFloatsAndBadProfiles) {
  EXPECT_FALSE(EquilibriumFromJson(
                   Json::parse(R"({"profile":[0.5,0.5],"column_payoffs":[]})"))
                   .ok());
  EXPECT_FALSE(EquilibriumFromJson(Json::parse(
                   R"({"profile":["1/2","1/3"],"column_payoffs":["1","1"]})"))
                   .ok());
  EXPECT_FALSE(EquilibriumFromJson(Json::parse(R"({"profile":["1"]})")).ok());
}

TEST(DotTest, EdgeCounts) {
  EXPECT_EQ(CountEdgeLines(ToDot(RockPaperScissors().tournament)), 3);
  EXPECT_EQ(CountEdgeLines(ToDot(MaurerFlock().tournament)), 15);
}

TEST(DotTest, MarksDominance) {
  const NamedGame fig4 = TwoScissors();
  const std::string dot = ToDot(fig4.tournament, fig4.strategy_names);
  EXPECT_TRUE(absl::StrContains(dot, "2 -> 3 [color=red];"));
  EXPECT_TRUE(absl::StrContains(dot, "style=dashed"));
  EXPECT_TRUE(absl::StrContains(dot, "label=\"Rock\""));
  EXPECT_FALSE(absl::StrContains(ToDot(MaurerFlock().tournament), "red"));
}

TEST(AnalysisJsonTest, TurtleBalloon) {
  const Json j = AnalysisToJson(TurtleBalloon().tournament);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["prime"], false);
  EXPECT_EQ(j["module"], Json::parse("[0,1,2]"));
  EXPECT_EQ(j["eulerian"], false);
  EXPECT_EQ(j["rps_substitution"]["block"], Json::parse("[0,1,2]"));
  EXPECT_EQ(j["equilibrium"]["normalized"], Json::parse("[1,1,1,3,3]"));
}

TEST(AnalysisJsonTest, LargeTournamentHasNoCanonicalCode) {
  const Json j = AnalysisToJson(RandomTournament(10, 1));
  EXPECT_TRUE(j["canonical_code"].is_null());
}

TEST(CatalogTableTest, Format) {
  const std::vector<CatalogEntry> three = *Classify(3);
  EXPECT_EQ(CatalogTable(three),
            "3_1: <1, 1, 1>  code=" + three[0].canonical.code.bits +
                "  [all-positive,prime,eulerian,royal-flock]\n");
  const Json entry = CatalogEntryToJson(three[0]);
  EXPECT_EQ(entry["name"], "3_1");
  EXPECT_EQ(entry["normalized"], Json::parse("[1,1,1]"));
}

TEST(EquilibriumTableTest, UsesStrategyNames) {
  const NamedGame rps = RockPaperScissors();
  const std::string table = EquilibriumTable(
      NashEquilibrium(OutcomeMatrix::FromTournament(rps.tournament)),
      rps.strategy_names);
  EXPECT_TRUE(absl::StrContains(table, "Rock\t1/3\t1\n"));
  EXPECT_TRUE(absl::StrContains(table, "normalized: <1, 1, 1>"));
}

}  // namespace
}  // namespace rpsgraph
