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

#include "rpsgraph/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "rpsgraph/compose.h"
#include "rpsgraph/enumerate.h"
#include "rpsgraph/games.h"
#include "rpsgraph/serialization.h"

namespace rpsgraph {
namespace {

struct InputOptions {
  std::string game;
  std::string code;
  std::string file;
  std::optional<int> n;
};

void AddInputOptions(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("--game", input.game,
                  "built-in game: rps, rpsls, turtle-balloon, two-scissors, "
                  "maurer6, eulerian:<n>, transitive:<n>");
  cmd->add_option("--code", input.code, "pair code bit string");
  cmd->add_option("--file", input.file,
                  "tournament JSON file ('-' reads standard input)");
  cmd->add_option("--n", input.n, "declared size for --code");
}

absl::StatusOr<std::string> ReadText(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::StatusOr<NamedGame> FromCode(const std::string& bits,
                                   std::optional<int> n) {
  absl::StatusOr<PairCode> code = ParsePairCode(bits, n);
  if (!code.ok()) return code.status();
  absl::StatusOr<Tournament> t = Decode(*code);
  if (!t.ok()) return t.status();
  return NamedGame{absl::StrCat("code:", bits), *std::move(t), {}};
}

absl::StatusOr<NamedGame> FromFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadText(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Tournament> t = ParseTournamentJson(*text);
  if (!t.ok()) return t.status();
  return NamedGame{path, *std::move(t), {}};
}

absl::StatusOr<NamedGame> ResolveInput(const InputOptions& input) {
  const int sources = !input.game.empty() + !input.code.empty() +
                      !input.file.empty();
  if (sources != 1) {
    return absl::InvalidArgumentError(
        "give exactly one of --game, --code, --file");
  }
  if (!input.game.empty()) return BuiltinGame(input.game);
  if (!input.file.empty()) return FromFile(input.file);
  return FromCode(input.code, input.n);
}

// A built-in name, a bit string, or a JSON file path.
absl::StatusOr<NamedGame> ResolveReference(const std::string& ref) {
  if (absl::StatusOr<NamedGame> builtin = BuiltinGame(ref); builtin.ok()) {
    return builtin;
  } else if (builtin.status().code() != absl::StatusCode::kNotFound) {
    return builtin.status();
  }
  if (std::all_of(ref.begin(), ref.end(),
                  [](char c) { return c == '0' || c == '1'; })) {
    return FromCode(ref, std::nullopt);
  }
  if (std::filesystem::exists(ref)) return FromFile(ref);
  return absl::NotFoundError(absl::StrCat(
      "\"", ref, "\" is not a built-in game, pair code, or file"));
}

int Fail(std::ostream& err, const absl::Status& status,
         int code = kExitInputError) {
  err << "error: " << status.message() << "\n";
  return code;
}

int EmitTournament(const NamedGame& game, const std::string& format,
                   std::ostream& out) {
  if (format == "dot") {
    out << ToDot(game.tournament, game.strategy_names);
  } else if (format == "code") {
    out << Encode(game.tournament).bits << "\n";
  } else {
    out << TournamentToJson(game.tournament).dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Nash equilibria and structure of tournament games",
               "rpsgraph"};
  app.require_subcommand(1);

  // solve
  InputOptions solve_input;
  std::string solve_format = "json";
  bool scan_all = false;
  int64_t mc_rounds = 0;
  uint64_t seed = 0;
  CLI::App* solve = app.add_subcommand("solve", "compute the equilibrium");
  AddInputOptions(solve, solve_input);
  solve->add_option("--format", solve_format)
      ->check(CLI::IsMember({"json", "table"}));
  solve->add_flag("--scan-all", scan_all,
                  "check every support and require exactly one to pass");
  solve->add_option("--monte-carlo", mc_rounds,
                    "also estimate outcomes from sampled play");
  solve->add_option("--seed", seed, "seed for --monte-carlo");

  // analyze
  InputOptions analyze_input;
  std::string analyze_format = "json";
  CLI::App* analyze =
      app.add_subcommand("analyze", "structural report for a tournament");
  AddInputOptions(analyze, analyze_input);
  analyze->add_option("--format", analyze_format)
      ->check(CLI::IsMember({"json", "dot"}));

  // enumerate
  int enum_n = 0;
  bool want_prime = false, want_all_positive = false, want_royal = false,
       want_eulerian = false, summary = false;
  std::string strategy = "full";
  std::string enum_format = "json";
  int jobs = 1;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "isomorphism classes of size n");
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_flag("--prime", want_prime);
  enumerate->add_flag("--all-positive", want_all_positive);
  enumerate->add_flag("--royal-flock", want_royal);
  enumerate->add_flag("--eulerian", want_eulerian);
  enumerate->add_flag("--summary", summary, "print class counts only");
  enumerate->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"full", "path-fixed"}));
  enumerate->add_option("--format", enum_format)
      ->check(CLI::IsMember({"json", "table"}));
  enumerate->add_option("--jobs", jobs, "worker threads (output unchanged)")
      ->check(CLI::PositiveNumber);

  // compose
  std::string outer_ref, inner_ref, compose_format = "json";
  int at = 0;
  CLI::App* compose =
      app.add_subcommand("compose", "substitute one game into another");
  compose->add_option("--outer", outer_ref)->required();
  compose->add_option("--inner", inner_ref)->required();
  compose->add_option("--at", at)->required();
  compose->add_option("--format", compose_format)
      ->check(CLI::IsMember({"json", "code", "dot"}));

  // gen
  std::string family;
  int gen_n = 0;
  uint64_t gen_seed = 0;
  std::string gen_format = "json";
  CLI::App* gen = app.add_subcommand("gen", "generate a tournament");
  gen->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"eulerian", "transitive", "random",
                             "random-eulerian"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("--format", gen_format)
      ->check(CLI::IsMember({"json", "code", "dot"}));

  // export
  InputOptions export_input;
  std::string export_format = "json";
  CLI::App* export_cmd = app.add_subcommand("export", "re-emit a tournament");
  AddInputOptions(export_cmd, export_input);
  export_cmd->add_option("--format", export_format)
      ->check(CLI::IsMember({"json", "code", "dot"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitInputError;
  }

  if (solve->parsed()) {
    absl::StatusOr<NamedGame> game = ResolveInput(solve_input);
    if (!game.ok()) return Fail(err, game.status());
    const OutcomeMatrix g = OutcomeMatrix::FromTournament(game->tournament);
    const EquilibriumReport report = NashEquilibrium(
        g, scan_all ? SupportScan::kAll : SupportScan::kFirstAccepted);
    if (solve_format == "table") {
      out << EquilibriumTable(report, game->strategy_names);
      return kExitOk;
    }
    Json json = EquilibriumToJson(report);
    if (mc_rounds > 0) {
      absl::StatusOr<MonteCarloResult> mc =
          MonteCarloCheck(g, report.profile, mc_rounds, seed);
      if (!mc.ok()) return Fail(err, mc.status(), kExitInfeasible);
      json["monte_carlo"] = {{"rounds", mc_rounds},
                             {"seed", seed},
                             {"column_estimates", mc->column_estimates},
                             {"worst_estimate", mc->worst_estimate},
                             {"worst_column", mc->worst_column}};
    }
    out << json.dump() << "\n";
    return kExitOk;
  }

  if (analyze->parsed()) {
    absl::StatusOr<NamedGame> game = ResolveInput(analyze_input);
    if (!game.ok()) return Fail(err, game.status());
    if (analyze_format == "dot") {
      out << ToDot(game->tournament, game->strategy_names);
    } else {
      out << AnalysisToJson(game->tournament).dump() << "\n";
    }
    return kExitOk;
  }

  if (enumerate->parsed()) {
    if (enum_n < 1 || enum_n > kMaxEnumerationVertices) {
      return Fail(err,
                  absl::OutOfRangeError(absl::StrCat(
                      "enumeration supports 1 <= n <= ",
                      kMaxEnumerationVertices)),
                  kExitInfeasible);
    }
    if (summary) {
      absl::StatusOr<CatalogSummary> counts = CatalogCounts(enum_n, jobs);
      if (!counts.ok()) return Fail(err, counts.status(), kExitInfeasible);
      out << CatalogSummaryToJson(*counts).dump() << "\n";
      return kExitOk;
    }
    EnumerationPlan plan;
    plan.n = enum_n;
    plan.jobs = jobs;
    plan.strategy = strategy == "path-fixed" ? EnumerationStrategy::kPathFixed
                                             : EnumerationStrategy::kFull;
    if (want_prime) plan.filters.push_back(Filter::kPrime);
    if (want_all_positive) plan.filters.push_back(Filter::kAllPositive);
    if (want_royal) plan.filters.push_back(Filter::kRoyalFlock);
    if (want_eulerian) plan.filters.push_back(Filter::kEulerian);
    if ((want_all_positive || want_eulerian) && enum_n % 2 == 0) {
      err << "note: no tournament of even size is "
          << (want_eulerian ? "Eulerian" : "all-positive")
          << "; the result is empty\n";
    }
    absl::StatusOr<EnumerationResult> result = EnumerateTournaments(plan);
    if (!result.ok()) return Fail(err, result.status(), kExitInfeasible);
    const std::vector<CatalogEntry> entries =
        BuildCatalog(enum_n, result->classes);
    if (enum_format == "table") {
      out << CatalogTable(entries);
    } else {
      for (const CatalogEntry& entry : entries) {
        out << CatalogEntryToJson(entry).dump() << "\n";
      }
    }
    return kExitOk;
  }

  if (compose->parsed()) {
    absl::StatusOr<NamedGame> outer = ResolveReference(outer_ref);
    if (!outer.ok()) return Fail(err, outer.status());
    absl::StatusOr<NamedGame> inner = ResolveReference(inner_ref);
    if (!inner.ok()) return Fail(err, inner.status());
    absl::StatusOr<Tournament> composed =
        Substitute({outer->tournament, at, inner->tournament});
    if (!composed.ok()) return Fail(err, composed.status());
    return EmitTournament(
        NamedGame{absl::StrCat(outer_ref, "[", at, "<-", inner_ref, "]"),
                  *std::move(composed),
                  {}},
        compose_format, out);
  }

  if (gen->parsed()) {
    if (gen_n < 1 || gen_n > kMaxVertices) {
      return Fail(err, absl::OutOfRangeError("n outside supported range"),
                  kExitInfeasible);
    }
    std::optional<Tournament> t;
    if (family == "transitive") {
      t = Tournament::Transitive(gen_n);
    } else if (family == "random") {
      t = RandomTournament(gen_n, gen_seed);
    } else {
      absl::StatusOr<Tournament> eulerian = EulerianRotational(gen_n);
      if (!eulerian.ok()) return Fail(err, eulerian.status(), kExitInfeasible);
      t = *std::move(eulerian);
      if (family == "random-eulerian") {
        t = ShuffleByTriangleReversals(*t, 10 * gen_n, gen_seed);
      }
    }
    return EmitTournament(NamedGame{family, *std::move(t), {}}, gen_format,
                          out);
  }

  if (export_cmd->parsed()) {
    absl::StatusOr<NamedGame> game = ResolveInput(export_input);
    if (!game.ok()) return Fail(err, game.status());
    return EmitTournament(*game, export_format, out);
  }
  return kExitInputError;
}

}  // namespace rpsgraph
