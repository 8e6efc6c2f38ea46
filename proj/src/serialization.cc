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

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rpsgraph/analysis.h"
#include "rpsgraph/canonical.h"
#include "rpsgraph/compose.h"

namespace rpsgraph {
namespace {

Json RationalsToJson(absl::Span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(ToString(v));
  return out;
}

Json IntegersToJson(absl::Span<const BigInt> values) {
  Json out = Json::array();
  for (const BigInt& v : values) {
    if (v.fits_slong_p()) {
      out.push_back(v.get_si());
    } else {
      out.push_back(v.get_str());
    }
  }
  return out;
}

absl::StatusOr<std::vector<Rational>> RationalsFromJson(const Json& json,
                                                        const char* field) {
  if (!json.contains(field) || !json[field].is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing array field \"", field, "\""));
  }
  std::vector<Rational> values;
  for (const Json& item : json[field]) {
    if (!item.is_string()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "field \"", field, "\" must hold \"p/q\" strings"));
    }
    absl::StatusOr<Rational> r = ParseRational(item.get<std::string>());
    if (!r.ok()) return r.status();
    values.push_back(*std::move(r));
  }
  return values;
}

std::string Angle(absl::Span<const BigInt> values) {
  std::vector<std::string> parts;
  for (const BigInt& v : values) parts.push_back(v.get_str());
  return absl::StrCat("<", absl::StrJoin(parts, ", "), ">");
}

}  // namespace

Json TournamentToJson(const Tournament& t) {
  Json edges = Json::array();
  for (const auto& [u, v] : t.Edges()) edges.push_back({u, v});
  return Json{{"n", t.size()}, {"edges", std::move(edges)}};
}

Json TournamentCodeToJson(const Tournament& t) {
  return Json{{"n", t.size()}, {"code", Encode(t).bits}};
}

absl::StatusOr<Tournament> TournamentFromJson(const Json& json) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("tournament JSON must be an object");
  }
  if (!json.contains("n") || !json["n"].is_number_integer()) {
    return absl::InvalidArgumentError("tournament JSON needs an integer \"n\"");
  }
  const int n = json["n"].get<int>();
  const bool has_edges = json.contains("edges");
  const bool has_code = json.contains("code");
  if (has_edges == has_code) {
    return absl::InvalidArgumentError(
        "tournament JSON needs exactly one of \"edges\" and \"code\"");
  }
  if (has_code) {
    if (!json["code"].is_string()) {
      return absl::InvalidArgumentError("\"code\" must be a string");
    }
    absl::StatusOr<PairCode> code =
        ParsePairCode(json["code"].get<std::string>(), n);
    if (!code.ok()) return code.status();
    return Decode(*code);
  }
  if (!json["edges"].is_array()) {
    return absl::InvalidArgumentError("\"edges\" must be an array");
  }
  std::vector<Edge> edges;
  for (const Json& e : json["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      return absl::InvalidArgumentError("each edge must be [winner, loser]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Tournament::FromEdges(n, edges);
}

absl::StatusOr<Tournament> ParseTournamentJson(const std::string& text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed tournament JSON: ", e.what()));
  }
  return TournamentFromJson(json);
}

Json EquilibriumToJson(const EquilibriumReport& report) {
  return Json{{"profile", RationalsToJson(report.profile.probs())},
              {"support", report.support},
              {"column_payoffs", RationalsToJson(report.column_payoffs)},
              {"all_positive", report.all_positive},
              {"normalized", IntegersToJson(report.normalized)}};
}

absl::StatusOr<EquilibriumReport> EquilibriumFromJson(const Json& json) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("equilibrium JSON must be an object");
  }
  absl::StatusOr<std::vector<Rational>> probs =
      RationalsFromJson(json, "profile");
  if (!probs.ok()) return probs.status();
  absl::StatusOr<StrategyProfile> profile =
      StrategyProfile::Create(*std::move(probs));
  if (!profile.ok()) return profile.status();
  absl::StatusOr<std::vector<Rational>> payoffs =
      RationalsFromJson(json, "column_payoffs");
  if (!payoffs.ok()) return payoffs.status();
  EquilibriumReport report;
  report.profile = *std::move(profile);
  report.column_payoffs = *std::move(payoffs);
  for (int i = 0; i < report.profile.size(); ++i) {
    if (report.profile[i] > 0) report.support.push_back(i);
  }
  report.all_positive =
      static_cast<int>(report.support.size()) == report.profile.size();
  report.normalized = ScaleToIntegers(report.profile.probs());
  return report;
}

Json CatalogEntryToJson(const CatalogEntry& entry) {
  return Json{{"name", entry.name},
              {"n", entry.canonical.code.n},
              {"code", entry.canonical.code.bits},
              {"normalized", IntegersToJson(entry.normalized)},
              {"equilibrium", EquilibriumToJson(entry.equilibrium)},
              {"flags",
               {{"all_positive", entry.flags.all_positive},
                {"prime", entry.flags.prime},
                {"eulerian", entry.flags.eulerian},
                {"royal_flock", entry.flags.royal_flock}}}};
}

Json CatalogSummaryToJson(const CatalogSummary& summary) {
  return Json{{"n", summary.n},
              {"total_classes", summary.total_classes},
              {"royal_flocks", summary.royal_flocks},
              {"eulerian", summary.eulerian},
              {"all_positive", summary.all_positive},
              {"all_positive_prime", summary.all_positive_prime},
              {"uniform_all_positive_prime",
               summary.uniform_all_positive_prime}};
}

Json AnalysisToJson(const Tournament& t) {
  const Degrees degrees = ComputeDegrees(t);
  const StructuralClassification structure = ClassifyStructure(t);
  Json out{{"n", t.size()}, {"code", Encode(t).bits}};
  if (absl::StatusOr<CanonicalForm> canonical = ComputeCanonicalForm(t);
      canonical.ok()) {
    out["canonical_code"] = canonical->code.bits;
  } else {
    out["canonical_code"] = nullptr;
  }
  out["out_degree"] = degrees.out;
  out["in_degree"] = degrees.in;
  Json dominance = Json::array();
  for (const DominancePair& p : DominatedPairs(t)) {
    dominance.push_back({p.winner, p.loser});
  }
  out["dominated_pairs"] = std::move(dominance);
  out["king_chickens"] = KingChickens(t);
  out["royal_flock"] = structure.is_royal_flock;
  out["eulerian"] = structure.is_eulerian;
  out["hamiltonian_cycle"] = structure.hamiltonian_cycle.has_value()
                                 ? Json(*structure.hamiltonian_cycle)
                                 : Json(nullptr);
  Json flags = Json::array();
  for (const FlaggedVertex& f : structure.degree_screen.flags) {
    flags.push_back({{"vertex", f.vertex}, {"flag", DegreeFlagName(f.flag)}});
  }
  out["degree_flags"] = std::move(flags);
  if (const auto& w = structure.degree_screen.witness; w.has_value()) {
    out["rps_substitution"] = {{"a", w->a}, {"c", w->c}, {"block", w->block}};
  } else {
    out["rps_substitution"] = nullptr;
  }
  const std::optional<ModuleWitness> module = FindModule(t);
  out["prime"] = !module.has_value();
  out["module"] = module.has_value() ? Json(module->block) : Json(nullptr);
  out["equilibrium"] =
      EquilibriumToJson(NashEquilibrium(OutcomeMatrix::FromTournament(t)));
  return out;
}

std::string CatalogTable(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const CatalogEntry& e : entries) {
    std::vector<std::string> flags;
    if (e.flags.all_positive) flags.push_back("all-positive");
    if (e.flags.prime) flags.push_back("prime");
    if (e.flags.eulerian) flags.push_back("eulerian");
    if (e.flags.royal_flock) flags.push_back("royal-flock");
    absl::StrAppend(&out, e.name, ": ", Angle(e.normalized),
                    "  code=", e.canonical.code.bits, "  [",
                    absl::StrJoin(flags, ","), "]\n");
  }
  return out;
}

std::string EquilibriumTable(const EquilibriumReport& report,
                             const std::vector<std::string>& names) {
  std::string out = "strategy\tprobability\tcolumn_payoff\n";
  for (int i = 0; i < report.profile.size(); ++i) {
    const std::string name =
        i < static_cast<int>(names.size()) ? names[i] : absl::StrCat(i);
    absl::StrAppend(&out, name, "\t", ToString(report.profile[i]), "\t",
                    ToString(report.column_payoffs[i]), "\n");
  }
  absl::StrAppend(&out, "normalized: ", Angle(report.normalized), "\n");
  absl::StrAppend(&out, "all_positive: ", report.all_positive ? "yes" : "no",
                  "\n");
  return out;
}

std::string ToDot(const Tournament& t, const std::vector<std::string>& names) {
  const std::vector<DominancePair> dominance = DominatedPairs(t);
  std::vector<bool> dominated(t.size(), false);
  for (const DominancePair& p : dominance) dominated[p.loser] = true;
  std::string out = "digraph tournament {\n";
  for (int v = 0; v < t.size(); ++v) {
    const std::string label =
        v < static_cast<int>(names.size()) ? names[v] : absl::StrCat(v);
    absl::StrAppend(&out, "  ", v, " [label=\"", label, "\"",
                    dominated[v] ? ", style=dashed" : "", "];\n");
  }
  for (const auto& [u, v] : t.Edges()) {
    const bool dominance_edge =
        std::find(dominance.begin(), dominance.end(), DominancePair{u, v}) !=
        dominance.end();
    absl::StrAppend(&out, "  ", u, " -> ", v,
                    dominance_edge ? " [color=red]" : "", ";\n");
  }
  absl::StrAppend(&out, "}\n");
  return out;
}

}  // namespace rpsgraph
