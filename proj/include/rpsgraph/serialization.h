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

// Text formats. Rationals are always written as "p/q" strings, never floats.
//
//   tournament:  {"n": 3, "edges": [[0,1],[1,2],[2,0]]}
//                {"n": 3, "code": "101"}          (exactly one of the two)
//   equilibrium: {"profile": ["1/3", ...], "support": [0, 1, 2],
//                 "column_payoffs": ["1", ...], "all_positive": true,
//                 "normalized": [1, 1, 1]}
//   catalog:     one JSON object per line, see CatalogEntryToJson.
//   dot:         one "u -> v;" line per edge; dominated vertices are drawn
//                dashed and dominance edges red.

#ifndef RPSGRAPH_SERIALIZATION_H_
#define RPSGRAPH_SERIALIZATION_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "rpsgraph/enumerate.h"
#include "rpsgraph/equilibrium.h"
#include "rpsgraph/tournament.h"

namespace rpsgraph {

using Json = nlohmann::ordered_json;

Json TournamentToJson(const Tournament& t);
Json TournamentCodeToJson(const Tournament& t);
absl::StatusOr<Tournament> TournamentFromJson(const Json& json);
absl::StatusOr<Tournament> ParseTournamentJson(const std::string& text);

Json EquilibriumToJson(const EquilibriumReport& report);
absl::StatusOr<EquilibriumReport> EquilibriumFromJson(const Json& json);

Json CatalogEntryToJson(const CatalogEntry& entry);
Json CatalogSummaryToJson(const CatalogSummary& summary);

// Full structural report: degrees, dominance, kings, cycle, modules and the
// equilibrium.
Json AnalysisToJson(const Tournament& t);

// "n_k: <a, b, c>  code=<bits>" rows plus a flag column.
std::string CatalogTable(const std::vector<CatalogEntry>& entries);
std::string EquilibriumTable(const EquilibriumReport& report,
                             const std::vector<std::string>& names);

std::string ToDot(const Tournament& t,
                  const std::vector<std::string>& names = {});

}  // namespace rpsgraph

#endif  // RPSGRAPH_SERIALIZATION_H_
