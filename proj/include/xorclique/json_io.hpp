#pragma once

#include <string>

#include <json.hpp>

#include "xorclique/bounds.hpp"
#include "xorclique/clique.hpp"
#include "xorclique/family.hpp"
#include "xorclique/solve.hpp"

namespace xorclique {

using Json = nlohmann::json;

/// {"k":..,"N":..,"provenance":..,"sets":[{"A":[..],"B":[..]},..]}
/// A-elements lie in [0,N), B-elements in [N,2N), both emitted sorted.
Json family_to_json(const SetFamily& fam);

/// Accepts unsorted element lists; rejects duplicates, out-of-range
/// elements, wrong set sizes, k < 1 or N < k with code BadInput.
SetFamily family_from_json(const Json& j);

Json verification_to_json(const VerificationReport& rep);

/// {"k":..,"N":..,"lower":{"value":..,"provenance":..},
///  "uppers":[{"value":..,"rule":..},..],"exact":int|null}
/// Values exceeding 64 bits are emitted as decimal strings.
Json bound_report_to_json(const BoundReport& rep);

/// `family` is the decoded witness family (the search result always
/// matches it in size, so the pairing is well defined).
Json clique_result_to_json(const CliqueResult& res, const SetFamily& family);

/// Clique result plus the decoded family and the bound bracket.
Json solve_outcome_to_json(const SolveOutcome& out);

Json parse_json(const std::string& text);

} // namespace xorclique
