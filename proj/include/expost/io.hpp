#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "expost/dual.hpp"
#include "expost/solver.hpp"
#include "expost/statistics.hpp"

namespace expost::io {

using Json = nlohmann::ordered_json;

// Throws Error(InvalidInput) on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);

// {"types":{"A","B"}, "joint", "actions":{"A","B"}, "payoff_A", "constant_sum"}
FiniteBayesGame game_from_json(const Json& j);
Json to_json(const FiniteBayesGame& game);

// Optional "outcomes": {"labels": [[...]], "utility_A": {...}, "utility_B": {...}}
std::optional<OutcomeMap> outcomes_from_json(const Json& game);

// {"A": {"pure": [...]} | {"behavior": [[...]]}, "B": ...}
StrategyProfile profile_from_json(const Json& j, const FiniteBayesGame& game);

Json to_json(const BehaviorStrategy& s);
Json to_json(const StrategyProfile& p);
Json to_json(const StatisticsReport& r);
Json to_json(const EquilibriumCertificate& c);
Json to_json(const SingleOutcomeVerdict& v);
Json to_json(const MinimaxSolution& s);
Json to_json(const BneEnumeration& e);

struct DualInput {
  dual::DualSphereGame game;
  dual::GovernmentStrategy gov;
};

DualInput dual_from_json(const Json& j);
Json to_json(const dual::SurplusVerdict& v);

Matrix matrix_from_json(const Json& j, const std::string& what);
Json to_json(const Matrix& m);

}  // namespace expost::io
