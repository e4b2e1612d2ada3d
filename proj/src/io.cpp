#include "expost/io.hpp"

#include <fstream>

namespace expost::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int count_of(const Json& j, const char* key, const char* player) {
  const Json& f = field(field(j, key), player);
  if (!f.is_number_integer()) bad(std::string(key) + "." + player + " must be an integer");
  return f.get<int>();
}

std::vector<std::vector<std::string>> labels_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array()) bad(what + " must be an array of arrays");
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    out.push_back(std::move(r));
  }
  return out;
}

Json verdict(const RankVerdict& v) { return {{"holds", v.holds}, {"rank", v.rank}}; }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad(what + " must be a non-empty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorCode::DimensionMismatch, what + " has ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) bad(what + " entries must be numbers");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

FiniteBayesGame game_from_json(const Json& j) {
  FiniteBayesGame g;
  g.nTypesA = count_of(j, "types", "A");
  g.nTypesB = count_of(j, "types", "B");
  g.nActsA = count_of(j, "actions", "A");
  g.nActsB = count_of(j, "actions", "B");
  g.joint = matrix_from_json(field(j, "joint"), "joint");
  g.payoffA = matrix_from_json(field(j, "payoff_A"), "payoff_A");
  const Json& c = field(j, "constant_sum");
  if (!c.is_number()) bad("constant_sum must be a number");
  g.sumConst = c.get<double>();
  require_valid(g);
  return g;
}

Json to_json(const FiniteBayesGame& g) {
  return {{"types", {{"A", g.nTypesA}, {"B", g.nTypesB}}},
          {"joint", to_json(g.joint)},
          {"actions", {{"A", g.nActsA}, {"B", g.nActsB}}},
          {"payoff_A", to_json(g.payoffA)},
          {"constant_sum", g.sumConst}};
}

std::optional<OutcomeMap> outcomes_from_json(const Json& j) {
  if (!j.contains("outcomes")) return std::nullopt;
  const Json& o = j.at("outcomes");
  OutcomeMap m;
  m.outcomeOf = labels_from_json(field(o, "labels"), "outcomes.labels");
  for (auto [key, dst] : {std::pair{"utility_A", &m.utilityA}, std::pair{"utility_B", &m.utilityB}}) {
    const Json& u = field(o, key);
    if (!u.is_object()) bad(std::string("outcomes.") + key + " must be an object");
    for (const auto& [label, v] : u.items()) {
      if (!v.is_number()) bad("outcome utilities must be numbers");
      (*dst)[label] = v.get<double>();
    }
  }
  return m;
}

StrategyProfile profile_from_json(const Json& j, const FiniteBayesGame& game) {
  StrategyProfile p;
  for (Player pl : {Player::A, Player::B}) {
    const Json& s = field(j, name(pl));
    BehaviorStrategy b;
    if (s.contains("pure")) {
      PureStrategy ps{pl, {}};
      for (const auto& v : s.at("pure")) {
        if (!v.is_number_integer()) bad("pure actions must be integers");
        ps.actionOf.push_back(v.get<int>());
      }
      if (static_cast<int>(ps.actionOf.size()) != game.types(pl))
        throw Error(ErrorCode::DimensionMismatch,
                    std::string("pure strategy of ") + name(pl) + " needs one action per type");
      b = BehaviorStrategy::from_pure(ps, game.actions(pl));
    } else if (s.contains("behavior")) {
      b.player = pl;
      b.dist = matrix_from_json(s.at("behavior"), std::string("behavior of ") + name(pl));
    } else {
      bad(std::string("strategy of ") + name(pl) + " needs 'pure' or 'behavior'");
    }
    (pl == Player::A ? p.stratA : p.stratB) = std::move(b);
  }
  validate_profile(game, p);
  return p;
}

Json to_json(const BehaviorStrategy& s) {
  Json out;
  if (s.is_pure()) {
    Json acts = Json::array();
    for (Eigen::Index t = 0; t < s.dist.rows(); ++t) {
      Eigen::Index x;
      s.dist.row(t).maxCoeff(&x);
      acts.push_back(x);
    }
    out["pure"] = acts;
  }
  out["behavior"] = to_json(s.dist);
  return out;
}

Json to_json(const StrategyProfile& p) { return {{"A", to_json(p.stratA)}, {"B", to_json(p.stratB)}}; }

Json to_json(const StatisticsReport& r) {
  return {{"rank_joint", r.rankJoint},
          {"completeness", {{"A", verdict(r.completenessA)}, {"B", verdict(r.completenessB)}}},
          {"sli", {{"A", verdict(r.sliA)}, {"B", verdict(r.sliB)}}},
          {"convex_independence", {{"A", r.convexIndepA}, {"B", r.convexIndepB}}},
          {"rank_tolerance", r.rankTolerance}};
}

Json to_json(const EquilibriumCertificate& c) {
  Json out;
  out["value_A"] = c.valueA;
  out["value_B"] = c.valueB;
  Json bne = {{"holds", c.bne.holds}, {"worst_regret", c.bne.worstRegret}};
  if (c.bne.witness) {
    const auto& w = *c.bne.witness;
    bne["witness"] = {{"player", name(w.player)}, {"type", w.type}, {"action", w.action},
                      {"best_action", w.bestAction}, {"regret", w.regret}};
  }
  out["bne"] = bne;
  Json ep = {{"holds", c.expost.holds}, {"worst_deviation", c.expost.worstDeviation}};
  if (!c.bne.holds) ep["holds"] = nullptr;
  if (c.expost.witness) {
    const auto& w = *c.expost.witness;
    ep["witness"] = {{"type_A", w.typeA}, {"type_B", w.typeB}, {"action_A", w.actionA},
                     {"action_B", w.actionB}, {"payoff_A", w.payoffA}, {"probability", w.probability}};
  }
  out["ex_post"] = ep;
  out["interim_constancy"] = c.bne.holds ? Json(c.interimConstancy) : Json(nullptr);
  out["identifiable"] = {{"A", c.identifiableA}, {"B", c.identifiableB}};
  Json interim;
  for (auto [key, src] : {std::pair{"A", &c.interimA}, std::pair{"B", &c.interimB}}) {
    Json types = Json::array();
    for (const auto& byAction : *src) {
      Json t = Json::object();
      for (const auto& [x, u] : byAction) t[std::to_string(x)] = u;
      types.push_back(t);
    }
    interim[key] = types;
  }
  out["interim_payoffs"] = interim;
  out["tolerance"] = c.tolerance;
  return out;
}

Json to_json(const SingleOutcomeVerdict& v) {
  Json probs = Json::object();
  for (const auto& [label, p] : v.outcomeProbabilities) probs[label] = p;
  return {{"holds", v.holds}, {"label", v.label}, {"probability", v.probability},
          {"outcome_probabilities", probs}};
}

Json to_json(const MinimaxSolution& s) {
  Json mixA = Json::array(), mixB = Json::array();
  for (Eigen::Index i = 0; i < s.mixedA.size(); ++i)
    if (s.mixedA(i) > 0.0) mixA.push_back({{"index", i}, {"weight", s.mixedA(i)}});
  for (Eigen::Index i = 0; i < s.mixedB.size(); ++i)
    if (s.mixedB(i) > 0.0) mixB.push_back({{"index", i}, {"weight", s.mixedB(i)}});
  return {{"value", s.value},
          {"maxmin", s.maxmin},
          {"minmax", s.minmax},
          {"mixed", {{"A", mixA}, {"B", mixB}}},
          {"behavioral", {{"A", to_json(s.behavioralA.dist)}, {"B", to_json(s.behavioralB.dist)}}}};
}

Json to_json(const BneEnumeration& e) {
  Json list = Json::array();
  for (const auto& eq : e.equilibria) {
    list.push_back({{"A", eq.a.actionOf},
                    {"B", eq.b.actionOf},
                    {"value_A", eq.certificate.valueA},
                    {"ex_post", eq.certificate.expost.holds},
                    {"interim_constancy", eq.certificate.interimConstancy},
                    {"worst_deviation", eq.certificate.expost.worstDeviation}});
  }
  return {{"count", e.equilibria.size()}, {"candidates_checked", e.candidatesChecked},
          {"equilibria", list}};
}

DualInput dual_from_json(const Json& j) {
  DualInput in;
  auto& d = in.game;
  d.firmActsA = count_of(j, "firm_actions", "A");
  d.firmActsB = count_of(j, "firm_actions", "B");
  d.market = matrix_from_json(field(j, "market"), "market");
  d.statisticOf = labels_from_json(field(j, "statistic"), "statistic");
  for (const auto& a : field(j, "gov_actions"))
    d.govActions.push_back(a.is_string() ? a.get<std::string>() : a.dump());
  for (const auto& [label, v] : field(j, "valuation").items()) {
    if (!v.is_number()) bad("valuation entries must be numbers");
    d.valuation[label] = v.get<double>();
  }
  for (const auto& [stat, row] : field(j, "gov_strategy").items())
    for (const auto& [action, p] : row.items()) {
      if (!p.is_number()) bad("gov_strategy entries must be numbers");
      in.gov.mixing[stat][action] = p.get<double>();
    }
  d.typeDist = matrix_from_json(field(j, "type_dist"), "type_dist");
  if (j.contains("state_of")) d.stateOf = labels_from_json(j.at("state_of"), "state_of");
  dual::validate(d, in.gov);
  return in;
}

Json to_json(const dual::SurplusVerdict& v) {
  Json out = {{"holds", v.holds}, {"spread", v.spread}};
  if (v.holds) out["constant"] = v.constant;
  auto point = [](const dual::SurplusPoint& p) {
    return Json{{"action_A", p.xA}, {"action_B", p.xB}, {"surplus", p.surplus}};
  };
  if (v.lowest) out["lowest"] = point(*v.lowest);
  if (v.highest) out["highest"] = point(*v.highest);
  return out;
}

}  // namespace expost::io
