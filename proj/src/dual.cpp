#include "expost/dual.hpp"

#include <cmath>
#include <set>

namespace expost::dual {

namespace {

bool shape_ok(const Labels& l, Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<Eigen::Index>(l.size()) != rows) return false;
  for (const auto& r : l)
    if (static_cast<Eigen::Index>(r.size()) != cols) return false;
  return true;
}

}  // namespace

void validate(const DualSphereGame& d, const GovernmentStrategy& gov) {
  if (d.firmActsA <= 0 || d.firmActsB <= 0 || d.market.rows() != d.firmActsA ||
      d.market.cols() != d.firmActsB || !shape_ok(d.statisticOf, d.firmActsA, d.firmActsB))
    throw Error(ErrorCode::DimensionMismatch, "market and statistic must be firm_actions A x B");
  for (Eigen::Index i = 0; i < d.market.size(); ++i) {
    double v = d.market.data()[i];
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::InvalidInput, "market shares must lie in [0, 1]");
  }
  if (!d.stateOf.empty() && !shape_ok(d.stateOf, d.typeDist.rows(), d.typeDist.cols()))
    throw Error(ErrorCode::DimensionMismatch, "state_of must match type_dist");
  for (const auto& a : d.govActions) {
    auto it = d.valuation.find(a);
    if (it == d.valuation.end() || !std::isfinite(it->second))
      throw Error(ErrorCode::InvalidInput, "government action '" + a + "' has no finite valuation");
  }
  std::set<std::string> used;
  for (const auto& row : d.statisticOf) used.insert(row.begin(), row.end());
  for (const auto& label : used) {
    auto it = gov.mixing.find(label);
    if (it == gov.mixing.end())
      throw Error(ErrorCode::InvalidStrategy, "no government mixing for statistic '" + label + "'");
    double total = 0.0;
    for (const auto& [action, p] : it->second) {
      if (!d.valuation.count(action))
        throw Error(ErrorCode::InvalidStrategy, "unknown government action '" + action + "'");
      if (!(p >= 0.0)) throw Error(ErrorCode::InvalidStrategy, "negative government probability");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw Error(ErrorCode::InvalidStrategy, "government mixing at '" + label + "' does not sum to 1");
  }
}

double government_value(const DualSphereGame& d, const GovernmentStrategy& gov,
                        const std::string& label) {
  double v = 0.0;
  for (const auto& [action, p] : gov.mixing.at(label)) v += p * d.valuation.at(action);
  return v;
}

FiniteBayesGame induce_firm_game(const DualSphereGame& d, const GovernmentStrategy& gov) {
  validate(d, gov);
  FiniteBayesGame g;
  g.nTypesA = static_cast<int>(d.typeDist.rows());
  g.nTypesB = static_cast<int>(d.typeDist.cols());
  g.joint = d.typeDist;
  g.nActsA = d.firmActsA;
  g.nActsB = d.firmActsB;
  g.payoffA = Matrix(d.firmActsA, d.firmActsB);
  for (int xA = 0; xA < d.firmActsA; ++xA)
    for (int xB = 0; xB < d.firmActsB; ++xB)
      g.payoffA(xA, xB) = d.market(xA, xB) + government_value(d, gov, d.statisticOf[xA][xB]);
  g.sumConst = 0.0;
  require_valid(g);
  return g;
}

SurplusVerdict verify_surplus_constancy(const DualSphereGame& d, const GovernmentStrategy& gov,
                                        const StrategyProfile& profile, double tol) {
  FiniteBayesGame g = induce_firm_game(d, gov);
  if (!verify_bne(g, profile, tol).holds)
    throw Error(ErrorCode::NotAnEquilibrium, "firm profile is not a BNE of the induced game");
  Matrix pairs = action_pair_distribution(g, profile);
  SurplusPoint lo, hi;
  bool any = false;
  for (int xA = 0; xA < g.nActsA; ++xA) {
    for (int xB = 0; xB < g.nActsB; ++xB) {
      if (pairs(xA, xB) <= kOnPathThreshold) continue;
      SurplusPoint p{xA, xB, g.payoffA(xA, xB)};
      if (!any || p.surplus < lo.surplus) lo = p;
      if (!any || p.surplus > hi.surplus) hi = p;
      any = true;
    }
  }
  SurplusVerdict out;
  out.spread = hi.surplus - lo.surplus;
  out.holds = out.spread <= tol;
  if (out.holds) {
    out.constant = ex_ante_payoff(g, profile, Player::A);
  } else {
    out.lowest = lo;
    out.highest = hi;
  }
  return out;
}

std::map<std::string, double> posterior_from_statistic(const DualSphereGame& d,
                                                       const StrategyProfile& profile,
                                                       const std::string& label) {
  if (d.stateOf.empty()) throw Error(ErrorCode::InvalidInput, "state_of is not given");
  std::map<std::string, double> mass;
  double total = 0.0;
  for (Eigen::Index sA = 0; sA < d.typeDist.rows(); ++sA) {
    for (Eigen::Index sB = 0; sB < d.typeDist.cols(); ++sB) {
      double pr = d.typeDist(sA, sB);
      if (pr == 0.0) continue;
      for (int xA = 0; xA < d.firmActsA; ++xA) {
        for (int xB = 0; xB < d.firmActsB; ++xB) {
          if (d.statisticOf[xA][xB] != label) continue;
          double q = pr * profile.stratA.dist(sA, xA) * profile.stratB.dist(sB, xB);
          mass[d.stateOf[sA][sB]] += q;
          total += q;
        }
      }
    }
  }
  if (total <= kOnPathThreshold)
    throw Error(ErrorCode::UnreachableStatistic, "statistic '" + label + "' is off path");
  for (auto& [state, q] : mass) q /= total;
  return mass;
}

}  // namespace expost::dual
