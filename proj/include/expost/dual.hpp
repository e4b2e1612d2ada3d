#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expost/equilibrium.hpp"

namespace expost::dual {

using Labels = std::vector<std::vector<std::string>>;

/// Two firms split a market m(xA, xB) and jointly shape a statistic that a
/// government observes before choosing an action worth v(a) to firm A.
struct DualSphereGame {
  int firmActsA = 0;
  int firmActsB = 0;
  Matrix market;        // m(xA, xB), share of firm A
  Labels statisticOf;   // [xA][xB]
  std::vector<std::string> govActions;
  std::map<std::string, double> valuation;
  Matrix typeDist;      // joint over firm types
  Labels stateOf;       // [sA][sB]; empty when states are not modeled
};

struct GovernmentStrategy {
  std::map<std::string, std::map<std::string, double>> mixing;  // statistic -> action -> prob
};

// Throws DimensionMismatch, InvalidInput or InvalidStrategy.
void validate(const DualSphereGame& dsg, const GovernmentStrategy& gov);

/// Expected v under the government's mixing at statistic `label`.
double government_value(const DualSphereGame& dsg, const GovernmentStrategy& gov,
                        const std::string& label);

/// u_A = m + v_alpha(tau), constant sum 0.
FiniteBayesGame induce_firm_game(const DualSphereGame& dsg, const GovernmentStrategy& gov);

struct SurplusPoint {
  int xA = 0;
  int xB = 0;
  double surplus = 0.0;  // m + v_alpha
};

struct SurplusVerdict {
  bool holds = false;
  double constant = 0.0;  // on-path surplus when constant
  double spread = 0.0;    // max minus min on-path surplus
  std::optional<SurplusPoint> lowest;   // witnesses when the verdict fails
  std::optional<SurplusPoint> highest;
};

/// Throws NotAnEquilibrium unless the profile is a BNE of the induced game.
SurplusVerdict verify_surplus_constancy(const DualSphereGame& dsg, const GovernmentStrategy& gov,
                                        const StrategyProfile& profile,
                                        double tol = kDefaultTolerance);

/// Posterior over state labels given the statistic. Throws
/// UnreachableStatistic or InvalidInput when states are not modeled.
std::map<std::string, double> posterior_from_statistic(const DualSphereGame& dsg,
                                                       const StrategyProfile& profile,
                                                       const std::string& label);

}  // namespace expost::dual
