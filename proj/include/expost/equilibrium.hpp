#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expost/strategy.hpp"

namespace expost {

inline constexpr double kDefaultTolerance = 1e-9;

/// Interim payoffs of every (type, action) for `p` against the opponent's
/// strategy: rows are p's types, columns p's actions.
Matrix interim_payoffs(const FiniteBayesGame& game, const BehaviorStrategy& opponent, Player p);

double interim_payoff(const FiniteBayesGame& game, const StrategyProfile& profile, Player p,
                      int type, int action);

/// Ex-ante expected payoff of `p` under the profile.
double ex_ante_payoff(const FiniteBayesGame& game, const StrategyProfile& profile, Player p);

/// Probability of each action pair on the path of play.
Matrix action_pair_distribution(const FiniteBayesGame& game, const StrategyProfile& profile);

struct RegretWitness {
  Player player = Player::A;
  int type = 0;
  int action = 0;
  int bestAction = 0;
  double regret = 0.0;
};

struct BneVerdict {
  bool holds = false;
  double worstRegret = 0.0;
  std::optional<RegretWitness> witness;  // set when the verdict fails
};

BneVerdict verify_bne(const FiniteBayesGame& game, const StrategyProfile& profile,
                      double tol = kDefaultTolerance);

struct ExPostWitness {
  int typeA = 0;
  int typeB = 0;
  int actionA = 0;
  int actionB = 0;
  double payoffA = 0.0;
  double probability = 0.0;
};

struct ExPostVerdict {
  bool holds = false;
  double valueA = 0.0;
  double worstDeviation = 0.0;
  std::optional<ExPostWitness> witness;
};

// Throws NotAnEquilibrium if the profile fails verify_bne at tol.
ExPostVerdict verify_expost(const FiniteBayesGame& game, const StrategyProfile& profile,
                            double tol = kDefaultTolerance);

struct ConstancyVerdict {
  bool holds = false;
  double valueA = 0.0;
  double valueB = 0.0;
  double worstDeviation = 0.0;
};

/// Every type's interim payoff at every action some type plays equals the
/// player's equilibrium value. Throws NotAnEquilibrium.
ConstancyVerdict verify_interim_constancy(const FiniteBayesGame& game,
                                          const StrategyProfile& profile,
                                          double tol = kDefaultTolerance);

struct OutcomeMap {
  std::vector<std::vector<std::string>> outcomeOf;  // [xA][xB]
  std::map<std::string, double> utilityA;
  std::map<std::string, double> utilityB;
};

// Throws InconsistentOutcomeMap unless utilities are injective and reproduce
// the game's payoffs within tol.
void validate_outcome_map(const FiniteBayesGame& game, const OutcomeMap& outcomes,
                          double tol = kDefaultTolerance);

struct SingleOutcomeVerdict {
  bool holds = false;
  std::string label;  // most likely on-path outcome
  double probability = 0.0;
  std::map<std::string, double> outcomeProbabilities;
};

SingleOutcomeVerdict verify_single_outcome(const FiniteBayesGame& game,
                                           const OutcomeMap& outcomes,
                                           const StrategyProfile& profile,
                                           double tol = kDefaultTolerance);

struct EquilibriumCertificate {
  double valueA = 0.0;
  double valueB = 0.0;
  // interimPayoffs[player][type] maps each on-path action of that type to its
  // interim payoff.
  std::vector<std::map<int, double>> interimA;
  std::vector<std::map<int, double>> interimB;
  BneVerdict bne;
  ExPostVerdict expost;  // holds == false without witness when not a BNE
  bool interimConstancy = false;
  bool identifiableA = false;
  bool identifiableB = false;
  double tolerance = kDefaultTolerance;
};

EquilibriumCertificate certify(const FiniteBayesGame& game, const StrategyProfile& profile,
                               double tol = kDefaultTolerance,
                               double rankTol = kDefaultRankTolerance);

}  // namespace expost
