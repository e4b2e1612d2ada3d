#include "expost/equilibrium.hpp"

#include <cmath>
#include <iterator>
#include <sstream>

namespace expost {

Matrix interim_payoffs(const FiniteBayesGame& game, const BehaviorStrategy& opponent, Player p) {
  Matrix q = conditional_matrix(game, p) * opponent.dist;  // p's type x opponent action
  if (p == Player::A) return q * game.payoffA.transpose();
  Matrix uB = (-game.payoffA).array() + game.sumConst;
  return q * uB;
}

double interim_payoff(const FiniteBayesGame& game, const StrategyProfile& profile, Player p,
                      int type, int action) {
  return interim_payoffs(game, profile.of(other(p)), p)(type, action);
}

double ex_ante_payoff(const FiniteBayesGame& game, const StrategyProfile& profile, Player p) {
  Matrix pairs = action_pair_distribution(game, profile);
  double uA = (pairs.array() * game.payoffA.array()).sum();
  return p == Player::A ? uA : game.sumConst * pairs.sum() - uA;
}

Matrix action_pair_distribution(const FiniteBayesGame& game, const StrategyProfile& profile) {
  return profile.stratA.dist.transpose() * game.joint * profile.stratB.dist;
}

namespace {

bool on_path(const Vector& marg, const BehaviorStrategy& s, int type, int action) {
  return marg(type) * s.dist(type, action) > kOnPathThreshold;
}

// Actions played with positive ex-ante probability by some type.
std::vector<int> on_path_actions(const Vector& marg, const BehaviorStrategy& s) {
  std::vector<int> out;
  Vector mass = s.dist.transpose() * marg;
  for (Eigen::Index x = 0; x < mass.size(); ++x)
    if (mass(x) > kOnPathThreshold) out.push_back(static_cast<int>(x));
  return out;
}

void require_bne(const FiniteBayesGame& game, const StrategyProfile& profile, double tol) {
  BneVerdict v = verify_bne(game, profile, tol);
  if (!v.holds) {
    std::ostringstream os;
    os << "profile is not a BNE (worst regret " << v.worstRegret << ")";
    throw Error(ErrorCode::NotAnEquilibrium, os.str());
  }
}

}  // namespace

BneVerdict verify_bne(const FiniteBayesGame& game, const StrategyProfile& profile, double tol) {
  validate_profile(game, profile);
  BneVerdict out;
  RegretWitness worst;
  for (Player p : {Player::A, Player::B}) {
    Matrix u = interim_payoffs(game, profile.of(other(p)), p);
    Vector marg = marginal(game, p);
    const BehaviorStrategy& s = profile.of(p);
    for (int t = 0; t < s.types(); ++t) {
      Eigen::Index best;
      double top = u.row(t).maxCoeff(&best);
      for (int x = 0; x < s.actions(); ++x) {
        if (!on_path(marg, s, t, x)) continue;
        double regret = top - u(t, x);
        if (regret > out.worstRegret) {
          out.worstRegret = regret;
          worst = {p, t, x, static_cast<int>(best), regret};
        }
      }
    }
  }
  out.holds = out.worstRegret <= tol;
  if (!out.holds) out.witness = worst;
  return out;
}

ExPostVerdict verify_expost(const FiniteBayesGame& game, const StrategyProfile& profile,
                            double tol) {
  require_bne(game, profile, tol);
  ExPostVerdict out;
  out.valueA = ex_ante_payoff(game, profile, Player::A);
  Matrix pairs = action_pair_distribution(game, profile);
  int wA = -1, wB = -1;
  bool wShort = false;
  for (int xA = 0; xA < game.nActsA; ++xA) {
    for (int xB = 0; xB < game.nActsB; ++xB) {
      if (pairs(xA, xB) <= kOnPathThreshold) continue;
      double dev = std::abs(game.payoffA(xA, xB) - out.valueA);
      bool shortfall = game.payoffA(xA, xB) < out.valueA;
      // among equally bad pairs prefer one where A falls short of the value
      if (dev > out.worstDeviation || (wA >= 0 && dev == out.worstDeviation && shortfall && !wShort)) {
        out.worstDeviation = dev;
        wA = xA;
        wB = xB;
        wShort = shortfall;
      }
    }
  }
  out.holds = out.worstDeviation <= tol;
  if (!out.holds) {
    ExPostWitness w{0, 0, wA, wB, game.payoffA(wA, wB), 0.0};
    for (int sA = 0; sA < game.nTypesA; ++sA) {
      for (int sB = 0; sB < game.nTypesB; ++sB) {
        double pr = game.joint(sA, sB) * profile.stratA.dist(sA, wA) * profile.stratB.dist(sB, wB);
        if (pr > w.probability) {
          w.typeA = sA;
          w.typeB = sB;
          w.probability = pr;
        }
      }
    }
    out.witness = w;
  }
  return out;
}

ConstancyVerdict verify_interim_constancy(const FiniteBayesGame& game,
                                          const StrategyProfile& profile, double tol) {
  require_bne(game, profile, tol);
  ConstancyVerdict out;
  out.valueA = ex_ante_payoff(game, profile, Player::A);
  out.valueB = game.sumConst - out.valueA;
  for (Player p : {Player::A, Player::B}) {
    double value = p == Player::A ? out.valueA : out.valueB;
    Matrix u = interim_payoffs(game, profile.of(other(p)), p);
    for (int x : on_path_actions(marginal(game, p), profile.of(p)))
      for (Eigen::Index t = 0; t < u.rows(); ++t)
        out.worstDeviation = std::max(out.worstDeviation, std::abs(u(t, x) - value));
  }
  out.holds = out.worstDeviation <= tol;
  return out;
}

void validate_outcome_map(const FiniteBayesGame& game, const OutcomeMap& outcomes, double tol) {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::InconsistentOutcomeMap, msg); };
  if (static_cast<int>(outcomes.outcomeOf.size()) != game.nActsA) bad("outcome rows != actions of A");
  for (int xA = 0; xA < game.nActsA; ++xA) {
    if (static_cast<int>(outcomes.outcomeOf[xA].size()) != game.nActsB)
      bad("outcome columns != actions of B");
    for (int xB = 0; xB < game.nActsB; ++xB) {
      const std::string& label = outcomes.outcomeOf[xA][xB];
      auto ia = outcomes.utilityA.find(label);
      auto ib = outcomes.utilityB.find(label);
      if (ia == outcomes.utilityA.end() || ib == outcomes.utilityB.end())
        bad("outcome '" + label + "' has no utility");
      if (std::abs(ia->second - game.payoff(Player::A, xA, xB)) > tol ||
          std::abs(ib->second - game.payoff(Player::B, xA, xB)) > tol)
        bad("utilities of outcome '" + label + "' do not reproduce the payoffs");
    }
  }
  for (const auto* util : {&outcomes.utilityA, &outcomes.utilityB}) {
    for (auto i = util->begin(); i != util->end(); ++i)
      for (auto j = std::next(i); j != util->end(); ++j)
        if (std::abs(i->second - j->second) <= tol)
          bad("outcomes '" + i->first + "' and '" + j->first + "' share a utility");
  }
}

SingleOutcomeVerdict verify_single_outcome(const FiniteBayesGame& game,
                                           const OutcomeMap& outcomes,
                                           const StrategyProfile& profile, double tol) {
  validate_outcome_map(game, outcomes, tol);
  require_bne(game, profile, tol);
  SingleOutcomeVerdict out;
  Matrix pairs = action_pair_distribution(game, profile);
  for (int xA = 0; xA < game.nActsA; ++xA)
    for (int xB = 0; xB < game.nActsB; ++xB)
      if (pairs(xA, xB) > kOnPathThreshold)
        out.outcomeProbabilities[outcomes.outcomeOf[xA][xB]] += pairs(xA, xB);
  for (const auto& [label, pr] : out.outcomeProbabilities) {
    if (pr > out.probability) {
      out.label = label;
      out.probability = pr;
    }
  }
  out.holds = out.probability >= 1.0 - tol;
  return out;
}

EquilibriumCertificate certify(const FiniteBayesGame& game, const StrategyProfile& profile,
                               double tol, double rankTol) {
  EquilibriumCertificate cert;
  cert.tolerance = tol;
  cert.bne = verify_bne(game, profile, tol);
  cert.valueA = ex_ante_payoff(game, profile, Player::A);
  cert.valueB = game.sumConst - cert.valueA;
  for (Player p : {Player::A, Player::B}) {
    Matrix u = interim_payoffs(game, profile.of(other(p)), p);
    Vector marg = marginal(game, p);
    const BehaviorStrategy& s = profile.of(p);
    auto& dst = p == Player::A ? cert.interimA : cert.interimB;
    dst.resize(s.types());
    for (int t = 0; t < s.types(); ++t)
      for (int x = 0; x < s.actions(); ++x)
        if (on_path(marg, s, t, x)) dst[t][x] = u(t, x);
  }
  if (cert.bne.holds) {
    cert.expost = verify_expost(game, profile, tol);
    cert.interimConstancy = verify_interim_constancy(game, profile, tol).holds;
  } else {
    cert.expost.valueA = cert.valueA;
  }
  cert.identifiableA = check_identifiable(profile.stratA, rankTol);
  cert.identifiableB = check_identifiable(profile.stratB, rankTol);
  return cert;
}

}  // namespace expost
