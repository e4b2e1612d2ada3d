#include "expost/strategy.hpp"

#include <cmath>
#include <sstream>

#include "expost/statistics.hpp"

namespace expost {

BehaviorStrategy BehaviorStrategy::from_pure(const PureStrategy& pure, int nActions) {
  BehaviorStrategy s;
  s.player = pure.player;
  s.dist = Matrix::Zero(static_cast<Eigen::Index>(pure.actionOf.size()), nActions);
  for (std::size_t t = 0; t < pure.actionOf.size(); ++t) {
    int x = pure.actionOf[t];
    if (x < 0 || x >= nActions)
      throw Error(ErrorCode::InvalidStrategy, "pure action index out of range");
    s.dist(static_cast<Eigen::Index>(t), x) = 1.0;
  }
  return s;
}

BehaviorStrategy BehaviorStrategy::constant(Player player, int nTypes, const Vector& mix) {
  BehaviorStrategy s;
  s.player = player;
  s.dist = mix.transpose().replicate(nTypes, 1);
  return s;
}

bool BehaviorStrategy::is_pure() const {
  for (Eigen::Index t = 0; t < dist.rows(); ++t) {
    int ones = 0;
    for (Eigen::Index x = 0; x < dist.cols(); ++x) {
      if (dist(t, x) == 1.0) ++ones;
      else if (dist(t, x) != 0.0) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

StrategyProfile StrategyProfile::pure(const FiniteBayesGame& game, const PureStrategy& a,
                                      const PureStrategy& b) {
  return {BehaviorStrategy::from_pure(a, game.nActsA), BehaviorStrategy::from_pure(b, game.nActsB)};
}

void validate_strategy(const FiniteBayesGame& game, const BehaviorStrategy& s) {
  if (s.types() != game.types(s.player) || s.actions() != game.actions(s.player)) {
    std::ostringstream os;
    os << "strategy for " << name(s.player) << " is " << s.types() << "x" << s.actions()
       << ", expected " << game.types(s.player) << "x" << game.actions(s.player);
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  for (Eigen::Index t = 0; t < s.dist.rows(); ++t) {
    for (Eigen::Index x = 0; x < s.dist.cols(); ++x) {
      if (!std::isfinite(s.dist(t, x)) || s.dist(t, x) < 0.0)
        throw Error(ErrorCode::InvalidStrategy, "negative or non-finite action probability");
    }
    if (std::abs(s.dist.row(t).sum() - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "row " << t << " of " << name(s.player) << "'s strategy does not sum to 1";
      throw Error(ErrorCode::InvalidStrategy, os.str());
    }
  }
}

void validate_profile(const FiniteBayesGame& game, const StrategyProfile& profile) {
  if (profile.stratA.player != Player::A || profile.stratB.player != Player::B)
    throw Error(ErrorCode::InvalidStrategy, "profile must hold A's then B's strategy");
  validate_strategy(game, profile.stratA);
  validate_strategy(game, profile.stratB);
}

bool check_identifiable(const BehaviorStrategy& strategy, double rankTol) {
  if (strategy.is_pure()) return true;
  std::vector<Eigen::Index> onPath;
  for (Eigen::Index x = 0; x < strategy.dist.cols(); ++x)
    if (strategy.dist.col(x).sum() > kOnPathThreshold) onPath.push_back(x);
  Matrix sub(strategy.dist.rows(), static_cast<Eigen::Index>(onPath.size()));
  for (std::size_t k = 0; k < onPath.size(); ++k)
    sub.col(static_cast<Eigen::Index>(k)) = strategy.dist.col(onPath[k]);
  return numerical_rank(sub, rankTol) == static_cast<int>(onPath.size());
}

}  // namespace expost
