#pragma once

#include <vector>

#include "expost/game.hpp"

namespace expost {

struct PureStrategy {
  Player player = Player::A;
  std::vector<int> actionOf;  // one action per type
};

/// Type-by-action mixing matrix. Row s is the action distribution of type s.
struct BehaviorStrategy {
  Player player = Player::A;
  Matrix dist;

  static BehaviorStrategy from_pure(const PureStrategy& pure, int nActions);
  static BehaviorStrategy constant(Player player, int nTypes, const Vector& mix);

  int types() const { return static_cast<int>(dist.rows()); }
  int actions() const { return static_cast<int>(dist.cols()); }
  bool is_pure() const;
};

struct StrategyProfile {
  BehaviorStrategy stratA;
  BehaviorStrategy stratB;

  const BehaviorStrategy& of(Player p) const { return p == Player::A ? stratA : stratB; }

  static StrategyProfile pure(const FiniteBayesGame& game, const PureStrategy& a,
                              const PureStrategy& b);
};

// Throws InvalidStrategy or DimensionMismatch.
void validate_strategy(const FiniteBayesGame& game, const BehaviorStrategy& s);
void validate_profile(const FiniteBayesGame& game, const StrategyProfile& profile);

/// Full column rank of the mixing matrix restricted to actions that some
/// type plays. Pure strategies always pass.
bool check_identifiable(const BehaviorStrategy& strategy,
                        double rankTol = kDefaultRankTolerance);

}  // namespace expost
