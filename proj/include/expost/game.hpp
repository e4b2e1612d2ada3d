#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "expost/error.hpp"

namespace expost {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Player { A, B };

constexpr Player other(Player p) { return p == Player::A ? Player::B : Player::A; }
constexpr const char* name(Player p) { return p == Player::A ? "A" : "B"; }

/// Tolerance on the total mass of the joint type distribution.
inline constexpr double kJointSumTolerance = 1e-12;
/// Probabilities at or below this are treated as off path.
inline constexpr double kOnPathThreshold = 1e-12;
inline constexpr double kDefaultRankTolerance = 1e-9;

/// Two-player constant-sum Bayesian game with finite types and actions.
///
/// Payoffs depend on the action pair only. Player B's payoff is
/// `sumConst - payoffA(xA, xB)`, so the constant-sum property holds by
/// construction.
struct FiniteBayesGame {
  int nTypesA = 0;
  int nTypesB = 0;
  Matrix joint;  // joint(sA, sB)
  int nActsA = 0;
  int nActsB = 0;
  Matrix payoffA;  // payoffA(xA, xB)
  double sumConst = 0.0;

  int types(Player p) const { return p == Player::A ? nTypesA : nTypesB; }
  int actions(Player p) const { return p == Player::A ? nActsA : nActsB; }

  double payoff(Player p, int xA, int xB) const {
    double u = payoffA(xA, xB);
    return p == Player::A ? u : sumConst - u;
  }

  // max over action pairs of |u_A| and |u_B|.
  double payoff_bound() const;
};

struct ValidationResult {
  std::optional<ErrorCode> error;
  std::string message;

  bool ok() const { return !error.has_value(); }
  explicit operator bool() const { return ok(); }
};

ValidationResult validate_game(const FiniteBayesGame& game);

// Throws Error with the first violated invariant.
void require_valid(const FiniteBayesGame& game);

Vector marginal(const FiniteBayesGame& game, Player p);

/// Rows indexed by `p`'s type, columns by the opponent's type; row s holds
/// F(. | s).
Matrix conditional_matrix(const FiniteBayesGame& game, Player p);

}  // namespace expost
