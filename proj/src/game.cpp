#include "expost/game.hpp"

#include <cmath>
#include <sstream>

namespace expost {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonStochasticJoint: return "NonStochasticJoint";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinitePayoff: return "NonFinitePayoff";
    case ErrorCode::InvalidStrategy: return "InvalidStrategy";
    case ErrorCode::NotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::InconsistentOutcomeMap: return "InconsistentOutcomeMap";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::AsymmetricUnsupported: return "AsymmetricUnsupported";
    case ErrorCode::AsymmetricBenevolentUnsupported: return "AsymmetricBenevolentUnsupported";
    case ErrorCode::NonInvertibleConjecture: return "NonInvertibleConjecture";
    case ErrorCode::EqualParams: return "EqualParams";
    case ErrorCode::UnreachableStatistic: return "UnreachableStatistic";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

double FiniteBayesGame::payoff_bound() const {
  double k = 0.0;
  for (Eigen::Index i = 0; i < payoffA.rows(); ++i)
    for (Eigen::Index j = 0; j < payoffA.cols(); ++j)
      k = std::max({k, std::abs(payoffA(i, j)), std::abs(sumConst - payoffA(i, j))});
  return k;
}

namespace {

ValidationResult fail(ErrorCode code, const std::string& msg) { return {code, msg}; }

}  // namespace

ValidationResult validate_game(const FiniteBayesGame& g) {
  if (g.nTypesA <= 0 || g.nTypesB <= 0 || g.nActsA <= 0 || g.nActsB <= 0)
    return fail(ErrorCode::DimensionMismatch, "type and action counts must be positive");
  if (g.joint.rows() != g.nTypesA || g.joint.cols() != g.nTypesB) {
    std::ostringstream os;
    os << "joint is " << g.joint.rows() << "x" << g.joint.cols() << ", expected " << g.nTypesA
       << "x" << g.nTypesB;
    return fail(ErrorCode::DimensionMismatch, os.str());
  }
  if (g.payoffA.rows() != g.nActsA || g.payoffA.cols() != g.nActsB) {
    std::ostringstream os;
    os << "payoff_A is " << g.payoffA.rows() << "x" << g.payoffA.cols() << ", expected "
       << g.nActsA << "x" << g.nActsB;
    return fail(ErrorCode::DimensionMismatch, os.str());
  }
  for (int a = 0; a < g.nTypesA; ++a) {
    for (int b = 0; b < g.nTypesB; ++b) {
      double p = g.joint(a, b);
      if (!std::isfinite(p) || p < 0.0) {
        std::ostringstream os;
        os << "joint[" << a << "][" << b << "] = " << p;
        return fail(ErrorCode::NegativeProbability, os.str());
      }
    }
  }
  double total = g.joint.sum();
  if (std::abs(total - 1.0) > kJointSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "joint sums to " << total;
    return fail(ErrorCode::NonStochasticJoint, os.str());
  }
  for (Player p : {Player::A, Player::B}) {
    Vector m = marginal(g, p);
    for (Eigen::Index s = 0; s < m.size(); ++s) {
      if (!(m(s) > 0.0)) {
        std::ostringstream os;
        os << "type " << s << " of player " << name(p) << " has zero marginal";
        return fail(ErrorCode::EmptySupport, os.str());
      }
    }
  }
  if (!g.payoffA.allFinite())
    return fail(ErrorCode::NonFinitePayoff, "payoff_A has a non-finite entry");
  if (!std::isfinite(g.sumConst))
    return fail(ErrorCode::NonFinitePayoff, "constant_sum is not finite");
  return {};
}

void require_valid(const FiniteBayesGame& game) {
  auto v = validate_game(game);
  if (!v) throw Error(*v.error, v.message);
}

Vector marginal(const FiniteBayesGame& game, Player p) {
  return p == Player::A ? Vector(game.joint.rowwise().sum()) : Vector(game.joint.colwise().sum().transpose());
}

Matrix conditional_matrix(const FiniteBayesGame& game, Player p) {
  Matrix oriented = p == Player::A ? game.joint : Matrix(game.joint.transpose());
  Vector m = oriented.rowwise().sum();
  for (Eigen::Index s = 0; s < oriented.rows(); ++s) oriented.row(s) /= m(s);
  return oriented;
}

}  // namespace expost
