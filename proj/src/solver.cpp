#include "expost/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "expost/lp.hpp"

namespace expost {

std::size_t pure_strategy_count(const FiniteBayesGame& game, Player p, std::size_t limit) {
  std::size_t count = 1;
  const auto acts = static_cast<std::size_t>(game.actions(p));
  for (int t = 0; t < game.types(p); ++t) {
    if (count > limit / acts) return 0;
    count *= acts;
  }
  return count <= limit ? count : 0;
}

PureStrategy decode_pure(const FiniteBayesGame& game, Player p, std::size_t index) {
  PureStrategy s{p, std::vector<int>(game.types(p))};
  const auto acts = static_cast<std::size_t>(game.actions(p));
  for (int t = game.types(p) - 1; t >= 0; --t) {
    s.actionOf[t] = static_cast<int>(index % acts);
    index /= acts;
  }
  return s;
}

std::size_t encode_pure(const FiniteBayesGame& game, const PureStrategy& s) {
  std::size_t index = 0;
  for (int x : s.actionOf) index = index * game.actions(s.player) + x;
  return index;
}

namespace {

std::pair<std::size_t, std::size_t> checked_counts(const FiniteBayesGame& game,
                                                   const SolverConfig& cfg) {
  std::size_t nA = pure_strategy_count(game, Player::A, cfg.cellCap);
  std::size_t nB = pure_strategy_count(game, Player::B, cfg.cellCap);
  if (nA == 0 || nB == 0 || nA > cfg.cellCap / nB) {
    std::ostringstream os;
    os << "induced normal form " << game.nActsA << "^" << game.nTypesA << " x " << game.nActsB
       << "^" << game.nTypesB << " exceeds the cap of " << cfg.cellCap << " cells";
    throw Error(ErrorCode::SizeCapExceeded, os.str());
  }
  return {nA, nB};
}

// Lowest action within a relative 1e-12 of the row maximum.
int argmax_low(const Eigen::Ref<const Vector>& u) {
  double top = u.maxCoeff();
  double slack = 1e-12 * (1.0 + std::abs(top));
  for (Eigen::Index x = 0; x < u.size(); ++x)
    if (u(x) >= top - slack) return static_cast<int>(x);
  return 0;
}

}  // namespace

InducedNormalForm induce_normal_form(const FiniteBayesGame& game, const SolverConfig& cfg) {
  require_valid(game);
  auto [nA, nB] = checked_counts(game, cfg);
  InducedNormalForm nf{nA, nB, Matrix(static_cast<Eigen::Index>(nA), static_cast<Eigen::Index>(nB))};
  std::vector<PureStrategy> stratB;
  stratB.reserve(nB);
  for (std::size_t j = 0; j < nB; ++j) stratB.push_back(decode_pure(game, Player::B, j));
  Matrix r(game.nTypesB, game.nActsB);
  for (std::size_t i = 0; i < nA; ++i) {
    PureStrategy a = decode_pure(game, Player::A, i);
    // r(sB, xB) = sum_sA joint(sA, sB) u_A(a(sA), xB)
    r.setZero();
    for (int sA = 0; sA < game.nTypesA; ++sA)
      r += game.joint.row(sA).transpose() * game.payoffA.row(a.actionOf[sA]);
    for (std::size_t j = 0; j < nB; ++j) {
      double v = 0.0;
      for (int sB = 0; sB < game.nTypesB; ++sB) v += r(sB, stratB[j].actionOf[sB]);
      nf.expectedPayoff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return nf;
}

BehaviorStrategy project_behavioral(const FiniteBayesGame& game, Player p, const Vector& mixed) {
  BehaviorStrategy s{p, Matrix::Zero(game.types(p), game.actions(p))};
  for (Eigen::Index k = 0; k < mixed.size(); ++k) {
    if (mixed(k) == 0.0) continue;
    PureStrategy pure = decode_pure(game, p, static_cast<std::size_t>(k));
    for (int t = 0; t < game.types(p); ++t) s.dist(t, pure.actionOf[t]) += mixed(k);
  }
  for (int t = 0; t < game.types(p); ++t) s.dist.row(t) /= s.dist.row(t).sum();
  return s;
}

MinimaxSolution solve_minimax_lp(const FiniteBayesGame& game, const SolverConfig& cfg) {
  InducedNormalForm nf = induce_normal_form(game, cfg);
  lp::ZeroSumSolution z = lp::solve_zero_sum(nf.expectedPayoff);
  MinimaxSolution sol;
  sol.maxmin = z.maxmin;
  sol.minmax = z.minmax;
  sol.value = z.value();
  sol.mixedA = z.rowStrategy;
  sol.mixedB = z.colStrategy;
  sol.behavioralA = project_behavioral(game, Player::A, sol.mixedA);
  sol.behavioralB = project_behavioral(game, Player::B, sol.mixedB);
  return sol;
}

double security_level(const FiniteBayesGame& game, const BehaviorStrategy& strategy) {
  validate_strategy(game, strategy);
  // The ex-ante payoff separates across opponent types, so the worst pure
  // reply is chosen type by type.
  Matrix jointP = strategy.player == Player::A ? game.joint : Matrix(game.joint.transpose());
  Matrix uP = strategy.player == Player::A ? game.payoffA
                                           : Matrix((-game.payoffA.transpose()).array() + game.sumConst);
  Matrix w = jointP.transpose() * strategy.dist * uP;  // opponent type x opponent action
  return w.rowwise().minCoeff().sum();
}

BestResponse best_response(const FiniteBayesGame& game, const BehaviorStrategy& opponent,
                           Player p) {
  validate_strategy(game, opponent);
  Matrix u = interim_payoffs(game, opponent, p);
  BestResponse br{{p, std::vector<int>(game.types(p))}, std::vector<double>(game.types(p))};
  for (int t = 0; t < game.types(p); ++t) {
    br.strategy.actionOf[t] = argmax_low(u.row(t).transpose());
    br.payoffByType[t] = u(t, br.strategy.actionOf[t]);
  }
  return br;
}

namespace {

// Per type, all actions whose interim regret is within tol.
std::vector<std::vector<int>> near_best_sets(const Matrix& u, double tol) {
  std::vector<std::vector<int>> sets(u.rows());
  for (Eigen::Index t = 0; t < u.rows(); ++t) {
    double top = u.row(t).maxCoeff();
    for (Eigen::Index x = 0; x < u.cols(); ++x)
      if (top - u(t, x) <= tol) sets[t].push_back(static_cast<int>(x));
  }
  return sets;
}

}  // namespace

BneEnumeration enumerate_pure_bne(const FiniteBayesGame& game, double tol,
                                  const SolverConfig& cfg) {
  require_valid(game);
  auto [nA, nB] = checked_counts(game, cfg);
  (void)nA;
  BneEnumeration out;
  std::vector<std::tuple<std::size_t, std::size_t, PureStrategy, PureStrategy>> found;
  for (std::size_t j = 0; j < nB; ++j) {
    PureStrategy b = decode_pure(game, Player::B, j);
    BehaviorStrategy bs = BehaviorStrategy::from_pure(b, game.nActsB);
    auto sets = near_best_sets(interim_payoffs(game, bs, Player::A), tol);
    // walk the product of the per-type sets in lexicographic order
    std::vector<std::size_t> pos(sets.size(), 0);
    while (true) {
      PureStrategy a{Player::A, std::vector<int>(sets.size())};
      for (std::size_t t = 0; t < sets.size(); ++t) a.actionOf[t] = sets[t][pos[t]];
      ++out.candidatesChecked;
      BehaviorStrategy as = BehaviorStrategy::from_pure(a, game.nActsA);
      Matrix uB = interim_payoffs(game, as, Player::B);
      bool ok = true;
      for (int t = 0; t < game.nTypesB && ok; ++t)
        ok = uB.row(t).maxCoeff() - uB(t, b.actionOf[t]) <= tol;
      if (ok) found.emplace_back(encode_pure(game, a), j, a, b);
      std::size_t k = sets.size();
      while (k > 0 && ++pos[k - 1] == sets[k - 1].size()) pos[--k] = 0;
      if (k == 0) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
  });
  for (auto& [ia, ib, a, b] : found) {
    StrategyProfile prof = StrategyProfile::pure(game, a, b);
    out.equilibria.push_back({a, b, certify(game, prof, tol)});
  }
  return out;
}

}  // namespace expost
