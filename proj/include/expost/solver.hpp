#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "expost/equilibrium.hpp"

namespace expost {

inline constexpr std::size_t kDefaultCellCap = 1'000'000;

struct SolverConfig {
  std::size_t cellCap = kDefaultCellCap;
};

/// Ex-ante normal form over pure strategies. Pure strategy index k encodes the
/// action vector in mixed radix with type 0 as the most significant digit,
/// so index order is lexicographic order of action vectors.
struct InducedNormalForm {
  std::size_t pureStratCountA = 0;
  std::size_t pureStratCountB = 0;
  Matrix expectedPayoff;  // E[u_A] for (row, col)
};

// Number of pure strategies for p, or 0 when it exceeds `limit`.
std::size_t pure_strategy_count(const FiniteBayesGame& game, Player p, std::size_t limit);

PureStrategy decode_pure(const FiniteBayesGame& game, Player p, std::size_t index);
std::size_t encode_pure(const FiniteBayesGame& game, const PureStrategy& s);

InducedNormalForm induce_normal_form(const FiniteBayesGame& game, const SolverConfig& cfg = {});

struct MinimaxSolution {
  double value = 0.0;  // U*_A
  double maxmin = 0.0;
  double minmax = 0.0;
  Vector mixedA;
  Vector mixedB;
  BehaviorStrategy behavioralA;
  BehaviorStrategy behavioralB;
};

MinimaxSolution solve_minimax_lp(const FiniteBayesGame& game, const SolverConfig& cfg = {});

/// Projects a distribution over induced pure strategies onto per-type action
/// distributions.
BehaviorStrategy project_behavioral(const FiniteBayesGame& game, Player p, const Vector& mixed);

/// Worst-case ex-ante payoff of `strategy` for its owner over all opponent
/// pure strategies.
double security_level(const FiniteBayesGame& game, const BehaviorStrategy& strategy);

struct BestResponse {
  PureStrategy strategy;
  std::vector<double> payoffByType;
};

/// Per type, the lowest-index action maximizing interim payoff.
BestResponse best_response(const FiniteBayesGame& game, const BehaviorStrategy& opponent,
                           Player p);

struct EnumeratedBne {
  PureStrategy a;
  PureStrategy b;
  EquilibriumCertificate certificate;
};

struct BneEnumeration {
  std::vector<EnumeratedBne> equilibria;  // lexicographic in (a, b)
  std::uint64_t candidatesChecked = 0;  // profiles that passed the one-sided pruning
};

BneEnumeration enumerate_pure_bne(const FiniteBayesGame& game, double tol = kDefaultTolerance,
                                  const SolverConfig& cfg = {});

}  // namespace expost
