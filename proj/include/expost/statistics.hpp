#pragma once

#include "expost/game.hpp"

namespace expost {

/// Number of singular values at or above rankTol * (largest singular value).
int numerical_rank(const Matrix& m, double rankTol = kDefaultRankTolerance);

struct RankVerdict {
  bool holds = false;
  int rank = 0;
};

// Completeness for p: the joint matrix has rank equal to the opponent's type
// count (finite form of bounded completeness).
RankVerdict check_completeness(const FiniteBayesGame& game, Player p,
                               double rankTol = kDefaultRankTolerance);

// Strong linear independence for p; for finite types, full row rank of p's
// conditional matrix.
RankVerdict check_sli(const FiniteBayesGame& game, Player p,
                      double rankTol = kDefaultRankTolerance);

/// Default slack on the L1 residual of the convex-hull feasibility problem.
inline constexpr double kConvexHullSlack = 1e-9;

/// True iff no row of p's conditional matrix lies in the convex hull of the
/// remaining rows.
bool check_convex_independence(const FiniteBayesGame& game, Player p,
                               double slack = kConvexHullSlack);

struct StatisticsReport {
  RankVerdict completenessA;
  RankVerdict completenessB;
  int rankJoint = 0;
  RankVerdict sliA;
  RankVerdict sliB;
  bool convexIndepA = false;
  bool convexIndepB = false;
  double rankTolerance = kDefaultRankTolerance;
};

StatisticsReport analyze_statistics(const FiniteBayesGame& game,
                                    double rankTol = kDefaultRankTolerance);

}  // namespace expost
