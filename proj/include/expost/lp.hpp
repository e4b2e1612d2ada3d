#pragma once

#include "expost/game.hpp"

namespace expost::lp {

/// maximize c'x  subject to  A x <= b,  x >= 0
struct LinearProgram {
  Matrix A;
  Vector b;
  Vector c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  double objective = 0.0;
  Vector x;
  Vector dual;  // shadow price per constraint row
};

/// Dense two-phase tableau simplex. Dantzig pricing with a switch to Bland's
/// rule after a run of degenerate pivots.
Result solve(const LinearProgram& program, double eps = 1e-12);

struct ZeroSumSolution {
  Vector rowStrategy;  // maximizer's mixed strategy
  Vector colStrategy;  // minimizer's mixed strategy
  double maxmin = 0.0;  // min over columns of rowStrategy' M
  double minmax = 0.0;  // max over rows of M colStrategy
  double value() const { return 0.5 * (maxmin + minmax); }
  double gap() const { return minmax - maxmin; }
};

/// Solves the matrix game M (row player maximizes) with a single LP on the
/// shifted positive matrix; the row strategy comes from its duals.
/// maxmin/minmax are recomputed from the returned strategies, so gap()
/// certifies the result.
ZeroSumSolution solve_zero_sum(const Matrix& payoff);

}  // namespace expost::lp
