#include "expost/statistics.hpp"

#include <limits>

#include <Eigen/SVD>

#include "expost/lp.hpp"

namespace expost {

int numerical_rank(const Matrix& m, double rankTol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= rankTol * sv(0)) ++r;
  return r;
}

RankVerdict check_completeness(const FiniteBayesGame& game, Player p, double rankTol) {
  int r = numerical_rank(game.joint, rankTol);
  return {r == game.types(other(p)), r};
}

RankVerdict check_sli(const FiniteBayesGame& game, Player p, double rankTol) {
  int r = numerical_rank(conditional_matrix(game, p), rankTol);
  return {r == game.types(p), r};
}

namespace {

// Smallest L1 distance from `target` to the convex hull of `rows`.
double hull_distance(const Matrix& rows, const Vector& target) {
  const auto k = rows.rows();
  const auto n = rows.cols();
  // variables: lambda (k), e+ (n), e- (n)
  const auto nv = k + 2 * n;
  lp::LinearProgram prog;
  prog.A = Matrix::Zero(2 * n + 2, nv);
  prog.b = Vector::Zero(2 * n + 2);
  prog.c = Vector::Zero(nv);
  for (Eigen::Index j = 0; j < n; ++j) {
    // sum_k lambda_k rows(k, j) + e+_j - e-_j == target_j
    for (Eigen::Index i = 0; i < k; ++i) {
      prog.A(2 * j, i) = rows(i, j);
      prog.A(2 * j + 1, i) = -rows(i, j);
    }
    prog.A(2 * j, k + j) = 1.0;
    prog.A(2 * j, k + n + j) = -1.0;
    prog.A(2 * j + 1, k + j) = -1.0;
    prog.A(2 * j + 1, k + n + j) = 1.0;
    prog.b(2 * j) = target(j);
    prog.b(2 * j + 1) = -target(j);
    prog.c(k + j) = -1.0;
    prog.c(k + n + j) = -1.0;
  }
  prog.A.row(2 * n).head(k).setOnes();
  prog.b(2 * n) = 1.0;
  prog.A.row(2 * n + 1).head(k).setConstant(-1.0);
  prog.b(2 * n + 1) = -1.0;
  lp::Result res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) return std::numeric_limits<double>::infinity();
  return -res.objective;
}

}  // namespace

bool check_convex_independence(const FiniteBayesGame& game, Player p, double slack) {
  Matrix cond = conditional_matrix(game, p);
  const auto k = cond.rows();
  if (k == 1) return true;
  for (Eigen::Index j = 0; j < k; ++j) {
    Matrix others(k - 1, cond.cols());
    for (Eigen::Index i = 0, r = 0; i < k; ++i)
      if (i != j) others.row(r++) = cond.row(i);
    if (hull_distance(others, cond.row(j).transpose()) <= slack) return false;
  }
  return true;
}

StatisticsReport analyze_statistics(const FiniteBayesGame& game, double rankTol) {
  StatisticsReport r;
  r.rankTolerance = rankTol;
  r.rankJoint = numerical_rank(game.joint, rankTol);
  r.completenessA = check_completeness(game, Player::A, rankTol);
  r.completenessB = check_completeness(game, Player::B, rankTol);
  r.sliA = check_sli(game, Player::A, rankTol);
  r.sliB = check_sli(game, Player::B, rankTol);
  r.convexIndepA = check_convex_independence(game, Player::A);
  r.convexIndepB = check_convex_independence(game, Player::B);
  return r;
}

}  // namespace expost
