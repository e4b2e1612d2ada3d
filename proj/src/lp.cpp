#include "expost/lp.hpp"

#include <cmath>
#include <vector>

namespace expost::lp {

namespace {

constexpr int kDegenerateRunBeforeBland = 50;

class Tableau {
 public:
  Tableau(const LinearProgram& prog, double eps) : eps_(eps) {
    m_ = static_cast<int>(prog.A.rows());
    n_ = static_cast<int>(prog.A.cols());
    for (int i = 0; i < m_; ++i)
      if (prog.b(i) < 0.0) artRow_.push_back(i);
    nArt_ = static_cast<int>(artRow_.size());
    cols_ = n_ + m_ + nArt_;
    T_ = Matrix::Zero(m_ + 1, cols_ + 1);
    negated_.assign(m_, false);
    basis_.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      T_.row(i).head(n_) = prog.A.row(i);
      T_(i, n_ + i) = 1.0;
      T_(i, cols_) = prog.b(i);
      basis_[i] = n_ + i;
    }
    for (int k = 0; k < nArt_; ++k) {
      int i = artRow_[k];
      T_.row(i) *= -1.0;
      negated_[i] = true;
      T_(i, n_ + m_ + k) = 1.0;
      basis_[i] = n_ + m_ + k;
    }
  }

  Result run(const Vector& c) {
    Result res;
    if (nArt_ > 0) {
      T_.row(m_).setZero();
      for (int k = 0; k < nArt_; ++k) T_(m_, n_ + m_ + k) = 1.0;
      for (int i : artRow_) T_.row(m_) -= T_.row(i);
      if (!iterate(cols_)) return res;  // phase one is bounded
      if (T_(m_, cols_) < -feasTol()) return res;
      evict_artificials();
    }
    T_.row(m_).setZero();
    T_.row(m_).head(n_) = -c.transpose();
    for (int i = 0; i < m_; ++i) {
      double r = T_(m_, basis_[i]);
      if (r != 0.0) T_.row(m_) -= r * T_.row(i);
    }
    if (!iterate(n_ + m_)) {
      res.status = Status::Unbounded;
      return res;
    }
    res.status = Status::Optimal;
    res.objective = T_(m_, cols_);
    res.x = Vector::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) res.x(basis_[i]) = T_(i, cols_);
    res.dual = Vector(m_);
    for (int i = 0; i < m_; ++i) res.dual(i) = negated_[i] ? -T_(m_, n_ + i) : T_(m_, n_ + i);
    return res;
  }

 private:
  double feasTol() const { return 1e-9 * (1.0 + T_.col(cols_).head(m_).cwiseAbs().maxCoeff()); }

  // Pivots until optimal over the first `active` columns. False if unbounded.
  bool iterate(int active) {
    int degenerateRun = 0;
    const long maxIter = 50L * (m_ + cols_) + 1000;
    for (long it = 0; it < maxIter; ++it) {
      bool bland = degenerateRun >= kDegenerateRunBeforeBland;
      int enter = -1;
      double best = -eps_;
      for (int j = 0; j < active; ++j) {
        double r = T_(m_, j);
        if (r < best) {
          enter = j;
          if (bland) break;
          best = r;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double bestRatio = 0.0;
      for (int i = 0; i < m_; ++i) {
        double a = T_(i, enter);
        if (a <= eps_) continue;
        double ratio = T_(i, cols_) / a;
        if (leave < 0 || ratio < bestRatio - eps_ ||
            (ratio <= bestRatio + eps_ && basis_[i] < basis_[leave])) {
          leave = i;
          bestRatio = ratio;
        }
      }
      if (leave < 0) return false;
      degenerateRun = bestRatio <= eps_ ? degenerateRun + 1 : 0;
      pivot(leave, enter);
    }
    return true;
  }

  void pivot(int r, int c) {
    T_.row(r) /= T_(r, c);
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double f = T_(i, c);
      if (f != 0.0) T_.row(i) -= f * T_.row(r);
    }
    basis_[r] = c;
  }

  void evict_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      int best = -1;
      for (int j = 0; j < n_ + m_; ++j)
        if (std::abs(T_(i, j)) > eps_ && (best < 0 || std::abs(T_(i, j)) > std::abs(T_(i, best))))
          best = j;
      if (best >= 0) pivot(i, best);
      // otherwise the row is redundant; the artificial stays basic at zero
    }
    for (int k = 0; k < nArt_; ++k) {
      int col = n_ + m_ + k;
      bool basic = false;
      for (int b : basis_) basic = basic || b == col;
      if (!basic) T_.col(col).setZero();
    }
  }

  double eps_;
  int m_ = 0, n_ = 0, nArt_ = 0, cols_ = 0;
  Matrix T_;
  std::vector<int> basis_;
  std::vector<int> artRow_;
  std::vector<bool> negated_;
};

}  // namespace

Result solve(const LinearProgram& program, double eps) {
  Tableau t(program, eps);
  return t.run(program.c);
}

ZeroSumSolution solve_zero_sum(const Matrix& payoff) {
  const auto rows = payoff.rows();
  const auto cols = payoff.cols();
  double shift = 1.0 - payoff.minCoeff();
  // column player: max 1'y s.t. (M + shift) y <= 1, y >= 0; the duals give
  // the row player's strategy.
  LinearProgram prog;
  prog.A = payoff.array() + shift;
  prog.b = Vector::Ones(rows);
  prog.c = Vector::Ones(cols);
  Result res = solve(prog);
  ZeroSumSolution sol;
  Vector y = res.x.cwiseMax(0.0);
  Vector x = res.dual.cwiseMax(0.0);
  sol.colStrategy = y / y.sum();
  sol.rowStrategy = x / x.sum();
  sol.maxmin = (sol.rowStrategy.transpose() * payoff).minCoeff();
  sol.minmax = (payoff * sol.colStrategy).maxCoeff();
  return sol;
}

}  // namespace expost::lp
