#pragma once

#include <array>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "expost/error.hpp"

namespace expost::beta {

using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-2/5" or a terminating decimal such as "0.125" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// theta ~ Beta(alpha, beta); each candidate sees a Bernoulli(theta) signal.
template <class T>
struct BetaModel {
  T alpha;
  T beta;

  bool equal_params() const { return alpha == beta; }
  T prior_mean() const { return alpha / (alpha + beta); }
  // Ex-ante probability of signal 1.
  T prob_one() const { return prior_mean(); }
};

template <class T>
void validate(const BetaModel<T>& m) {
  if (!(m.alpha > 0) || !(m.beta > 0))
    throw Error(ErrorCode::InvalidModel, "Beta parameters must be positive");
}

template <class T>
T posterior_single(const BetaModel<T>& m, int s) {
  return (m.alpha + s) / (m.alpha + m.beta + 1);
}

template <class T>
T posterior_pair(const BetaModel<T>& m, int sA, int sB) {
  return (m.alpha + sA + sB) / (m.alpha + m.beta + 2);
}

template <class T>
struct Overreaction {
  T y0;
  T y1;
};

template <class T>
Overreaction<T> overreaction_strategy(const BetaModel<T>& m) {
  return {m.alpha / (m.alpha + m.beta + 2), (m.alpha + 2) / (m.alpha + m.beta + 2)};
}

// y0 < E[theta|0] < E[theta] < E[theta|1] < y1
template <class T>
bool overreaction_chain_holds(const BetaModel<T>& m) {
  auto y = overreaction_strategy(m);
  T p0 = posterior_single(m, 0), p1 = posterior_single(m, 1), mu = m.prior_mean();
  return y.y0 < p0 && p0 < mu && mu < p1 && p1 < y.y1;
}

template <class T>
T abs_diff(const T& a, const T& b) {
  return a > b ? T(a - b) : T(b - a);
}

template <class T>
struct MidpointCheck {
  bool holds = false;
  T maxResidual{};
  std::array<T, 4> residual{};  // pairs (0,0), (0,1), (1,0), (1,1)
};

/// E[theta | sA, sB] against the midpoint of the two overreaction platforms.
template <class T>
MidpointCheck<T> verify_midpoint(const BetaModel<T>& m, const T& tol) {
  auto y = overreaction_strategy(m);
  MidpointCheck<T> out;
  out.maxResidual = T(0);
  for (int sA = 0; sA < 2; ++sA) {
    for (int sB = 0; sB < 2; ++sB) {
      T mid = ((sA ? y.y1 : y.y0) + (sB ? y.y1 : y.y0)) / 2;
      T r = abs_diff(posterior_pair(m, sA, sB), mid);
      out.residual[2 * sA + sB] = r;
      if (r > out.maxResidual) out.maxResidual = r;
    }
  }
  out.holds = !(out.maxResidual > tol);
  return out;
}

enum class Winner { A, B, Tie };

template <class T>
struct UnbiasedOutcome {
  Winner winner = Winner::Tie;
  T pairShift{};    // E[theta | sA, sB] - E[theta]
  T singleShift{};  // (E[theta | sA] + E[theta | sB]) / 2 - E[theta]
  bool sameSign = false;
  bool strictlyLarger = false;  // |pairShift| > |singleShift|
};

template <class T>
int sign_of(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Voter's choice when both candidates announce their own posterior means.
/// Throws EqualParams when alpha == beta.
template <class T>
UnbiasedOutcome<T> unbiased_outcome(const BetaModel<T>& m, int sA, int sB) {
  validate(m);
  if (m.equal_params())
    throw Error(ErrorCode::EqualParams, "alpha == beta leaves the voter indifferent");
  UnbiasedOutcome<T> out;
  T xA = posterior_single(m, sA), xB = posterior_single(m, sB);
  T mid = posterior_pair(m, sA, sB), mu = m.prior_mean();
  out.pairShift = mid - mu;
  out.singleShift = (xA + xB) / 2 - mu;
  out.sameSign = sign_of(out.pairShift) == sign_of(out.singleShift);
  out.strictlyLarger = abs_diff(mid, mu) > abs_diff(T((xA + xB) / 2), mu);
  T gA = abs_diff(xA, mid), gB = abs_diff(xB, mid);
  out.winner = gA < gB ? Winner::A : (gB < gA ? Winner::B : Winner::Tie);
  return out;
}

/// Posterior mean linear in the signals: E[theta | s1, s2] = (w0 s0 + w1 s1 + w1 s2) / (w0 + 2 w1).
template <class T>
struct LinearPosteriorModel {
  T w0;
  T w1;
  T s0;
};

template <class T>
T linear_posterior_antipander(const LinearPosteriorModel<T>& m, const T& s) {
  return (2 * m.w1 / (m.w0 + 2 * m.w1)) * s + (m.w0 / (m.w0 + 2 * m.w1)) * m.s0;
}

template <class T>
LinearPosteriorModel<T> linear_form(const BetaModel<T>& m) {
  return {m.alpha + m.beta, T(1), m.alpha / (m.alpha + m.beta)};
}

}  // namespace expost::beta
