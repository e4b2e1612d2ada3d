#include "expost/election.hpp"

#include <cmath>
#include <sstream>

#include "expost/montecarlo.hpp"
#include "expost/truncated_normal.hpp"

namespace expost::normal {

void validate_model(const NormalModel& m) {
  for (double v : {m.alpha, m.betaA, m.betaB}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      std::ostringstream os;
      os << "precisions must be positive and finite (alpha=" << m.alpha << ", betaA=" << m.betaA
         << ", betaB=" << m.betaB << ")";
      throw Error(ErrorCode::InvalidModel, os.str());
    }
  }
}

double posterior_single(const NormalModel& m, Player p, double s) {
  return m.beta(p) / (m.alpha + m.beta(p)) * s;
}

double posterior_pair(const NormalModel& m, double sA, double sB) {
  return (m.betaA * sA + m.betaB * sB) / (m.alpha + m.betaA + m.betaB);
}

Gaussian opponent_conditional(const NormalModel& m, Player p, double s) {
  double bi = m.beta(p);
  return {bi / (m.alpha + bi) * s, 1.0 / (m.alpha + bi) + 1.0 / m.beta(other(p))};
}

double benevolent_platform(const NormalModel& m, double s) {
  if (s == 0.0) return 0.0;
  Gaussian g = opponent_conditional(m, Player::A, s);
  double h = truncated_normal_mean(g.mean, std::sqrt(g.variance), -std::abs(s), std::abs(s));
  return m.betaA / (m.alpha + 2.0 * m.betaA) * (s + h);
}

PlatformStrategy PlatformStrategy::affine(double slope, double intercept, std::string label) {
  PlatformStrategy p;
  p.form_ = Form::Affine;
  p.slope_ = slope;
  p.intercept_ = intercept;
  p.label_ = std::move(label);
  return p;
}

PlatformStrategy PlatformStrategy::benevolent(const NormalModel& model) {
  if (!model.is_symmetric())
    throw Error(ErrorCode::AsymmetricBenevolentUnsupported,
                "the benevolent pandering strategy is defined for betaA == betaB only");
  PlatformStrategy p;
  p.form_ = Form::BenevolentPander;
  p.alpha_ = model.alpha;
  p.beta_ = model.betaA;
  p.label_ = "benevolent";
  return p;
}

PlatformStrategy PlatformStrategy::custom(std::function<double(double)> f, std::string label) {
  PlatformStrategy p;
  p.form_ = Form::Custom;
  p.custom_ = std::move(f);
  p.label_ = std::move(label);
  return p;
}

double PlatformStrategy::operator()(double s) const {
  switch (form_) {
    case Form::Affine: return slope_ * s + intercept_;
    case Form::BenevolentPander: return benevolent_platform(NormalModel::symmetric(alpha_, beta_), s);
    case Form::Custom: return custom_(s);
  }
  return 0.0;
}

double PlatformStrategy::inverse(double x) const {
  if (!invertible())
    throw Error(ErrorCode::NonInvertibleConjecture, "strategy '" + label_ + "' is not invertible");
  return (x - intercept_) / slope_;
}

PlatformStrategy make_strategy(const NormalModel& m, const StrategySpec& spec) {
  validate_model(m);
  const Player p = spec.player;
  const double a = m.alpha;
  const double bp = m.beta(p);
  switch (spec.kind) {
    case StrategyKind::Unbiased:
      return PlatformStrategy::affine(bp / (a + bp), 0.0, "unbiased");
    case StrategyKind::AntiPander:
      return PlatformStrategy::affine(2.0 * bp / (a + m.betaA + m.betaB), 0.0, "antipander");
    case StrategyKind::Benevolent:
      return PlatformStrategy::benevolent(m);
    case StrategyKind::FullPander:
      return PlatformStrategy::affine(0.0, 0.0, "fullpander");
    case StrategyKind::DelegationLoser:
      return PlatformStrategy::affine(0.0, 0.0, "delegation-loser");
    case StrategyKind::MixedMotivesWinner:
      return PlatformStrategy::affine(bp / (a + bp), spec.b, "mixed-motives-winner");
    case StrategyKind::MixedMotivesLoser:
      // inverse of the winner's map shifted by b: s - (alpha+beta)/beta * b
      return PlatformStrategy::affine(1.0, -(a + bp) / bp * spec.b, "mixed-motives-loser");
    case StrategyKind::AffineWithOffset:
      if (!m.is_symmetric())
        throw Error(ErrorCode::AsymmetricUnsupported, "offset family needs betaA == betaB");
      return PlatformStrategy::affine(2.0 * bp / (a + 2.0 * bp), spec.sign * spec.offset, "offset");
  }
  throw Error(ErrorCode::InvalidInput, "unknown strategy kind");
}

void validate_rule(const VoterRule& rule) {
  if (rule.kind != VoterKind::BestResponseGiven) return;
  if (!rule.conjectureA || !rule.conjectureB || !rule.conjectureA->invertible() ||
      !rule.conjectureB->invertible())
    throw Error(ErrorCode::NonInvertibleConjecture,
                "best-response voter needs invertible conjectures for both candidates");
}

namespace {

Player break_tie(TieBreak t, double draw) {
  switch (t) {
    case TieBreak::FixedA: return Player::A;
    case TieBreak::FixedB: return Player::B;
    case TieBreak::FairCoin: break;
  }
  return draw < 0.5 ? Player::A : Player::B;
}

}  // namespace

Player voter_decide(const VoterRule& rule, const NormalModel& model, double xA, double xB,
                    double draw) {
  switch (rule.kind) {
    case VoterKind::AlwaysElect: return rule.elect;
    case VoterKind::FairCoin: return draw < 0.5 ? Player::A : Player::B;
    case VoterKind::MoreExtreme: {
      double a = std::abs(xA), b = std::abs(xB);
      if (a == b) return break_tie(rule.tieBreak, draw);
      return a > b ? Player::A : Player::B;
    }
    case VoterKind::BestResponseGiven: {
      validate_rule(rule);
      double m = posterior_pair(model, rule.conjectureA->inverse(xA), rule.conjectureB->inverse(xB));
      double gA = (xA - m) * (xA - m);
      double gB = (xB - m) * (xB - m);
      if (std::abs(gA - gB) < kIndifferenceTol) return break_tie(rule.tieBreak, draw);
      return gA < gB ? Player::A : Player::B;
    }
  }
  return Player::A;
}

double mimic_win_probability(const NormalModel& model, double sTrue, double sMimic, Player p) {
  Gaussian g = opponent_conditional(model, p, sTrue);
  double sd = std::sqrt(g.variance);
  double r = std::abs(sMimic);
  // P(|s_opp| < |sMimic|), written with upper tails to keep precision near 1
  double upper = 0.5 * std::erfc((r - g.mean) / (sd * std::sqrt(2.0)));
  double lower = 0.5 * std::erfc((r + g.mean) / (sd * std::sqrt(2.0)));
  return std::max(0.0, 1.0 - upper - lower);
}

ClosedFormWelfares closed_form_welfares(const NormalModel& m) {
  validate_model(m);
  if (!m.is_symmetric())
    throw Error(ErrorCode::AsymmetricUnsupported, "closed-form welfares need betaA == betaB");
  double a = m.alpha, b = m.betaA;
  return {-1.0 / a, -(a + 4.0 * b) / ((a + 2.0 * b) * (a + 2.0 * b)), -1.0 / (a + b)};
}

IdentityCheck verify_antipander_indifference(const NormalModel& m, long nChecks,
                                             std::uint64_t seed,
                                             const std::vector<double>& offsets) {
  validate_model(m);
  if (!m.is_symmetric())
    throw Error(ErrorCode::AsymmetricUnsupported, "indifference identity needs betaA == betaB");
  IdentityCheck out;
  for (long k = 0; k < nChecks; ++k) {
    Draw d = draw_sample(m, seed, static_cast<std::uint64_t>(k));
    double mid = posterior_pair(m, d.sA, d.sB);
    for (double c : offsets) {
      PlatformStrategy ya = make_strategy(m, {StrategyKind::AffineWithOffset, Player::A, 0.0, c, 1});
      PlatformStrategy yb = make_strategy(m, {StrategyKind::AffineWithOffset, Player::B, 0.0, c, -1});
      double gA = ya(d.sA) - mid;
      double gB = yb(d.sB) - mid;
      double r = std::abs(gA * gA - gB * gB);
      out.maxResidual = std::max(out.maxResidual, r);
      ++out.checks;
      if (r > 1e-10) ++out.failures;
    }
  }
  out.holds = out.failures == 0;
  return out;
}

IdentityCheck verify_mixed_motives_dominance(const NormalModel& m, double b, long nChecks,
                                             std::uint64_t seed) {
  validate_model(m);
  if (!m.is_symmetric())
    throw Error(ErrorCode::AsymmetricUnsupported, "mixed-motives check needs betaA == betaB");
  const double a = m.alpha, be = m.betaA;
  PlatformStrategy win = make_strategy(m, {StrategyKind::MixedMotivesWinner, Player::A, b});
  PlatformStrategy lose = make_strategy(m, {StrategyKind::MixedMotivesLoser, Player::B, b});
  IdentityCheck out;
  for (long k = 0; k < nChecks; ++k) {
    Draw d = draw_sample(m, seed, static_cast<std::uint64_t>(k));
    double xi = win(d.sA), xo = lose(d.sB);
    double mid = (a * xi + be * (xi + xo)) / (a + 2.0 * be);
    out.maxResidual = std::max(out.maxResidual, std::abs(mid - posterior_pair(m, d.sA, d.sB)));
    ++out.checks;
    if (!((xi - mid) * (xi - mid) < (xo - mid) * (xo - mid))) ++out.failures;
  }
  out.holds = out.failures == 0 && out.maxResidual <= 1e-9;
  return out;
}

}  // namespace expost::normal
