#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expost/game.hpp"

namespace expost::normal {

/// State theta ~ N(0, 1/alpha); candidate i observes s_i ~ N(theta, 1/beta_i).
struct NormalModel {
  double alpha = 1.0;
  double betaA = 1.0;
  double betaB = 1.0;

  static NormalModel symmetric(double alpha, double beta) { return {alpha, beta, beta}; }

  double beta(Player p) const { return p == Player::A ? betaA : betaB; }
  bool is_symmetric() const { return betaA == betaB; }
};

// Throws InvalidModel unless all precisions are positive and finite.
void validate_model(const NormalModel& model);

double posterior_single(const NormalModel& model, Player p, double s);
double posterior_pair(const NormalModel& model, double sA, double sB);

struct Gaussian {
  double mean = 0.0;
  double variance = 1.0;
};

/// Distribution of the opponent's signal given p's signal s.
Gaussian opponent_conditional(const NormalModel& model, Player p, double s);

enum class StrategyKind {
  Unbiased,
  AntiPander,
  Benevolent,
  FullPander,
  DelegationLoser,
  MixedMotivesWinner,
  MixedMotivesLoser,
  AffineWithOffset,
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::Unbiased;
  Player player = Player::A;
  double b = 0.0;       // ideology shift for the mixed-motives pair
  double offset = 0.0;  // c for AffineWithOffset
  int sign = 1;         // +1 or -1 for AffineWithOffset
};

/// Map from a candidate's signal to his platform.
class PlatformStrategy {
 public:
  enum class Form { Affine, BenevolentPander, Custom };

  static PlatformStrategy affine(double slope, double intercept, std::string label);
  static PlatformStrategy benevolent(const NormalModel& model);
  static PlatformStrategy custom(std::function<double(double)> f, std::string label);

  double operator()(double s) const;

  Form form() const { return form_; }
  bool invertible() const { return form_ == Form::Affine && slope_ != 0.0; }
  // Throws NonInvertibleConjecture.
  double inverse(double x) const;
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }
  const std::string& label() const { return label_; }

 private:
  Form form_ = Form::Affine;
  double slope_ = 0.0;
  double intercept_ = 0.0;
  double alpha_ = 1.0;
  double beta_ = 1.0;
  std::function<double(double)> custom_;
  std::string label_;
};

// Throws AsymmetricBenevolentUnsupported for Benevolent on an asymmetric model.
PlatformStrategy make_strategy(const NormalModel& model, const StrategySpec& spec);

/// y(s) = beta/(alpha+2beta) (s + E[s' | s, |s'| <= |s|]) with s' the
/// opponent's signal.
double benevolent_platform(const NormalModel& model, double s);

enum class VoterKind { BestResponseGiven, MoreExtreme, AlwaysElect, FairCoin };
enum class TieBreak { FairCoin, FixedA, FixedB };

struct VoterRule {
  VoterKind kind = VoterKind::FairCoin;
  TieBreak tieBreak = TieBreak::FairCoin;
  Player elect = Player::A;  // AlwaysElect target
  std::optional<PlatformStrategy> conjectureA;  // BestResponseGiven only
  std::optional<PlatformStrategy> conjectureB;
};

// Throws NonInvertibleConjecture for BestResponseGiven without invertible
// conjectures.
void validate_rule(const VoterRule& rule);

/// Squared-gap differences below this count as voter indifference.
inline constexpr double kIndifferenceTol = 1e-12;

/// `draw` is a uniform on [0, 1) consumed only to break ties.
Player voter_decide(const VoterRule& rule, const NormalModel& model, double xA, double xB,
                    double draw);

/// Probability that a candidate with signal sTrue, facing the unbiased
/// opponent and a voter who elects the more extreme platform, wins by
/// announcing the unbiased platform of sMimic.
double mimic_win_probability(const NormalModel& model, double sTrue, double sMimic,
                             Player p = Player::A);

struct ClosedFormWelfares {
  double fullPander = 0.0;
  double antiPander = 0.0;
  double delegation = 0.0;
};

// Throws AsymmetricUnsupported.
ClosedFormWelfares closed_form_welfares(const NormalModel& model);

struct IdentityCheck {
  bool holds = false;
  double maxResidual = 0.0;
  long checks = 0;
  long failures = 0;
};

/// Voter indifference between 2beta/(alpha+2beta) s + c and the same slope
/// with -c, for each c in `offsets`, at signal pairs drawn from the model.
IdentityCheck verify_antipander_indifference(const NormalModel& model, long nChecks,
                                             std::uint64_t seed,
                                             const std::vector<double>& offsets = {0.0, 0.7, -1.3});

/// The mixed-motives winner strictly beats the loser at every sampled pair.
/// maxResidual reports the largest disagreement between the voter's
/// posterior computed from platforms and from the inverted signals.
IdentityCheck verify_mixed_motives_dominance(const NormalModel& model, double b, long nChecks,
                                             std::uint64_t seed);

}  // namespace expost::normal
