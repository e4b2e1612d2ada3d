#include "expost/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "parallel.hpp"

namespace expost::normal {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t counter)
    : state_(mix64(mix64(seed + kGolden) + counter)) {}

std::uint64_t CounterRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

double CounterRng::normal() {
  if (hasSpare_) {
    hasSpare_ = false;
    return spare_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform_open()));
  double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  hasSpare_ = true;
  return r * std::cos(t);
}

Draw draw_sample(const NormalModel& m, std::uint64_t seed, std::uint64_t k) {
  CounterRng rng(seed, k);
  Draw d;
  d.theta = rng.normal() / std::sqrt(m.alpha);
  d.sA = d.theta + rng.normal() / std::sqrt(m.betaA);
  d.sB = d.theta + rng.normal() / std::sqrt(m.betaB);
  d.tie = rng.uniform();
  return d;
}

namespace {

double welfare_of(const NormalModel& m, const Profile& p, const Draw& d) {
  double xA = p.stratA(d.sA);
  double xB = p.stratB(d.sB);
  double x = voter_decide(p.rule, m, xA, xB, d.tie) == Player::A ? xA : xB;
  return -(x - d.theta) * (x - d.theta);
}

WelfareEstimate estimate(const detail::Moments<3>& mo, std::size_t i) {
  return {mo.mean[i], mo.std_error(i), static_cast<std::size_t>(mo.count)};
}

}  // namespace

WelfareEstimate mc_welfare(const NormalModel& model, const PlatformStrategy& stratA,
                           const PlatformStrategy& stratB, const VoterRule& rule,
                           const MonteCarloConfig& cfg) {
  validate_model(model);
  validate_rule(rule);
  Profile p{stratA, stratB, rule};
  auto parts = detail::run_chunks<detail::Moments<1>>(
      cfg.nSamples, kChunkSize, cfg.workerHint, [&](std::size_t b, std::size_t e) {
        detail::Moments<1> acc;
        for (std::size_t k = b; k < e; ++k) acc.add({welfare_of(model, p, draw_sample(model, cfg.seed, k))});
        return acc;
      });
  auto total = detail::merge_in_order(parts);
  return {total.mean[0], total.std_error(0), static_cast<std::size_t>(total.count)};
}

PairedComparison mc_compare(const NormalModel& model, const Profile& first, const Profile& second,
                            const MonteCarloConfig& cfg) {
  validate_model(model);
  validate_rule(first.rule);
  validate_rule(second.rule);
  auto parts = detail::run_chunks<detail::Moments<3>>(
      cfg.nSamples, kChunkSize, cfg.workerHint, [&](std::size_t b, std::size_t e) {
        detail::Moments<3> acc;
        for (std::size_t k = b; k < e; ++k) {
          Draw d = draw_sample(model, cfg.seed, k);
          double w1 = welfare_of(model, first, d);
          double w2 = welfare_of(model, second, d);
          acc.add({w1, w2, w1 - w2});
        }
        return acc;
      });
  auto total = detail::merge_in_order(parts);
  PairedComparison out;
  out.first = estimate(total, 0);
  out.second = estimate(total, 1);
  out.diff = total.mean[2];
  out.diffStdError = total.std_error(2);
  return out;
}

WelfareEstimate mc_mimic_win_probability(const NormalModel& model, double sTrue, double sMimic,
                                         const MonteCarloConfig& cfg, Player p) {
  validate_model(model);
  const double bi = model.beta(p);
  const double bo = model.beta(other(p));
  const double postMean = bi / (model.alpha + bi) * sTrue;
  const double postSd = 1.0 / std::sqrt(model.alpha + bi);
  auto parts = detail::run_chunks<detail::Moments<1>>(
      cfg.nSamples, kChunkSize, cfg.workerHint, [&](std::size_t b, std::size_t e) {
        detail::Moments<1> acc;
        for (std::size_t k = b; k < e; ++k) {
          CounterRng rng(cfg.seed, k);
          double theta = postMean + postSd * rng.normal();
          double so = theta + rng.normal() / std::sqrt(bo);
          acc.add({sMimic * sMimic > so * so ? 1.0 : 0.0});
        }
        return acc;
      });
  auto total = detail::merge_in_order(parts);
  return {total.mean[0], total.std_error(0), static_cast<std::size_t>(total.count)};
}

}  // namespace expost::normal
