#include "expost/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "expost/truncated_normal.hpp"
#include "parallel.hpp"

namespace expost::normal {

namespace {

constexpr std::size_t kMinBin = 100;

struct Sample {
  Player winner = Player::A;
  double sWin = 0.0;
  double sLose = 0.0;
  double xWin = 0.0;
  double theta = 0.0;
};

Sample simulate(const NormalModel& m, const PlatformStrategy& a, const PlatformStrategy& b,
                const VoterRule& rule, std::uint64_t seed, std::uint64_t k) {
  Draw d = draw_sample(m, seed, k);
  double xA = a(d.sA), xB = b(d.sB);
  if (voter_decide(rule, m, xA, xB, d.tie) == Player::A) return {Player::A, d.sA, d.sB, xA, d.theta};
  return {Player::B, d.sB, d.sA, xB, d.theta};
}

// Per-sample terms: {L_V term, L_E term, welfare, reassembly residual}.
std::array<double, 4> terms(const NormalModel& m, const Sample& s, double h, double var) {
  const double k = m.betaA / (m.alpha + 2.0 * m.betaA);
  const double e = s.xWin - k * (s.sWin + h);
  const double w = -(s.xWin - s.theta) * (s.xWin - s.theta);
  const double le = e * e;
  return {var, le, w, w + k * k * var + le + 1.0 / (m.alpha + 2.0 * m.betaA)};
}

WelfareDecomposition finish(const detail::Moments<4>& mo, const NormalModel& m, bool closed) {
  const double k = m.betaA / (m.alpha + 2.0 * m.betaA);
  WelfareDecomposition out;
  out.LV = mo.mean[0];
  out.LE = mo.mean[1];
  out.total = mo.mean[2];
  out.reassemblyGap = std::abs(out.total - (-k * k * out.LV - out.LE - 1.0 / (m.alpha + 2.0 * m.betaA)));
  out.stdErrorLV = mo.std_error(0);
  out.stdErrorLE = mo.std_error(1);
  out.stdErrorTotal = mo.std_error(2);
  out.stdErrorGap = mo.std_error(3);
  out.closedFormConditioning = closed;
  out.nSamples = static_cast<std::size_t>(mo.count);
  return out;
}

}  // namespace

WelfareDecomposition mc_decomposition(const NormalModel& model, const PlatformStrategy& stratA,
                                      const PlatformStrategy& stratB, const VoterRule& rule,
                                      const MonteCarloConfig& cfg) {
  validate_model(model);
  validate_rule(rule);
  if (!model.is_symmetric())
    throw Error(ErrorCode::AsymmetricUnsupported, "the decomposition needs betaA == betaB");

  if (rule.kind == VoterKind::MoreExtreme) {
    auto parts = detail::run_chunks<detail::Moments<4>>(
        cfg.nSamples, kChunkSize, cfg.workerHint, [&](std::size_t b, std::size_t e) {
          detail::Moments<4> acc;
          for (std::size_t k = b; k < e; ++k) {
            Sample s = simulate(model, stratA, stratB, rule, cfg.seed, k);
            // the winner has the larger |signal|
            Gaussian g = opponent_conditional(model, s.winner, s.sWin);
            double sd = std::sqrt(g.variance), r = std::abs(s.sWin);
            double h = truncated_normal_mean(g.mean, sd, -r, r);
            double v = truncated_normal_variance(g.mean, sd, -r, r);
            acc.add(terms(model, s, h, v));
          }
          return acc;
        });
    return finish(detail::merge_in_order(parts), model, true);
  }

  std::vector<Sample> samples(cfg.nSamples);
  detail::run_chunks<char>(cfg.nSamples, kChunkSize, cfg.workerHint,
                           [&](std::size_t b, std::size_t e) {
                             for (std::size_t k = b; k < e; ++k)
                               samples[k] = simulate(model, stratA, stratB, rule, cfg.seed, k);
                             return char{0};
                           });
  detail::Moments<4> acc;
  for (Player w : {Player::A, Player::B}) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < samples.size(); ++k)
      if (samples[k].winner == w) idx.push_back(k);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t l, std::size_t r) { return samples[l].sWin < samples[r].sWin; });
    std::size_t bin = std::max(kMinBin, static_cast<std::size_t>(std::sqrt(static_cast<double>(idx.size()))));
    std::size_t nBins = std::max<std::size_t>(1, idx.size() / bin);
    for (std::size_t j = 0; j < nBins; ++j) {
      std::size_t lo = j * idx.size() / nBins, hi = (j + 1) * idx.size() / nBins;
      double h = 0.0;
      for (std::size_t t = lo; t < hi; ++t) h += samples[idx[t]].sLose;
      h /= static_cast<double>(hi - lo);
      for (std::size_t t = lo; t < hi; ++t) {
        const Sample& s = samples[idx[t]];
        acc.add(terms(model, s, h, (s.sLose - h) * (s.sLose - h)));
      }
    }
  }
  return finish(acc, model, false);
}

}  // namespace expost::normal
