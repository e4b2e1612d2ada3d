#pragma once

#include <cstddef>
#include <cstdint>

#include "expost/election.hpp"

namespace expost::normal {

/// Counter-based stream: the draws of sample k depend only on (seed, k).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t counter);

  std::uint64_t next_u64();
  double uniform();       // [0, 1)
  double uniform_open();  // (0, 1]
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool hasSpare_ = false;
};

// Samples per work unit. Reductions run over chunks in index order, so the
// estimates do not depend on the worker count.
inline constexpr std::size_t kChunkSize = 1 << 15;

struct MonteCarloConfig {
  std::uint64_t seed = 1;
  std::size_t nSamples = 1'000'000;
  unsigned workerHint = 0;  // 0 picks hardware concurrency
};

struct WelfareEstimate {
  double mean = 0.0;
  double stdError = 0.0;
  std::size_t nSamples = 0;
};

/// One simulated election. Draw order per sample: theta, sA, sB, tie draw.
struct Draw {
  double theta = 0.0;
  double sA = 0.0;
  double sB = 0.0;
  double tie = 0.0;
};

Draw draw_sample(const NormalModel& model, std::uint64_t seed, std::uint64_t k);

WelfareEstimate mc_welfare(const NormalModel& model, const PlatformStrategy& stratA,
                           const PlatformStrategy& stratB, const VoterRule& rule,
                           const MonteCarloConfig& cfg);

struct Profile {
  PlatformStrategy stratA;
  PlatformStrategy stratB;
  VoterRule rule;
};

/// Two profiles evaluated on the same draws.
struct PairedComparison {
  WelfareEstimate first;
  WelfareEstimate second;
  double diff = 0.0;           // first - second
  double diffStdError = 0.0;   // from per-sample differences
};

PairedComparison mc_compare(const NormalModel& model, const Profile& first, const Profile& second,
                            const MonteCarloConfig& cfg);

struct WelfareDecomposition {
  double LV = 0.0;
  double LE = 0.0;
  double total = 0.0;
  double reassemblyGap = 0.0;
  double stdErrorLV = 0.0;
  double stdErrorLE = 0.0;
  double stdErrorTotal = 0.0;
  double stdErrorGap = 0.0;  // of the per-sample reassembly difference
  bool closedFormConditioning = false;
  std::size_t nSamples = 0;
};

/// Splits welfare as -(beta/(alpha+2beta))^2 L_V - L_E - 1/(alpha+2beta).
/// Under MoreExtreme the winner-conditional moments of the loser's signal
/// come from the truncated normal; other rules use equal-count signal bins
/// per winner. Throws AsymmetricUnsupported.
WelfareDecomposition mc_decomposition(const NormalModel& model, const PlatformStrategy& stratA,
                                      const PlatformStrategy& stratB, const VoterRule& rule,
                                      const MonteCarloConfig& cfg);

/// Simulated counterpart of mimic_win_probability: theta and the opponent's
/// signal are drawn conditional on sTrue.
WelfareEstimate mc_mimic_win_probability(const NormalModel& model, double sTrue, double sMimic,
                                         const MonteCarloConfig& cfg, Player p = Player::A);

}  // namespace expost::normal
