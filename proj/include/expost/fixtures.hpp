#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "expost/beta.hpp"
#include "expost/io.hpp"

namespace expost::fixtures {

struct CheckResult {
  std::string check;
  std::string expected;
  std::string actual;
  bool passed = false;
  double tolerance = 0.0;
};

struct FixtureRecord {
  std::string name;
  std::string description;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<FixtureRecord>& registry();
// nullptr when unknown
const FixtureRecord* find(std::string_view name);

// Uniform 2x2 types, u_A = 1{xA == xB}.
FiniteBayesGame example1_game();
// Both players play s -> s.
StrategyProfile identity_profile(const FiniteBayesGame& game);

// Singleton types, matching pennies; both mix uniformly.
FiniteBayesGame example2_game();
StrategyProfile example2_profile();

/// Four-signal election with deterministic state (sA, sB). The candidate
/// game pays A one when the voter's table elects A.
struct Example3 {
  std::array<std::array<char, 4>, 4> electedAt;   // [xA][xB], 'A' or 'B'
  std::array<std::array<int, 4>, 4> correctAt;    // [sA][sB], action in 1..4
  FiniteBayesGame game;
  StrategyProfile profile;
  OutcomeMap outcomes;
};

Example3 example3();
// Voter welfare when both candidates announce their signal.
double example3_welfare(const Example3& ex);
// Best welfare attainable from candidate p's signal alone.
double example3_single_signal_welfare(const Example3& ex, Player p);

// (1/40)[[4,2,1,3],[2,4,3,1],[1,3,4,2],[3,1,2,4]], u_A = -1{xA == xB}.
FiniteBayesGame convex_independence_game();
// Action 1 on signals 1 and 3, action 0 on signals 2 and 4.
StrategyProfile convex_independence_profile(const FiniteBayesGame& game);

// [[0.4,0.1],[0.1,0.4]] with u_A = 1{xA == xB}.
FiniteBayesGame full_rank_matching_game();

/// Countable example truncated at depth K: F(sB|0) - sum_{sA<=K} 2^-sA F(sB|sA)
/// for sB = 1..K, as exact rationals (all zero).
std::vector<beta::Rational> li_not_sli_residuals(int K);
/// E[g(sA) | sB] up to normalization for g(0)=1, g(s)=-(1/2)(3/2)^s, sB = 1..K.
std::vector<beta::Rational> li_not_sli_test_function_residuals(int K);
/// Rank of the conditional rows sA = 0..K over columns sB = 1..K+1, exact.
int li_not_sli_truncated_rank(int K);
int exact_rank(std::vector<std::vector<beta::Rational>> rows);

// Uniform 2x2 types, theta = 1{sA == sB}, m = |xA - xB|, statistic m.
// Government plays a = 1 - m; v(a) = a when `valued`, else v = 0.
io::DualInput dual_counterexample(bool valued);
// Full-rank types with a saddle-point market.
io::DualInput dual_full_rank();

}  // namespace expost::fixtures
