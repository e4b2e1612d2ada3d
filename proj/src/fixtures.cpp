#include "expost/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "expost/election.hpp"

namespace expost::fixtures {

using beta::Rational;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt(bool v) { return v ? "true" : "false"; }

CheckResult expect(std::string check, bool expected, bool actual) {
  return {std::move(check), fmt(expected), fmt(actual), expected == actual, 0.0};
}

CheckResult expect_near(std::string check, double expected, double actual, double tol) {
  return {std::move(check), fmt(expected), fmt(actual), std::abs(expected - actual) <= tol, tol};
}

CheckResult expect_label(std::string check, const std::string& expected, const std::string& actual) {
  return {std::move(check), expected, actual, expected == actual, 0.0};
}

FiniteBayesGame make_game(Matrix joint, Matrix payoff, double c) {
  FiniteBayesGame g;
  g.nTypesA = static_cast<int>(joint.rows());
  g.nTypesB = static_cast<int>(joint.cols());
  g.joint = std::move(joint);
  g.nActsA = static_cast<int>(payoff.rows());
  g.nActsB = static_cast<int>(payoff.cols());
  g.payoffA = std::move(payoff);
  g.sumConst = c;
  require_valid(g);
  return g;
}

Matrix matching(int n) { return Matrix::Identity(n, n); }

}  // namespace

FiniteBayesGame example1_game() { return make_game(Matrix::Constant(2, 2, 0.25), matching(2), 0.0); }

StrategyProfile identity_profile(const FiniteBayesGame& g) {
  PureStrategy a{Player::A, {}}, b{Player::B, {}};
  for (int t = 0; t < g.nTypesA; ++t) a.actionOf.push_back(t);
  for (int t = 0; t < g.nTypesB; ++t) b.actionOf.push_back(t);
  return StrategyProfile::pure(g, a, b);
}

FiniteBayesGame example2_game() { return make_game(Matrix::Ones(1, 1), matching(2), 0.0); }

StrategyProfile example2_profile() {
  Vector half = Vector::Constant(2, 0.5);
  return {BehaviorStrategy::constant(Player::A, 1, half), BehaviorStrategy::constant(Player::B, 1, half)};
}

Example3 example3() {
  Example3 ex;
  ex.electedAt = {{{'A', 'B', 'B', 'A'}, {'B', 'A', 'B', 'A'}, {'A', 'B', 'A', 'B'}, {'B', 'A', 'A', 'B'}}};
  ex.correctAt = {{{1, 2, 3, 1}, {1, 2, 3, 2}, {3, 2, 3, 4}, {1, 4, 4, 4}}};
  Matrix payoff(4, 4);
  ex.outcomes.outcomeOf.assign(4, std::vector<std::string>(4));
  for (int xA = 0; xA < 4; ++xA) {
    for (int xB = 0; xB < 4; ++xB) {
      bool aWins = ex.electedAt[xA][xB] == 'A';
      payoff(xA, xB) = aWins ? 1.0 : 0.0;
      ex.outcomes.outcomeOf[xA][xB] = aWins ? "A elected" : "B elected";
    }
  }
  ex.outcomes.utilityA = {{"A elected", 1.0}, {"B elected", 0.0}};
  ex.outcomes.utilityB = {{"A elected", 0.0}, {"B elected", 1.0}};
  ex.game = make_game(Matrix::Constant(4, 4, 1.0 / 16.0), payoff, 1.0);
  ex.profile = identity_profile(ex.game);
  return ex;
}

double example3_welfare(const Example3& ex) {
  double w = 0.0;
  for (int sA = 0; sA < 4; ++sA) {
    for (int sB = 0; sB < 4; ++sB) {
      int platform = (ex.electedAt[sA][sB] == 'A' ? sA : sB) + 1;
      if (platform == ex.correctAt[sA][sB]) w += ex.game.joint(sA, sB);
    }
  }
  return w;
}

double example3_single_signal_welfare(const Example3& ex, Player p) {
  double w = 0.0;
  for (int s = 0; s < 4; ++s) {
    double best = 0.0;
    for (int x = 1; x <= 4; ++x) {
      double hit = 0.0;
      for (int o = 0; o < 4; ++o) {
        int sA = p == Player::A ? s : o, sB = p == Player::A ? o : s;
        if (ex.correctAt[sA][sB] == x) hit += ex.game.joint(sA, sB);
      }
      best = std::max(best, hit);
    }
    w += best;
  }
  return w;
}

FiniteBayesGame convex_independence_game() {
  Matrix f(4, 4);
  f << 4, 2, 1, 3, 2, 4, 3, 1, 1, 3, 4, 2, 3, 1, 2, 4;
  return make_game(f / 40.0, -matching(2), 0.0);
}

StrategyProfile convex_independence_profile(const FiniteBayesGame& g) {
  PureStrategy a{Player::A, {1, 0, 1, 0}}, b{Player::B, {1, 0, 1, 0}};
  return StrategyProfile::pure(g, a, b);
}

FiniteBayesGame full_rank_matching_game() {
  Matrix f(2, 2);
  f << 0.4, 0.1, 0.1, 0.4;
  return make_game(f, matching(2), 0.0);
}

namespace {

Rational pow_rat(Rational base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// F(sB | sA) of the countable example.
Rational li_conditional(int sA, int sB) {
  if (sA == 0) return pow_rat(Rational(1, 2), sB);
  return sA == sB ? Rational(1) : Rational(0);
}

Rational li_marginal_A(int sA) { return sA == 0 ? Rational(1, 2) : pow_rat(Rational(1, 3), sA); }

}  // namespace

std::vector<Rational> li_not_sli_residuals(int K) {
  std::vector<Rational> out;
  for (int sB = 1; sB <= K; ++sB) {
    Rational r = li_conditional(0, sB);
    for (int sA = 1; sA <= K; ++sA) r -= pow_rat(Rational(1, 2), sA) * li_conditional(sA, sB);
    out.push_back(r);
  }
  return out;
}

std::vector<Rational> li_not_sli_test_function_residuals(int K) {
  std::vector<Rational> out;
  for (int sB = 1; sB <= K; ++sB) {
    // sum_sA F_A(sA) F(sB | sA) g(sA); the normalizing F_B(sB) does not affect zero
    Rational r = li_marginal_A(0) * li_conditional(0, sB);
    for (int sA = 1; sA <= K; ++sA)
      r += li_marginal_A(sA) * li_conditional(sA, sB) * Rational(-1, 2) * pow_rat(Rational(3, 2), sA);
    out.push_back(r);
  }
  return out;
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

int li_not_sli_truncated_rank(int K) {
  std::vector<std::vector<Rational>> rows;
  for (int sA = 0; sA <= K; ++sA) {
    std::vector<Rational> row;
    for (int sB = 1; sB <= K + 1; ++sB) row.push_back(li_conditional(sA, sB));
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

io::DualInput dual_counterexample(bool valued) {
  io::DualInput in;
  auto& d = in.game;
  d.firmActsA = d.firmActsB = 2;
  d.market = Matrix(2, 2);
  d.market << 0, 1, 1, 0;
  d.statisticOf = {{"0", "1"}, {"1", "0"}};
  d.govActions = {"0", "1"};
  d.valuation = {{"0", 0.0}, {"1", valued ? 1.0 : 0.0}};
  d.typeDist = Matrix::Constant(2, 2, 0.25);
  d.stateOf = {{"1", "0"}, {"0", "1"}};
  // a = E[theta | m] = 1 - m
  in.gov.mixing = {{"0", {{"1", 1.0}}}, {"1", {{"0", 1.0}}}};
  return in;
}

io::DualInput dual_full_rank() {
  io::DualInput in;
  auto& d = in.game;
  d.firmActsA = d.firmActsB = 2;
  d.market = Matrix(2, 2);
  d.market << 0.5, 0.7, 0.3, 0.5;
  d.statisticOf = {{"even", "A ahead"}, {"B ahead", "even"}};
  d.govActions = {"none", "review"};
  d.valuation = {{"none", 0.0}, {"review", 0.1}};
  d.typeDist = Matrix(2, 2);
  d.typeDist << 0.4, 0.1, 0.1, 0.4;
  d.stateOf = {{"aligned", "split"}, {"split", "aligned"}};
  in.gov.mixing = {{"even", {{"none", 1.0}}},
                   {"A ahead", {{"review", 1.0}}},
                   {"B ahead", {{"none", 0.5}, {"review", 0.5}}}};
  return in;
}

namespace {

std::vector<CheckResult> run_example1() {
  FiniteBayesGame g = example1_game();
  StrategyProfile p = identity_profile(g);
  std::vector<CheckResult> out;
  out.push_back(expect("completeness A", false, check_completeness(g, Player::A).holds));
  out.push_back(expect("completeness B", false, check_completeness(g, Player::B).holds));
  out.push_back(expect("identifiable A", true, check_identifiable(p.stratA)));
  out.push_back(expect("identifiable B", true, check_identifiable(p.stratB)));
  out.push_back(expect("bne", true, verify_bne(g, p).holds));
  ExPostVerdict ep = verify_expost(g, p);
  out.push_back(expect("ex post", false, ep.holds));
  out.push_back(expect_near("value A", 0.5, ep.valueA, 1e-12));
  out.push_back(expect("interim constancy", true, verify_interim_constancy(g, p).holds));
  out.push_back(expect_near("minimax value", 0.5, solve_minimax_lp(g).value, 1e-9));
  BneEnumeration en = enumerate_pure_bne(g);
  // of the 16 pure profiles, only those where both players vary their action are BNE
  out.push_back(expect_near("pure BNE count", 4, static_cast<double>(en.equilibria.size()), 0));
  return out;
}

std::vector<CheckResult> run_example2() {
  FiniteBayesGame g = example2_game();
  StrategyProfile p = example2_profile();
  std::vector<CheckResult> out;
  out.push_back(expect("completeness A", true, check_completeness(g, Player::A).holds));
  out.push_back(expect("identifiable A", false, check_identifiable(p.stratA)));
  out.push_back(expect("identifiable B", false, check_identifiable(p.stratB)));
  out.push_back(expect("bne", true, verify_bne(g, p).holds));
  out.push_back(expect("ex post", false, verify_expost(g, p).holds));
  out.push_back(expect("interim constancy", true, verify_interim_constancy(g, p).holds));
  out.push_back(expect_near("value A", 0.5, ex_ante_payoff(g, p, Player::A), 1e-12));
  return out;
}

std::vector<CheckResult> run_example3() {
  Example3 ex = example3();
  std::vector<CheckResult> out;
  out.push_back(expect("completeness A", false, check_completeness(ex.game, Player::A).holds));
  out.push_back(expect("bne", true, verify_bne(ex.game, ex.profile).holds));
  ConstancyVerdict cv = verify_interim_constancy(ex.game, ex.profile);
  out.push_back(expect("interim constancy", true, cv.holds));
  out.push_back(expect_near("value A", 0.5, cv.valueA, 1e-12));
  BestResponse br = best_response(ex.game, ex.profile.stratB, Player::A);
  double worst = 1.0;
  for (double u : br.payoffByType) worst = std::min(worst, std::abs(u - 0.5));
  out.push_back(expect_near("best-response payoff deviation from 1/2", 0.0, worst, 1e-12));
  out.push_back(expect("single outcome", false,
                       verify_single_outcome(ex.game, ex.outcomes, ex.profile).holds));
  double w = example3_welfare(ex);
  double vA = example3_single_signal_welfare(ex, Player::A);
  double vB = example3_single_signal_welfare(ex, Player::B);
  out.push_back(expect_near("welfare", 1.0, w, 1e-12));
  out.push_back(expect_near("v*_A", 9.0 / 16.0, vA, 1e-12));
  out.push_back(expect_near("v*_B", 11.0 / 16.0, vB, 1e-12));
  out.push_back(expect("welfare > max(v*_A, v*_B)", true, w > std::max(vA, vB)));
  return out;
}

std::vector<CheckResult> run_convex_independence() {
  FiniteBayesGame g = convex_independence_game();
  StrategyProfile p = convex_independence_profile(g);
  std::vector<CheckResult> out;
  out.push_back(expect_near("rank", 3, numerical_rank(g.joint), 0));
  for (Player pl : {Player::A, Player::B}) {
    std::string n = name(pl);
    out.push_back(expect("convex independence " + n, true, check_convex_independence(g, pl)));
    out.push_back(expect("completeness " + n, false, check_completeness(g, pl).holds));
    out.push_back(expect("sli " + n, false, check_sli(g, pl).holds));
  }
  out.push_back(expect("identifiable", true, check_identifiable(p.stratA) && check_identifiable(p.stratB)));
  out.push_back(expect("bne", true, verify_bne(g, p).holds));
  out.push_back(expect("ex post", false, verify_expost(g, p).holds));
  double spread = 0.0;
  for (Player pl : {Player::A, Player::B}) {
    Matrix u = interim_payoffs(g, p.of(other(pl)), pl);
    spread = std::max(spread, (u.array() - (pl == Player::A ? -0.5 : 0.5)).abs().maxCoeff());
  }
  out.push_back(expect_near("interim payoffs at the value", 0.0, spread, 1e-12));
  out.push_back(expect_near("minimax value", -0.5, solve_minimax_lp(g).value, 1e-9));
  return out;
}

std::vector<CheckResult> run_li_not_sli() {
  std::vector<CheckResult> out;
  for (int K : {8, 16, 32}) {
    std::string k = std::to_string(K);
    bool zero = true;
    for (const auto& r : li_not_sli_residuals(K)) zero = zero && r == 0;
    out.push_back(expect("SLI-violating combination vanishes, K=" + k, true, zero));
    bool gZero = true;
    for (const auto& r : li_not_sli_test_function_residuals(K)) gZero = gZero && r == 0;
    out.push_back(expect("unbounded test function has zero conditional mean, K=" + k, true, gZero));
    out.push_back(expect_near("truncated family rank, K=" + k, K + 1, li_not_sli_truncated_rank(K), 0));
  }
  Rational mass = Rational(1, 2);
  for (int s = 1; s <= 60; ++s) mass += li_marginal_A(s);
  out.push_back(expect_near("F_A mass through 60", 1.0, beta::to_double(mass), 1e-12));
  return out;
}

std::vector<CheckResult> run_dual() {
  std::vector<CheckResult> out;
  for (bool valued : {false, true}) {
    io::DualInput in = dual_counterexample(valued);
    std::string tag = valued ? " (v(a)=a)" : " (v=0)";
    FiniteBayesGame g = dual::induce_firm_game(in.game, in.gov);
    StrategyProfile p = identity_profile(g);
    out.push_back(expect("completeness" + tag, false, check_completeness(g, Player::A).holds));
    out.push_back(expect("bne" + tag, true, verify_bne(g, p).holds));
    out.push_back(expect("identifiable" + tag, true, check_identifiable(p.stratA) && check_identifiable(p.stratB)));
    dual::SurplusVerdict sv = dual::verify_surplus_constancy(in.game, in.gov, p);
    out.push_back(expect("surplus constant" + tag, valued, sv.holds));
    if (valued) {
      out.push_back(expect_near("surplus constant value", 1.0, sv.constant, 1e-12));
    } else {
      out.push_back(expect_near("on-path surplus spread", 1.0, sv.spread, 1e-12));
    }
    auto post0 = dual::posterior_from_statistic(in.game, p, "0");
    auto post1 = dual::posterior_from_statistic(in.game, p, "1");
    out.push_back(expect_near("P(theta=1 | m=0)" + tag, 1.0, post0["1"], 1e-12));
    out.push_back(expect_near("P(theta=0 | m=1)" + tag, 1.0, post1["0"], 1e-12));
  }
  io::DualInput fr = dual_full_rank();
  FiniteBayesGame g = dual::induce_firm_game(fr.game, fr.gov);
  out.push_back(expect("full-rank variant completeness", true, check_completeness(g, Player::A).holds));
  BneEnumeration en = enumerate_pure_bne(g);
  bool allConst = !en.equilibria.empty();
  for (const auto& eq : en.equilibria) {
    StrategyProfile p = StrategyProfile::pure(g, eq.a, eq.b);
    allConst = allConst && dual::verify_surplus_constancy(fr.game, fr.gov, p, 1e-9).holds;
  }
  out.push_back(expect("full-rank variant surplus constant", true, allConst));
  return out;
}

std::vector<CheckResult> run_beta() {
  std::vector<CheckResult> out;
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                      Rational(3), Rational(7, 2)};
  bool midpoint = true, chain = true, bb = true, branch = true, linear = true;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      beta::BetaModel<Rational> m{a, b};
      midpoint = midpoint && beta::verify_midpoint(m, Rational(0)).maxResidual == 0;
      chain = chain && beta::overreaction_chain_holds(m);
      auto y = beta::overreaction_strategy(m);
      auto lf = beta::linear_form(m);
      linear = linear && beta::linear_posterior_antipander(lf, Rational(0)) == y.y0 &&
               beta::linear_posterior_antipander(lf, Rational(1)) == y.y1;
      if (m.equal_params()) continue;
      for (auto [sA, sB] : {std::pair{1, 0}, std::pair{0, 1}}) {
        auto o = beta::unbiased_outcome(m, sA, sB);
        bb = bb && o.sameSign && o.strictlyLarger;
        int winningSignal = b > a ? 1 : 0;
        beta::Winner expected = (sA == winningSignal) ? beta::Winner::A : beta::Winner::B;
        branch = branch && o.winner == expected;
      }
    }
  }
  out.push_back(expect("midpoint identity exact", true, midpoint));
  out.push_back(expect("overreaction ordering", true, chain));
  out.push_back(expect("same-direction, larger shift", true, bb));
  out.push_back(expect("winner follows alpha vs beta", true, branch));
  out.push_back(expect("linear-posterior form reproduces overreaction", true, linear));
  beta::BetaModel<Rational> m21{Rational(2), Rational(1)};
  auto y = beta::overreaction_strategy(m21);
  out.push_back(expect_label("y(0), y(1) at alpha=2, beta=1", "2/5, 4/5",
                             beta::to_string(y.y0) + ", " + beta::to_string(y.y1)));
  return out;
}

std::vector<CheckResult> run_mixed_motives() {
  std::vector<CheckResult> out;
  auto m = normal::NormalModel::symmetric(1.0, 1.0);
  for (double b : {-0.5, 0.0, 0.2, 1.0}) {
    auto r = normal::verify_mixed_motives_dominance(m, b, 10000, 20240601);
    out.push_back(expect("winner dominates, b=" + fmt(b), true, r.holds));
  }
  auto win = normal::make_strategy(m, {normal::StrategyKind::MixedMotivesWinner, Player::A, 0.2});
  auto lose = normal::make_strategy(m, {normal::StrategyKind::MixedMotivesLoser, Player::B, 0.2});
  out.push_back(expect_near("winner platform at s=1, b=0.2", 0.7, win(1.0), 1e-12));
  out.push_back(expect_near("loser platform at s=1, b=0.2", 0.6, lose(1.0), 1e-12));
  return out;
}

std::vector<CheckResult> run_full_rank() {
  FiniteBayesGame g = full_rank_matching_game();
  std::vector<CheckResult> out;
  out.push_back(expect("completeness A", true, check_completeness(g, Player::A).holds));
  out.push_back(expect("convex independence A", true, check_convex_independence(g, Player::A)));
  BneEnumeration en = enumerate_pure_bne(g);
  bool all = true;
  for (const auto& eq : en.equilibria) all = all && eq.certificate.expost.holds;
  out.push_back(expect("every pure BNE is ex post", true, all));
  return out;
}

}  // namespace

const std::vector<FixtureRecord>& registry() {
  static const std::vector<FixtureRecord> records = {
      {"example1-matching-pennies", "independent types, truthful play is a non-ex-post BNE", run_example1},
      {"example2-complete-info-mix", "singleton types, uniform mixing is not identifiable", run_example2},
      {"example3-downsian-4x4", "voter table equilibrium beats single-signal welfare", run_example3},
      {"appendixB-convex-independence", "convexly independent but rank-deficient signals", run_convex_independence},
      {"appendixB-li-not-sli", "countable family, linearly independent without SLI", run_li_not_sli},
      {"dual-counterexample", "firm competition with and without offsetting government", run_dual},
      {"beta-bernoulli", "exact overreaction identities on a parameter grid", run_beta},
      {"mixed-motives", "ideological winner beats the loser at every signal pair", run_mixed_motives},
      {"full-rank-matching", "full-rank types force ex-post pure equilibria", run_full_rank},
  };
  return records;
}

const FixtureRecord* find(std::string_view name) {
  for (const auto& r : registry())
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace expost::fixtures
