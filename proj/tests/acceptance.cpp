// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-expost-cli> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "expost/beta.hpp"
#include "expost/fixtures.hpp"
#include "expost/montecarlo.hpp"
#include "expost/solver.hpp"
#include "expost/statistics.hpp"
#include "expost/truncated_normal.hpp"
#include "oracles.hpp"

using namespace expost;
using namespace expost::normal;
namespace fx = expost::fixtures;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kN = 1'000'000;

std::string cliPath;
fs::path scratch;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-checks; the first failures are kept in the detail line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (++failures_ <= 3) failed_ += (failed_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome result() const {
    if (pass_) return {true, notes_};
    std::string d = "failed: " + failed_;
    if (failures_ > 3) d += " (+" + std::to_string(failures_ - 3) + " more)";
    return {false, d};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string failed_;
  std::string notes_;
};

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

MonteCarloConfig mc(std::uint64_t seed = kSeed, std::size_t n = kN) { return {seed, n, 0}; }

PlatformStrategy strat(const NormalModel& m, StrategyKind k, Player p = Player::A) {
  return make_strategy(m, {k, p});
}

// |mean - target| <= 3 se, with z in the notes.
void within3(Checks& c, const std::string& what, const WelfareEstimate& e, double target) {
  double z = (e.mean - target) / e.stdError;
  c.note(what + " z=" + fmt(z, 3));
  c.expect(std::abs(z) <= 3.0, what + " mean " + fmt(e.mean) + " vs " + fmt(target));
}

Outcome c01_antipander_welfare() {
  Checks c;
  VoterRule coin{VoterKind::FairCoin};
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 3.0}}) {
    auto m = NormalModel::symmetric(a, b);
    auto anti = strat(m, StrategyKind::AntiPander);
    auto t0 = std::chrono::steady_clock::now();
    auto e = mc_welfare(m, anti, anti, coin, mc());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double target = -(a + 4 * b) / ((a + 2 * b) * (a + 2 * b));
    within3(c, "(" + fmt(a) + "," + fmt(b) + ")", e, target);
    c.expect(secs < 30.0, "runtime " + fmt(secs) + " s");
    if (a == 1.0 && b == 1.0) c.note("t=" + fmt(secs, 3) + "s");
  }
  return c.result();
}

Outcome c02_welfare_ordering() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  auto cf = closed_form_welfares(m);
  c.expect(std::abs(cf.fullPander + 1.0) <= 1e-15, "closed form full pander");
  c.expect(std::abs(cf.antiPander + 5.0 / 9.0) <= 1e-15, "closed form anti pander");
  c.expect(std::abs(cf.delegation + 0.5) <= 1e-15, "closed form delegation");
  VoterRule coin{VoterKind::FairCoin};
  auto full = strat(m, StrategyKind::FullPander);
  auto anti = strat(m, StrategyKind::AntiPander);
  auto unb = strat(m, StrategyKind::Unbiased);
  auto loser = strat(m, StrategyKind::DelegationLoser, Player::B);
  VoterRule always{VoterKind::AlwaysElect, TieBreak::FairCoin, Player::A};
  auto eF = mc_welfare(m, full, full, coin, mc());
  auto eA = mc_welfare(m, anti, anti, coin, mc());
  auto eD = mc_welfare(m, unb, loser, always, mc());
  within3(c, "full", eF, -1.0);
  within3(c, "anti", eA, -5.0 / 9.0);
  within3(c, "deleg", eD, -0.5);
  c.expect(eF.mean < eA.mean && eA.mean < eD.mean, "MC ordering");
  return c.result();
}

Outcome c03_benefit_of_pandering() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  auto ben = strat(m, StrategyKind::Benevolent);
  auto unb = strat(m, StrategyKind::Unbiased);
  Profile benevolent{ben, ben, {VoterKind::MoreExtreme}};
  Profile unbiased{unb, unb, {VoterKind::BestResponseGiven, TieBreak::FairCoin, Player::A, unb, unb}};
  auto cmp = mc_compare(m, benevolent, unbiased, mc());
  double zU = cmp.diff / cmp.diffStdError;
  double delegation = -1.0 / (m.alpha + m.betaA);
  double zD = (cmp.first.mean - delegation) / cmp.first.stdError;
  c.note("benevolent=" + fmt(cmp.first.mean) + " unbiased=" + fmt(cmp.second.mean));
  c.note("z(vs unbiased)=" + fmt(zU, 4) + " z(vs delegation)=" + fmt(zD, 4));
  c.expect(zU >= 3.0, "benevolent - unbiased z=" + fmt(zU));
  c.expect(zD >= 3.0, "benevolent - delegation z=" + fmt(zD));
  return c.result();
}

Outcome c04_decomposition() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  VoterRule extreme{VoterKind::MoreExtreme};
  auto ben = strat(m, StrategyKind::Benevolent);
  auto d = mc_decomposition(m, ben, ben, extreme, mc());
  c.expect(std::abs(d.LE) < 1e-10, "benevolent |L_E| = " + fmt(d.LE));
  c.expect(std::abs(d.reassemblyGap) <= 3 * d.stdErrorGap,
           "reassembly gap " + fmt(d.reassemblyGap) + " se " + fmt(d.stdErrorGap));
  c.note("benevolent L_E=" + fmt(d.LE) + " gap/se=" + fmt(d.reassemblyGap / d.stdErrorGap, 3));
  auto unb = strat(m, StrategyKind::Unbiased);
  auto u = mc_decomposition(m, unb, unb, extreme, mc());
  c.expect(u.LE > 3 * u.stdErrorLE, "unbiased L_E " + fmt(u.LE) + " se " + fmt(u.stdErrorLE));
  c.note("unbiased L_E=" + fmt(u.LE) + " z=" + fmt(u.LE / u.stdErrorLE, 4));
  return c.result();
}

Outcome c05_indifference() {
  Checks c;
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 0.5}}) {
    auto r = verify_antipander_indifference(NormalModel::symmetric(a, b), 10'000, kSeed);
    c.expect(r.holds && r.maxResidual <= 1e-10, "max residual " + fmt(r.maxResidual));
    c.note("(" + fmt(a) + "," + fmt(b) + ") checks=" + std::to_string(r.checks) +
           " max residual=" + fmt(r.maxResidual, 3));
  }
  return c.result();
}

struct RandomSuite {
  std::vector<FiniteBayesGame> games;
  std::vector<BneEnumeration> enumerations;
};

// Types 2-4 and actions 2-4 per player, small-integer payoffs.
RandomSuite random_suite(bool fullRank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomSuite s;
  for (int k = 0; k < 100; ++k) {
    int nA = oracle::uniform_int(rng, 2, 4);
    int nB = fullRank ? nA : oracle::uniform_int(rng, 2, 4);
    Matrix joint = fullRank ? oracle::random_full_rank_joint(rng, nA)
                            : oracle::random_independent_joint(rng, nA, nB);
    auto g = oracle::make_game(joint, oracle::random_payoffs(rng, oracle::uniform_int(rng, 2, 4),
                                                             oracle::uniform_int(rng, 2, 4)));
    s.enumerations.push_back(enumerate_pure_bne(g));
    s.games.push_back(std::move(g));
  }
  return s;
}

const RandomSuite& full_rank_suite() {
  static const RandomSuite s = random_suite(true, 1001);
  return s;
}

const RandomSuite& independent_suite() {
  static const RandomSuite s = random_suite(false, 2002);
  return s;
}

// Enumeration must match the brute-force oracle profile for profile.
void cross_check_enumeration(Checks& c, const RandomSuite& s) {
  for (std::size_t k = 0; k < s.games.size(); ++k) {
    auto ref = oracle::pure_bne(s.games[k]);
    const auto& eq = s.enumerations[k].equilibria;
    bool same = ref.size() == eq.size();
    for (std::size_t i = 0; same && i < ref.size(); ++i)
      same = ref[i].a == eq[i].a.actionOf && ref[i].b == eq[i].b.actionOf;
    c.expect(same, "enumeration differs from oracle in game " + std::to_string(k));
  }
}

Outcome c06_expost_suite() {
  Checks c;
  const auto& full = full_rank_suite();
  cross_check_enumeration(c, full);
  int nBne = 0, gamesWithBne = 0;
  for (std::size_t k = 0; k < full.games.size(); ++k) {
    const auto& g = full.games[k];
    c.expect(analyze_statistics(g).completenessA.holds, "joint not full rank");
    if (!full.enumerations[k].equilibria.empty()) ++gamesWithBne;
    for (const auto& eq : full.enumerations[k].equilibria) {
      ++nBne;
      auto v = verify_expost(g, StrategyProfile::pure(g, eq.a, eq.b), 1e-9);
      c.expect(v.holds, "full-rank BNE not ex post in game " + std::to_string(k));
      c.expect(oracle::pure_is_expost(g, {eq.a.actionOf, eq.b.actionOf}), "oracle disagrees");
    }
  }
  c.expect(nBne > 0, "no BNE in the full-rank suite");
  c.note("full rank: " + std::to_string(nBne) + " BNE in " + std::to_string(gamesWithBne) +
         " games, all ex post");

  const auto& ind = independent_suite();
  cross_check_enumeration(c, ind);
  int nonExPost = 0, gamesWithNonExPost = 0;
  for (std::size_t k = 0; k < ind.games.size(); ++k) {
    bool any = false;
    for (const auto& eq : ind.enumerations[k].equilibria) {
      bool ep = eq.certificate.expost.holds;
      c.expect(ep == oracle::pure_is_expost(ind.games[k], {eq.a.actionOf, eq.b.actionOf}),
               "ex-post flag disagrees with oracle");
      if (!ep) {
        ++nonExPost;
        any = true;
      }
    }
    if (any) ++gamesWithNonExPost;
  }
  c.expect(nonExPost > 0, "no non-ex-post BNE among independent-type games");
  c.note("independent: " + std::to_string(nonExPost) + " non-ex-post BNE in " +
         std::to_string(gamesWithNonExPost) + " games");

  auto g1 = fx::example1_game();
  auto e1 = enumerate_pure_bne(g1), e1b = enumerate_pure_bne(g1);
  bool allFail = !e1.equilibria.empty();
  for (const auto& eq : e1.equilibria) allFail = allFail && !eq.certificate.expost.holds;
  c.expect(allFail && e1.equilibria.size() == e1b.equilibria.size(),
           "Example 1 does not reproduce a non-ex-post BNE");
  auto w = verify_expost(g1, fx::identity_profile(g1));
  c.expect(!w.holds && w.witness && w.witness->actionA == 0 && w.witness->actionB == 1,
           "Example 1 witness");
  c.note("Example 1: " + std::to_string(e1.equilibria.size()) + " BNE, none ex post");
  return c.result();
}

Outcome c07_interim_constancy() {
  Checks c;
  int checked = 0;
  for (const RandomSuite* s : {&full_rank_suite(), &independent_suite()}) {
    for (std::size_t k = 0; k < s->games.size(); ++k) {
      const auto& g = s->games[k];
      for (const auto& eq : s->enumerations[k].equilibria) {
        ++checked;
        auto v = verify_interim_constancy(g, StrategyProfile::pure(g, eq.a, eq.b), 1e-9);
        c.expect(v.holds, "constancy fails, deviation " + fmt(v.worstDeviation));
      }
    }
  }
  auto v2 = verify_interim_constancy(fx::example2_game(), fx::example2_profile(), 1e-9);
  c.expect(v2.holds, "Example 2 mixed profile");
  c.note(std::to_string(checked) + " enumerated BNE + Example 2 mix");
  return c.result();
}

// Nonnegative U (n x r) V (r x m) gives rank at most r.
Matrix random_family(std::mt19937_64& rng, int nA, int nB, bool lowRank) {
  std::uniform_int_distribution<int> w(0, 6);
  Matrix j;
  if (lowRank) {
    int r = oracle::uniform_int(rng, 1, std::min(nA, nB) - 1);
    Matrix U(nA, r), V(r, nB);
    for (int i = 0; i < U.size(); ++i) U.data()[i] = 1 + w(rng);
    for (int i = 0; i < V.size(); ++i) V.data()[i] = 1 + w(rng);
    j = U * V;
  } else {
    j = Matrix(nA, nB);
    for (int i = 0; i < j.size(); ++i) j.data()[i] = w(rng);
    for (int a = 0; a < nA; ++a) j(a, a % nB) += 1;  // keep every row and column nonempty
    for (int b = 0; b < nB; ++b) j(b % nA, b) += 1;
  }
  return j / j.sum();
}

Outcome c08_completeness_equivalence() {
  Checks c;
  std::mt19937_64 rng(3003);
  int agree = 0, complete = 0;
  for (int k = 0; k < 200; ++k) {
    int nA = oracle::uniform_int(rng, 2, 5), nB = oracle::uniform_int(rng, 2, 5);
    auto g = oracle::make_game(random_family(rng, nA, nB, k % 2 == 1), Matrix::Identity(2, 2));
    int luRank = static_cast<int>(Eigen::FullPivLU<Matrix>(g.joint).rank());
    bool ok = true;
    for (Player p : {Player::A, Player::B}) {
      bool comp = check_completeness(g, p).holds;
      ok = ok && comp == check_sli(g, other(p)).holds;
      ok = ok && comp == (luRank == g.types(other(p)));
      complete += comp;
    }
    agree += ok;
    c.expect(ok, "family " + std::to_string(k) + " disagrees");
  }
  c.note(std::to_string(agree) + "/200 agree (" + std::to_string(complete) + " complete sides)");

  auto g = fx::convex_independence_game();
  auto r = analyze_statistics(g);
  c.expect(r.rankJoint == 3, "4x4 rank " + std::to_string(r.rankJoint));
  c.expect(r.convexIndepA && r.convexIndepB, "4x4 convex independence");
  c.expect(!r.completenessA.holds && !r.completenessB.holds, "4x4 completeness");
  auto prof = fx::convex_independence_profile(g);
  c.expect(verify_bne(g, prof).holds, "4x4 profile not a BNE");
  c.expect(!verify_expost(g, prof).holds, "4x4 profile unexpectedly ex post");
  c.note("4x4: rank 3, convex independent, BNE not ex post");
  return c.result();
}

Outcome c09_example3() {
  Checks c;
  auto ex = fx::example3();
  auto cert = certify(ex.game, ex.profile);
  c.expect(cert.bne.holds, "not a BNE");
  c.expect(std::abs(cert.valueA - 0.5) <= 1e-12, "value " + fmt(cert.valueA));
  double w = fx::example3_welfare(ex);
  double vA = fx::example3_single_signal_welfare(ex, Player::A);
  double vB = fx::example3_single_signal_welfare(ex, Player::B);
  c.expect(w == 1.0, "welfare " + fmt(w));
  c.expect(vA == 9.0 / 16.0, "v*_A " + fmt(vA));
  c.expect(vB == 11.0 / 16.0, "v*_B " + fmt(vB));
  c.expect(w > std::max(vA, vB), "welfare does not exceed single-signal welfare");
  c.note("value=" + fmt(cert.valueA) + " welfare=" + fmt(w) + " v*_A=" + fmt(vA) +
         " v*_B=" + fmt(vB));
  return c.result();
}

Outcome c10_beta_bernoulli() {
  Checks c;
  using beta::Rational;
  std::mt19937_64 rng(4004);
  int pairs = 0;
  double worstFloat = 0;
  for (int k = 0; k < 100; ++k) {
    Rational a(oracle::uniform_int(rng, 1, 40), oracle::uniform_int(rng, 1, 8));
    Rational b(oracle::uniform_int(rng, 1, 40), oracle::uniform_int(rng, 1, 8));
    beta::BetaModel<Rational> m{a, b};
    auto exact = beta::verify_midpoint(m, Rational(0));
    c.expect(exact.holds && exact.maxResidual == 0, "rational midpoint residual");
    beta::BetaModel<double> md{beta::to_double(a), beta::to_double(b)};
    auto fl = beta::verify_midpoint(md, 1e-12);
    worstFloat = std::max(worstFloat, fl.maxResidual);
    c.expect(fl.holds, "float midpoint residual " + fmt(fl.maxResidual));
    c.expect(beta::overreaction_chain_holds(m), "overreaction chain");
    if (a == b) continue;
    for (auto [sA, sB] : {std::pair{0, 1}, {1, 0}}) {
      auto o = beta::unbiased_outcome(m, sA, sB);
      ++pairs;
      c.expect(o.sameSign, "sign clause");
      c.expect(o.strictlyLarger, "magnitude clause");
    }
  }
  c.note("midpoint exact on 100 models, float max " + fmt(worstFloat, 3) + "; " +
         std::to_string(pairs) + " unequal pairs");

  const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                      Rational(5, 2), Rational(3), Rational(7, 2), Rational(4)};
  int models = 0;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      if (a == b || models == 50) continue;
      ++models;
      beta::BetaModel<Rational> m{a, b};
      // the candidate holding the ex-ante less likely signal wins
      auto expectOneZero = b > a ? beta::Winner::A : beta::Winner::B;
      auto expectZeroOne = b > a ? beta::Winner::B : beta::Winner::A;
      c.expect(beta::unbiased_outcome(m, 1, 0).winner == expectOneZero, "winner (1,0)");
      c.expect(beta::unbiased_outcome(m, 0, 1).winner == expectZeroOne, "winner (0,1)");
      c.expect(beta::unbiased_outcome(m, 1, 1).winner == beta::Winner::Tie, "tie (1,1)");
    }
  }
  c.note("winner rule on " + std::to_string(models) + " models");
  return c.result();
}

Outcome c11_truncated_normal() {
  Checks c;
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> mus = {-2.0, -0.5, 0.0, 0.5, 3.0};
  const std::vector<double> sigmas = {0.2, 1.0, std::sqrt(1.5), 4.0};
  const std::vector<std::pair<double, double>> intervals = {
      {-1, 1},      {0, 2},         {-inf, 0.3},       {1.5, inf},          {4, 4.5},
      {-6, -5.9},   {0.7, 0.7001},  {2.0, 2.0 + 1e-7}, {-0.3, -0.3 + 1e-10}, {-inf, inf}};
  int points = 0;
  double worst = 0;
  for (double mu : mus)
    for (double sigma : sigmas)
      for (auto [lo, hi] : intervals) {
        ++points;
        double ours = truncated_normal_mean(mu, sigma, lo, hi);
        double ref = oracle::truncated_mean_quadrature(mu, sigma, lo, hi);
        double d = std::abs(ours - ref);
        worst = std::max(worst, d);
        c.expect(d <= 1e-8, "mu=" + fmt(mu) + " sigma=" + fmt(sigma) + " [" + fmt(lo) + "," +
                                fmt(hi) + "] diff " + fmt(d));
      }
  double ex = truncated_normal_mean(0.5, std::sqrt(1.5), -1, 1);
  double exRef = oracle::truncated_mean_quadrature(0.5, std::sqrt(1.5), -1, 1);
  c.expect(std::abs(ex - exRef) <= 1e-8, "benevolent example vs oracle");
  c.expect(std::abs(ex - 0.1009) < 5e-5, "benevolent example value " + fmt(ex));
  c.note(std::to_string(points) + " points, max diff " + fmt(worst, 3) + "; example=" + fmt(ex, 6));
  return c.result();
}

Outcome c12_deviation() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  for (double sTrue : {0.0, 0.5, -1.2, 2.0}) {
    double prev = -1;
    for (double s = 0.0; s <= 3.0 + 1e-12; s += 0.25) {
      double p = mimic_win_probability(m, sTrue, s);
      c.expect(p > prev, "not increasing at sTrue=" + fmt(sTrue) + " s=" + fmt(s));
      prev = p;
    }
  }
  int points = 0;
  double worstZ = 0;
  for (double sTrue : {0.0, 0.8, -1.5, 2.5})
    for (double s : {0.25, 0.75, 1.5, -2.0, 3.0}) {
      ++points;
      double cf = mimic_win_probability(m, sTrue, s);
      auto e = mc_mimic_win_probability(m, sTrue, s, mc(kSeed + points));
      double z = (e.mean - cf) / e.stdError;
      worstZ = std::max(worstZ, std::abs(z));
      c.expect(std::abs(z) <= 3.0, "sTrue=" + fmt(sTrue) + " s=" + fmt(s) + " z=" + fmt(z));
    }
  c.note("monotone on 4 grids; " + std::to_string(points) + " MC points, max |z|=" +
         fmt(worstZ, 3));
  return c.result();
}

Outcome c13_dual_spheres() {
  Checks c;
  {
    auto in = fx::dual_counterexample(false);
    auto g = dual::induce_firm_game(in.game, in.gov);
    auto prof = fx::identity_profile(g);
    auto cert = certify(g, prof);
    c.expect(cert.bne.holds, "v=0: not a BNE");
    c.expect(cert.identifiableA && cert.identifiableB, "v=0: not identifiable");
    c.expect(!dual::verify_surplus_constancy(in.game, in.gov, prof).holds, "v=0: constant");
  }
  {
    auto in = fx::dual_counterexample(true);
    auto g = dual::induce_firm_game(in.game, in.gov);
    auto prof = fx::identity_profile(g);
    auto v = dual::verify_surplus_constancy(in.game, in.gov, prof);
    c.expect(v.holds && std::abs(v.constant - 1.0) <= 1e-12, "v=a: constancy with c=1");
    for (const std::string label : {"0", "1"}) {
      auto post = dual::posterior_from_statistic(in.game, prof, label);
      bool degenerate = false;
      for (const auto& [state, pr] : post) degenerate = degenerate || std::abs(pr - 1.0) <= 1e-12;
      c.expect(degenerate, "v=a: posterior at " + label + " not degenerate");
    }
  }
  {
    auto in = fx::dual_full_rank();
    auto g = dual::induce_firm_game(in.game, in.gov);
    c.expect(analyze_statistics(g).completenessA.holds, "full-rank variant is not complete");
    auto e = enumerate_pure_bne(g);
    c.expect(!e.equilibria.empty(), "full-rank variant has no pure BNE");
    for (const auto& eq : e.equilibria)
      c.expect(dual::verify_surplus_constancy(in.game, in.gov, StrategyProfile::pure(g, eq.a, eq.b),
                                              1e-9)
                   .holds,
               "full-rank surplus not constant");
    c.note("v=0 constancy false; v=a constant c=1, degenerate posterior; full rank " +
           std::to_string(e.equilibria.size()) + " BNE constant");
  }
  return c.result();
}

Outcome c14_mixed_motives() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  for (double b : {-0.5, 0.0, 0.2, 1.0}) {
    auto r = verify_mixed_motives_dominance(m, b, 10'000, kSeed);
    c.expect(r.holds && r.failures == 0 && r.checks == 10'000,
             "b=" + fmt(b) + " failures " + std::to_string(r.failures));
    c.note("b=" + fmt(b) + " " + std::to_string(r.checks - r.failures) + "/" +
           std::to_string(r.checks));
  }
  return c.result();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs the CLI with stdout captured to `out`; returns the exit status.
int run_cli(const std::string& args, const fs::path& out) {
  std::string cmd = "\"" + cliPath + "\" " + args + " > \"" + out.string() + "\" 2> /dev/null";
  return std::system(cmd.c_str());
}

Outcome c15_determinism() {
  Checks c;
  auto m = NormalModel::symmetric(1.0, 1.0);
  auto ben = strat(m, StrategyKind::Benevolent);
  VoterRule extreme{VoterKind::MoreExtreme};
  auto e1 = mc_welfare(m, ben, ben, extreme, {kSeed, 300'000, 1});
  auto e8 = mc_welfare(m, ben, ben, extreme, {kSeed, 300'000, 8});
  c.expect(e1.mean == e8.mean && e1.stdError == e8.stdError, "library welfare differs by workers");
  auto d1 = mc_decomposition(m, ben, ben, extreme, {kSeed, 300'000, 1});
  auto d8 = mc_decomposition(m, ben, ben, extreme, {kSeed, 300'000, 8});
  c.expect(d1.LV == d8.LV && d1.total == d8.total && d1.stdErrorGap == d8.stdErrorGap,
           "library decomposition differs by workers");

  if (cliPath.empty()) {
    c.expect(false, "no CLI path given");
    return c.result();
  }
  fs::create_directories(scratch);
  const std::vector<std::string> commands = {
      "election welfare --alpha 1 --beta 1 --profile antipander --rule coin --n 200000",
      "election welfare --alpha 2 --beta 1 --profile benevolent --n 200000",
      "election sweep --alphas 1,2 --betas 1,3 --profiles antipander,delegation --n 50000",
      "election deviation --alpha 1 --beta 1 --s-true 0.5 --grid 0:2:0.5 --mc-n 50000",
      "election decompose --alpha 1 --beta 1 --profile unbiased --rule more-extreme --n 200000",
      "election indifference --alpha 1 --beta 1 --checks 2000",
      "election mixed-motives --alpha 1 --beta 1 --b 0.2 --checks 2000",
  };
  int idx = 0;
  for (const auto& cmd : commands) {
    ++idx;
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "4", "1"}) {
      auto path = scratch / ("run" + std::to_string(idx) + "_w" + workers + ".out");
      int rc = run_cli("--seed 11 --workers " + std::string(workers) + " " + cmd, path);
      c.expect(rc == 0, "exit status " + std::to_string(rc) + ": " + cmd);
      outputs.push_back(slurp(path));
    }
    c.expect(!outputs[0].empty(), "empty output: " + cmd);
    c.expect(outputs[0] == outputs[1] && outputs[0] == outputs[2], "output differs: " + cmd);
  }
  c.note(std::to_string(commands.size()) + " CLI commands byte-identical across reruns and workers");
  return c.result();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cliPath = argv[1];
  scratch = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "expost_acceptance";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"anti-pandering welfare", c01_antipander_welfare},
      {"welfare ordering", c02_welfare_ordering},
      {"benefit of pandering", c03_benefit_of_pandering},
      {"welfare decomposition", c04_decomposition},
      {"anti-pandering indifference", c05_indifference},
      {"full rank implies ex post", c06_expost_suite},
      {"interim constancy", c07_interim_constancy},
      {"completeness equals SLI", c08_completeness_equivalence},
      {"Example 3 welfare", c09_example3},
      {"Beta-Bernoulli identities", c10_beta_bernoulli},
      {"truncated normal mean", c11_truncated_normal},
      {"deviation analysis", c12_deviation},
      {"dual spheres", c13_dual_spheres},
      {"mixed motives dominance", c14_mixed_motives},
      {"determinism", c15_determinism},
  };

  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s  %2d %-28s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", n, name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
