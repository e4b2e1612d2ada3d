// Command-line front end for the expost library.
#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expost/beta.hpp"
#include "expost/fixtures.hpp"
#include "expost/io.hpp"
#include "expost/montecarlo.hpp"

using namespace expost;
using io::Json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Globals {
  double tol = kDefaultTolerance;
  double rankTol = kDefaultRankTolerance;
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "json";
  std::size_t cap = kDefaultCellCap;
  unsigned workers = 0;
  std::string commandLine;
};

Globals g;

void emit(const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + g.out);
  f << text;
}

void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

std::string num(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---- games -------------------------------------------------------------

int cmd_check(const std::string& path) {
  FiniteBayesGame game = io::game_from_json(io::read_json_file(path));
  Json out = {{"command", "check"}, {"game", path}};
  out["statistics"] = io::to_json(analyze_statistics(game, g.rankTol));
  emit_json(out);
  return 0;
}

int cmd_solve(const std::string& path) {
  FiniteBayesGame game = io::game_from_json(io::read_json_file(path));
  MinimaxSolution sol = solve_minimax_lp(game, {g.cap});
  Json out = {{"command", "solve"}, {"game", path}};
  out["solution"] = io::to_json(sol);
  out["value_B"] = game.sumConst - sol.value;
  out["security_A"] = security_level(game, sol.behavioralA);
  out["security_B"] = security_level(game, sol.behavioralB);
  emit_json(out);
  return 0;
}

int cmd_enumerate(const std::string& path) {
  FiniteBayesGame game = io::game_from_json(io::read_json_file(path));
  BneEnumeration en = enumerate_pure_bne(game, g.tol, {g.cap});
  Json out = {{"command", "enumerate"}, {"game", path}, {"tolerance", g.tol}};
  out["enumeration"] = io::to_json(en);
  emit_json(out);
  return 0;
}

int cmd_verify(const std::string& gamePath, const std::string& stratPath) {
  Json gj = io::read_json_file(gamePath);
  FiniteBayesGame game = io::game_from_json(gj);
  StrategyProfile profile = io::profile_from_json(io::read_json_file(stratPath), game);
  EquilibriumCertificate cert = certify(game, profile, g.tol, g.rankTol);
  Json out = {{"command", "verify"}, {"game", gamePath}, {"strategy", stratPath}};
  out["certificate"] = io::to_json(cert);
  if (auto outcomes = io::outcomes_from_json(gj)) {
    validate_outcome_map(game, *outcomes, g.tol);
    if (cert.bne.holds)
      out["single_outcome"] = io::to_json(verify_single_outcome(game, *outcomes, profile, g.tol));
  }
  emit_json(out);
  return cert.bne.holds ? 0 : kExitViolation;
}

// ---- election ----------------------------------------------------------

struct ElectionArgs {
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> betaA, betaB;
  std::string profile = "antipander";
  std::string rule;  // empty: the profile's default
  std::string tie = "coin";
  std::size_t n = 1'000'000;
  double b = 0.0;
  double offset = 0.0;

  normal::NormalModel model() const {
    normal::NormalModel m{alpha, betaA.value_or(beta), betaB.value_or(beta)};
    normal::validate_model(m);
    return m;
  }
};

std::string default_rule(const std::string& profile) {
  if (profile == "unbiased" || profile == "offset") return "best-response";
  if (profile == "benevolent") return "more-extreme";
  if (profile == "delegation" || profile == "mixed-motives") return "always-a";
  return "coin";
}

normal::Profile build_profile(const normal::NormalModel& m, const std::string& profile,
                              const std::string& ruleName, const std::string& tie, double b,
                              double offset) {
  using normal::StrategyKind;
  auto mk = [&](StrategyKind k, Player p, int sign = 1) {
    return normal::make_strategy(m, {k, p, b, offset, sign});
  };
  std::optional<normal::PlatformStrategy> sA, sB;
  if (profile == "antipander") {
    sA = mk(StrategyKind::AntiPander, Player::A);
    sB = mk(StrategyKind::AntiPander, Player::B);
  } else if (profile == "fullpander") {
    sA = mk(StrategyKind::FullPander, Player::A);
    sB = mk(StrategyKind::FullPander, Player::B);
  } else if (profile == "unbiased") {
    sA = mk(StrategyKind::Unbiased, Player::A);
    sB = mk(StrategyKind::Unbiased, Player::B);
  } else if (profile == "benevolent") {
    sA = mk(StrategyKind::Benevolent, Player::A);
    sB = mk(StrategyKind::Benevolent, Player::B);
  } else if (profile == "delegation") {
    sA = mk(StrategyKind::Unbiased, Player::A);
    sB = mk(StrategyKind::DelegationLoser, Player::B);
  } else if (profile == "mixed-motives") {
    sA = mk(StrategyKind::MixedMotivesWinner, Player::A);
    sB = mk(StrategyKind::MixedMotivesLoser, Player::B);
  } else if (profile == "offset") {
    sA = mk(StrategyKind::AffineWithOffset, Player::A, 1);
    sB = mk(StrategyKind::AffineWithOffset, Player::B, -1);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown profile '" + profile + "'");
  }
  normal::VoterRule rule;
  std::string r = ruleName.empty() ? default_rule(profile) : ruleName;
  if (r == "coin") {
    rule.kind = normal::VoterKind::FairCoin;
  } else if (r == "best-response") {
    rule.kind = normal::VoterKind::BestResponseGiven;
    rule.conjectureA = sA;
    rule.conjectureB = sB;
  } else if (r == "more-extreme") {
    rule.kind = normal::VoterKind::MoreExtreme;
  } else if (r == "always-a" || r == "always-b") {
    rule.kind = normal::VoterKind::AlwaysElect;
    rule.elect = r == "always-a" ? Player::A : Player::B;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown rule '" + r + "'");
  }
  if (tie == "coin") rule.tieBreak = normal::TieBreak::FairCoin;
  else if (tie == "a") rule.tieBreak = normal::TieBreak::FixedA;
  else if (tie == "b") rule.tieBreak = normal::TieBreak::FixedB;
  else throw Error(ErrorCode::InvalidInput, "unknown tie-break '" + tie + "'");
  normal::validate_rule(rule);
  return {*sA, *sB, rule};
}

// Closed-form welfare of the named profile, when one is known.
std::optional<double> closed_form_for(const normal::NormalModel& m, const std::string& profile,
                                      const std::string& rule) {
  if (!m.is_symmetric()) return std::nullopt;
  auto cf = normal::closed_form_welfares(m);
  if (profile == "antipander") return cf.antiPander;
  if (profile == "fullpander") return cf.fullPander;
  if (profile == "delegation" && rule == "always-a") return cf.delegation;
  return std::nullopt;
}

struct WelfareRow {
  normal::WelfareEstimate est;
  std::optional<double> closedForm;
  std::string rule;
};

WelfareRow run_welfare(const ElectionArgs& a, const normal::NormalModel& m) {
  std::string rule = a.rule.empty() ? default_rule(a.profile) : a.rule;
  normal::Profile p = build_profile(m, a.profile, rule, a.tie, a.b, a.offset);
  normal::MonteCarloConfig cfg{g.seed, a.n, g.workers};
  return {normal::mc_welfare(m, p.stratA, p.stratB, p.rule, cfg), closed_form_for(m, a.profile, rule), rule};
}

Json model_json(const normal::NormalModel& m) {
  return {{"alpha", m.alpha}, {"beta_A", m.betaA}, {"beta_B", m.betaB}};
}

class Stopwatch {
 public:
  ~Stopwatch() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "elapsed " << num(s) << " s\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_welfare(const ElectionArgs& a) {
  Stopwatch sw;
  auto m = a.model();
  WelfareRow row = run_welfare(a, m);
  double z = row.closedForm ? (row.est.mean - *row.closedForm) / row.est.stdError : NAN;
  if (g.format == "csv") {
    emit("alpha,beta,profile,rule,seed,n,mean,stderr,closed_form,z_score\n" + num(a.alpha) + "," +
         num(m.betaA) + "," + a.profile + "," + row.rule + "," + std::to_string(g.seed) + "," +
         std::to_string(a.n) + "," + num(row.est.mean) + "," + num(row.est.stdError) + "," +
         (row.closedForm ? num(*row.closedForm) : "") + "," + num(z) + "\n");
    return 0;
  }
  Json out = {{"command", "election welfare"}, {"model", model_json(m)}, {"profile", a.profile},
              {"rule", row.rule}, {"tie", a.tie}, {"seed", g.seed}, {"n", a.n},
              {"mean", row.est.mean}, {"stderr", row.est.stdError}};
  out["closed_form"] = row.closedForm ? Json(*row.closedForm) : Json(nullptr);
  out["z_score"] = row.closedForm ? Json(z) : Json(nullptr);
  emit_json(out);
  return 0;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad number '" + item + "' in list");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty list");
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int cmd_sweep(const ElectionArgs& base, const std::string& alphas, const std::string& betas,
              const std::string& profiles) {
  Stopwatch sw;
  std::string csv = "alpha,beta,profile,rule,seed,n,mean,stderr,closed_form,z_score\n";
  for (double al : parse_list(alphas)) {
    for (double be : parse_list(betas)) {
      for (const auto& prof : split_names(profiles)) {
        ElectionArgs a = base;
        a.alpha = al;
        a.beta = be;
        a.betaA.reset();
        a.betaB.reset();
        a.profile = prof;
        auto m = a.model();
        WelfareRow row = run_welfare(a, m);
        double z = row.closedForm ? (row.est.mean - *row.closedForm) / row.est.stdError : NAN;
        csv += num(al) + "," + num(be) + "," + prof + "," + row.rule + "," + std::to_string(g.seed) +
               "," + std::to_string(a.n) + "," + num(row.est.mean) + "," + num(row.est.stdError) +
               "," + (row.closedForm ? num(*row.closedForm) : "") + "," + num(z) + "\n";
      }
    }
  }
  emit(csv);
  return 0;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::string s = spec;
  std::replace(s.begin(), s.end(), ':', ',');
  std::vector<double> v = parse_list(s);
  if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0])
    throw Error(ErrorCode::InvalidInput, "grid must be lo:hi:step with step > 0");
  std::vector<double> out;
  long steps = std::lround(std::floor((v[1] - v[0]) / v[2] + 1e-9));
  for (long k = 0; k <= steps; ++k) out.push_back(v[0] + k * v[2]);
  return out;
}

int cmd_deviation(const ElectionArgs& a, double sTrue, const std::string& grid, std::size_t mcN) {
  Stopwatch sw;
  auto m = a.model();
  auto pts = parse_grid(grid);
  if (g.format == "csv") {
    std::string csv = mcN ? "s_mimic,win_prob,mc_mean,mc_stderr\n" : "s_mimic,win_prob\n";
    for (double s : pts) {
      csv += num(s) + "," + num(normal::mimic_win_probability(m, sTrue, s));
      if (mcN) {
        auto e = normal::mc_mimic_win_probability(m, sTrue, s, {g.seed, mcN, g.workers});
        csv += "," + num(e.mean) + "," + num(e.stdError);
      }
      csv += "\n";
    }
    emit(csv);
    return 0;
  }
  Json rows = Json::array();
  for (double s : pts) {
    Json r = {{"s_mimic", s}, {"win_prob", normal::mimic_win_probability(m, sTrue, s)}};
    if (mcN) {
      auto e = normal::mc_mimic_win_probability(m, sTrue, s, {g.seed, mcN, g.workers});
      r["mc_mean"] = e.mean;
      r["mc_stderr"] = e.stdError;
    }
    rows.push_back(r);
  }
  emit_json({{"command", "election deviation"}, {"model", model_json(m)}, {"s_true", sTrue},
             {"seed", g.seed}, {"rows", rows}});
  return 0;
}

int cmd_decompose(const ElectionArgs& a) {
  Stopwatch sw;
  auto m = a.model();
  std::string rule = a.rule.empty() ? default_rule(a.profile) : a.rule;
  normal::Profile p = build_profile(m, a.profile, rule, a.tie, a.b, a.offset);
  auto d = normal::mc_decomposition(m, p.stratA, p.stratB, p.rule, {g.seed, a.n, g.workers});
  emit_json({{"command", "election decompose"}, {"model", model_json(m)}, {"profile", a.profile},
             {"rule", rule}, {"seed", g.seed}, {"n", d.nSamples},
             {"L_V", d.LV}, {"L_V_stderr", d.stdErrorLV}, {"L_E", d.LE}, {"L_E_stderr", d.stdErrorLE},
             {"total", d.total}, {"total_stderr", d.stdErrorTotal},
             {"reassembly_gap", d.reassemblyGap}, {"gap_stderr", d.stdErrorGap},
             {"closed_form_conditioning", d.closedFormConditioning}});
  return 0;
}

int cmd_indifference(const ElectionArgs& a, long checks, const std::string& offsets) {
  auto m = a.model();
  auto r = normal::verify_antipander_indifference(m, checks, g.seed, parse_list(offsets));
  emit_json({{"command", "election indifference"}, {"model", model_json(m)}, {"seed", g.seed},
             {"checks", r.checks}, {"max_residual", r.maxResidual}, {"holds", r.holds}});
  return r.holds ? 0 : kExitViolation;
}

int cmd_mixed(const ElectionArgs& a, long checks) {
  auto m = a.model();
  auto r = normal::verify_mixed_motives_dominance(m, a.b, checks, g.seed);
  emit_json({{"command", "election mixed-motives"}, {"model", model_json(m)}, {"b", a.b},
             {"seed", g.seed}, {"checks", r.checks}, {"failures", r.failures},
             {"posterior_residual", r.maxResidual}, {"holds", r.holds}});
  return r.holds ? 0 : kExitViolation;
}

// ---- beta --------------------------------------------------------------

int cmd_beta(const std::string& alphaText, const std::string& betaText) {
  using beta::Rational;
  beta::BetaModel<Rational> m{beta::parse_rational(alphaText), beta::parse_rational(betaText)};
  beta::validate(m);
  auto s = [](const Rational& r) { return beta::to_string(r); };
  Json out = {{"command", "beta verify"}, {"alpha", s(m.alpha)}, {"beta", s(m.beta)}};
  out["posterior_single"] = {{"0", s(beta::posterior_single(m, 0))}, {"1", s(beta::posterior_single(m, 1))}};
  auto y = beta::overreaction_strategy(m);
  out["overreaction"] = {{"y0", s(y.y0)}, {"y1", s(y.y1)}, {"ordering_holds", beta::overreaction_chain_holds(m)}};
  auto mid = beta::verify_midpoint(m, Rational(0));
  Json res = Json::array();
  for (const auto& r : mid.residual) res.push_back(s(r));
  out["midpoint"] = {{"holds", mid.holds}, {"residuals", res}};
  bool ok = mid.holds && beta::overreaction_chain_holds(m);
  if (m.equal_params()) {
    out["unbiased"] = nullptr;
    out["unbiased_note"] = "alpha == beta: the voter is indifferent between unbiased platforms";
  } else {
    Json pairs = Json::array();
    for (int sA = 0; sA < 2; ++sA) {
      for (int sB = 0; sB < 2; ++sB) {
        auto o = beta::unbiased_outcome(m, sA, sB);
        const char* w = o.winner == beta::Winner::A ? "A" : (o.winner == beta::Winner::B ? "B" : "tie");
        pairs.push_back({{"s_A", sA}, {"s_B", sB}, {"winner", w}, {"pair_shift", s(o.pairShift)},
                         {"single_shift", s(o.singleShift)}, {"same_sign", o.sameSign},
                         {"strictly_larger", o.strictlyLarger}});
        if (sA != sB) ok = ok && o.sameSign && o.strictlyLarger;
      }
    }
    out["unbiased"] = pairs;
  }
  auto lf = beta::linear_form(m);
  bool lin = beta::linear_posterior_antipander(lf, Rational(0)) == y.y0 &&
             beta::linear_posterior_antipander(lf, Rational(1)) == y.y1;
  out["linear_posterior"] = {{"w0", s(lf.w0)}, {"w1", s(lf.w1)}, {"s0", s(lf.s0)}, {"reproduces_overreaction", lin}};
  out["holds"] = ok && lin;
  emit_json(out);
  return ok && lin ? 0 : kExitViolation;
}

// ---- dual spheres ------------------------------------------------------

int cmd_dual(const std::string& path, const std::string& stratPath) {
  io::DualInput in = io::dual_from_json(io::read_json_file(path));
  FiniteBayesGame game = dual::induce_firm_game(in.game, in.gov);
  Json out = {{"command", "dual verify"}, {"input", path}};
  out["firm_game"] = io::to_json(game);
  out["statistics"] = io::to_json(analyze_statistics(game, g.rankTol));
  std::vector<StrategyProfile> profiles;
  if (!stratPath.empty()) {
    profiles.push_back(io::profile_from_json(io::read_json_file(stratPath), game));
  } else {
    for (const auto& eq : enumerate_pure_bne(game, g.tol, {g.cap}).equilibria)
      profiles.push_back(StrategyProfile::pure(game, eq.a, eq.b));
  }
  Json checks = Json::array();
  int code = 0;
  for (const auto& p : profiles) {
    Json c = {{"profile", io::to_json(p)}};
    if (!verify_bne(game, p, g.tol).holds) {
      c["bne"] = false;
      code = kExitViolation;
    } else {
      c["bne"] = true;
      c["identifiable"] = {{"A", check_identifiable(p.stratA, g.rankTol)},
                           {"B", check_identifiable(p.stratB, g.rankTol)}};
      c["surplus"] = io::to_json(dual::verify_surplus_constancy(in.game, in.gov, p, g.tol));
      if (!in.game.stateOf.empty()) {
        Json post = Json::object();
        std::set<std::string> labels;
        for (const auto& row : in.game.statisticOf) labels.insert(row.begin(), row.end());
        for (const auto& l : labels) {
          try {
            Json d = Json::object();
            for (const auto& [state, pr] : dual::posterior_from_statistic(in.game, p, l)) d[state] = pr;
            post[l] = d;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::UnreachableStatistic) throw;
            post[l] = nullptr;
          }
        }
        c["posterior_by_statistic"] = post;
      }
    }
    checks.push_back(c);
  }
  out["profiles"] = checks;
  emit_json(out);
  return code;
}

// ---- fixtures ----------------------------------------------------------

int cmd_fixtures(const std::string& name, bool all) {
  std::vector<const fixtures::FixtureRecord*> todo;
  if (all || name.empty()) {
    for (const auto& r : fixtures::registry()) todo.push_back(&r);
  } else if (const auto* r = fixtures::find(name)) {
    todo.push_back(r);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown fixture '" + name + "'");
  }
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  Json list = Json::array();
  for (const auto* r : todo) {
    Json checks = Json::array();
    bool fixtureOk = true;
    for (const auto& c : r->run()) {
      checks.push_back({{"check", c.check}, {"expected", c.expected}, {"actual", c.actual},
                        {"passed", c.passed}, {"tolerance", c.tolerance}});
      fixtureOk = fixtureOk && c.passed;
    }
    ok = ok && fixtureOk;
    list.push_back({{"name", r->name}, {"description", r->description}, {"passed", fixtureOk},
                    {"checks", checks}});
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit_json({{"command", g.commandLine}, {"passed", ok}, {"fixtures", list}, {"wall_clock_s", secs}});
  return ok ? 0 : kExitViolation;
}

void add_election_flags(CLI::App* c, ElectionArgs& a, bool withProfile) {
  c->add_option("--alpha", a.alpha, "prior precision")->check(CLI::PositiveNumber);
  c->add_option("--beta", a.beta, "signal precision (both candidates)")->check(CLI::PositiveNumber);
  c->add_option("--beta-a", a.betaA, "signal precision of A");
  c->add_option("--beta-b", a.betaB, "signal precision of B");
  c->add_option("--n", a.n, "Monte Carlo samples")->check(CLI::PositiveNumber);
  c->add_option("--b", a.b, "ideology shift for mixed-motives");
  if (!withProfile) return;
  c->add_option("--profile", a.profile,
                "antipander|fullpander|unbiased|benevolent|delegation|mixed-motives|offset");
  c->add_option("--rule", a.rule, "coin|best-response|more-extreme|always-a|always-b");
  c->add_option("--tie", a.tie, "coin|a|b");
  c->add_option("--offset", a.offset, "c for the offset profile");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g.commandLine += (i ? " " : "") + std::string(argv[i]);
  CLI::App app{"Constant-sum Bayesian games: checks, equilibria, and election simulations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", g.tol, "equilibrium tolerance")->capture_default_str();
  app.add_option("--rank-tol", g.rankTol, "relative singular-value cutoff")->capture_default_str();
  app.add_option("--seed", g.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--out", g.out, "write output to this path");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cap", g.cap, "cell cap for the induced normal form")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads (0 = all cores)");

  std::string gamePath, stratPath, fixtureName, dualPath, dualStrat;
  auto* check = app.add_subcommand("check", "completeness, SLI and convex independence");
  check->add_option("game", gamePath)->required()->check(CLI::ExistingFile);
  auto* solve = app.add_subcommand("solve", "minimax value on the induced normal form");
  solve->add_option("game", gamePath)->required()->check(CLI::ExistingFile);
  auto* enumerate = app.add_subcommand("enumerate", "all pure BNE with ex-post flags");
  enumerate->add_option("game", gamePath)->required()->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "certificate for a strategy profile");
  verify->add_option("game", gamePath)->required()->check(CLI::ExistingFile);
  verify->add_option("strategy", stratPath)->required()->check(CLI::ExistingFile);

  ElectionArgs ea;
  std::string alphas = "1", betas = "1", profiles = "fullpander,antipander,delegation";
  std::string grid = "0:3:0.5", offsets = "0,0.7,-1.3";
  double sTrue = 0.0;
  std::size_t mcN = 0;
  long checks = 10000;
  auto* election = app.add_subcommand("election", "normal-quadratic election");
  election->require_subcommand(1);
  election->fallthrough();
  auto* welfare = election->add_subcommand("welfare", "Monte Carlo voter welfare");
  add_election_flags(welfare, ea, true);
  auto* sweep = election->add_subcommand("sweep", "welfare over a parameter grid (CSV)");
  add_election_flags(sweep, ea, false);
  sweep->add_option("--rule", ea.rule, "voter rule for every profile");
  sweep->add_option("--alphas", alphas, "comma-separated alphas");
  sweep->add_option("--betas", betas, "comma-separated betas");
  sweep->add_option("--profiles", profiles, "comma-separated profile names");
  auto* deviation = election->add_subcommand("deviation", "win probability of mimicking another signal");
  add_election_flags(deviation, ea, false);
  deviation->add_option("--s-true", sTrue, "candidate's signal");
  deviation->add_option("--grid", grid, "lo:hi:step over mimicked signals");
  deviation->add_option("--mc-n", mcN, "also simulate with this many draws per point");
  auto* decompose = election->add_subcommand("decompose", "L_V / L_E welfare split");
  add_election_flags(decompose, ea, true);
  auto* indiff = election->add_subcommand("indifference", "anti-pandering indifference identity");
  add_election_flags(indiff, ea, false);
  indiff->add_option("--checks", checks, "sampled signal pairs");
  indiff->add_option("--offsets", offsets, "comma-separated offsets c");
  auto* mixed = election->add_subcommand("mixed-motives", "winner dominance with ideology b");
  add_election_flags(mixed, ea, false);
  mixed->add_option("--checks", checks, "sampled signal pairs");

  std::string betaAlpha = "2", betaBeta = "1";
  auto* betaCmd = app.add_subcommand("beta", "Beta-Bernoulli identities");
  betaCmd->require_subcommand(1);
  betaCmd->fallthrough();
  auto* betaVerify = betaCmd->add_subcommand("verify", "exact rational report");
  betaVerify->add_option("--alpha", betaAlpha, "alpha, e.g. 2 or 3/2")->required();
  betaVerify->add_option("--beta", betaBeta, "beta")->required();

  auto* dualCmd = app.add_subcommand("dual", "dual-sphere firm competition");
  dualCmd->require_subcommand(1);
  dualCmd->fallthrough();
  auto* dualVerify = dualCmd->add_subcommand("verify", "surplus constancy for firm profiles");
  dualVerify->add_option("input", dualPath)->required()->check(CLI::ExistingFile);
  dualVerify->add_option("--strategy", dualStrat, "firm profile; default enumerates pure BNE")
      ->check(CLI::ExistingFile);

  bool all = false;
  auto* fix = app.add_subcommand("fixtures", "run the bundled worked examples");
  fix->add_option("name", fixtureName);
  fix->add_flag("--all", all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return cmd_check(gamePath);
    if (*solve) return cmd_solve(gamePath);
    if (*enumerate) return cmd_enumerate(gamePath);
    if (*verify) return cmd_verify(gamePath, stratPath);
    if (*welfare) return cmd_welfare(ea);
    if (*sweep) return cmd_sweep(ea, alphas, betas, profiles);
    if (*deviation) return cmd_deviation(ea, sTrue, grid, mcN);
    if (*decompose) return cmd_decompose(ea);
    if (*indiff) return cmd_indifference(ea, checks, offsets);
    if (*mixed) return cmd_mixed(ea, checks);
    if (*betaVerify) return cmd_beta(betaAlpha, betaBeta);
    if (*dualVerify) return cmd_dual(dualPath, dualStrat);
    if (*fix) return cmd_fixtures(fixtureName, all);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
