#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expost/fixtures.hpp"

using namespace expost;
namespace fx = expost::fixtures;

namespace {

StrategyProfile truthful(const FiniteBayesGame& g) { return fx::identity_profile(g); }

}  // namespace

TEST_CASE("induced firm game adds the government value to the market share") {
  auto in = fx::dual_counterexample(true);
  auto g = dual::induce_firm_game(in.game, in.gov);
  CHECK(g.sumConst == 0.0);
  // m = |xA - xB|, a = 1 - m, v(a) = a
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(g.payoffA(x, y) == doctest::Approx(1.0));
  CHECK(dual::government_value(in.game, in.gov, "0") == doctest::Approx(1.0));
  CHECK(dual::government_value(in.game, in.gov, "1") == doctest::Approx(0.0));
}

TEST_CASE("counterexample without valuation: surplus not constant") {
  auto in = fx::dual_counterexample(false);
  auto g = dual::induce_firm_game(in.game, in.gov);
  auto prof = truthful(g);
  auto cert = certify(g, prof);
  CHECK(cert.bne.holds);
  CHECK(cert.identifiableA);
  CHECK(cert.identifiableB);
  auto v = dual::verify_surplus_constancy(in.game, in.gov, prof);
  CHECK_FALSE(v.holds);
  CHECK(v.spread == doctest::Approx(1.0));
  REQUIRE(v.lowest.has_value());
  REQUIRE(v.highest.has_value());
}

TEST_CASE("counterexample with v(a) = a: constant surplus and a revealing statistic") {
  auto in = fx::dual_counterexample(true);
  auto g = dual::induce_firm_game(in.game, in.gov);
  auto prof = truthful(g);
  auto v = dual::verify_surplus_constancy(in.game, in.gov, prof);
  CHECK(v.holds);
  CHECK(v.constant == doctest::Approx(1.0));
  auto post = dual::posterior_from_statistic(in.game, prof, "0");
  CHECK(post.at("1") == doctest::Approx(1.0));
  CHECK(post.at("0") == doctest::Approx(0.0));
}

TEST_CASE("full-rank variant passes surplus constancy") {
  auto in = fx::dual_full_rank();
  auto g = dual::induce_firm_game(in.game, in.gov);
  auto e = enumerate_pure_bne(g);
  REQUIRE_FALSE(e.equilibria.empty());
  for (const auto& eq : e.equilibria) {
    auto prof = StrategyProfile::pure(g, eq.a, eq.b);
    CHECK(dual::verify_surplus_constancy(in.game, in.gov, prof, 1e-9).holds);
  }
}

TEST_CASE("dual validation and errors") {
  auto in = fx::dual_counterexample(false);
  auto gov = in.gov;
  gov.mixing["0"]["1"] = 0.5;  // no longer a distribution
  CHECK_THROWS_AS(dual::validate(in.game, gov), Error);

  auto g = dual::induce_firm_game(in.game, in.gov);
  auto notEq = StrategyProfile::pure(g, {Player::A, {0, 0}}, {Player::B, {0, 1}});
  CHECK_THROWS_AS(dual::verify_surplus_constancy(in.game, in.gov, notEq), Error);

  auto prof = truthful(g);
  CHECK_THROWS_AS(dual::posterior_from_statistic(in.game, prof, "7"), Error);
  auto noStates = in.game;
  noStates.stateOf.clear();
  CHECK_THROWS_AS(dual::posterior_from_statistic(noStates, prof, "0"), Error);
}
