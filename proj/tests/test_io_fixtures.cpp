#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "expost/fixtures.hpp"
#include "expost/io.hpp"

using namespace expost;
namespace fx = expost::fixtures;

namespace {

std::string data(const std::string& file) { return std::string(EXPOST_DATA_DIR) + "/" + file; }

void check_same_game(const FiniteBayesGame& a, const FiniteBayesGame& b) {
  CHECK(a.nTypesA == b.nTypesA);
  CHECK(a.nTypesB == b.nTypesB);
  CHECK(a.joint.isApprox(b.joint, 1e-14));
  CHECK(a.payoffA == b.payoffA);
  CHECK(a.sumConst == b.sumConst);
}

}  // namespace

TEST_CASE("data files match the built-in fixtures") {
  check_same_game(io::game_from_json(io::read_json_file(data("example1.json"))), fx::example1_game());
  check_same_game(io::game_from_json(io::read_json_file(data("example2.json"))), fx::example2_game());
  check_same_game(io::game_from_json(io::read_json_file(data("cyclic_4x4.json"))),
                  fx::convex_independence_game());
  check_same_game(io::game_from_json(io::read_json_file(data("full_rank_2x2.json"))),
                  fx::full_rank_matching_game());
  auto ex = fx::example3();
  auto j3 = io::read_json_file(data("example3.json"));
  check_same_game(io::game_from_json(j3), ex.game);
  auto om = io::outcomes_from_json(j3);
  REQUIRE(om.has_value());
  CHECK(om->outcomeOf == ex.outcomes.outcomeOf);

  auto table = io::read_json_file(data("example3_voter_table.json"));
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      CHECK(table["elected_by_platforms"][i][k].get<std::string>() ==
            std::string(1, ex.electedAt[i][k]));
      CHECK(table["correct_action_by_signals"][i][k].get<int>() == ex.correctAt[i][k]);
    }
}

TEST_CASE("game JSON round trip") {
  auto g = fx::convex_independence_game();
  auto back = io::game_from_json(io::to_json(g));
  check_same_game(back, g);
}

TEST_CASE("profile parsing") {
  auto g = fx::example2_game();
  auto p = io::profile_from_json(io::read_json_file(data("example2_mix.json")), g);
  CHECK(p.stratA.dist(0, 0) == doctest::Approx(0.5));
  auto bad = io::Json::parse(R"({"A": {"pure": [0, 1]}, "B": {"pure": [0]}})");
  CHECK_THROWS_AS(io::profile_from_json(bad, g), Error);
  auto bad2 = io::Json::parse(R"({"A": {"behavior": [[0.7, 0.7]]}, "B": {"pure": [0]}})");
  CHECK_THROWS_AS(io::profile_from_json(bad2, g), Error);
}

TEST_CASE("malformed inputs raise typed errors") {
  CHECK_THROWS_AS(io::read_json_file(data("missing.json")), Error);
  try {
    io::game_from_json(io::read_json_file(data("invalid_sum.json")));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonStochasticJoint);
  }
  CHECK_THROWS_AS(io::game_from_json(io::Json::parse(R"({"types": 3})")), Error);
}

TEST_CASE("dual input parsing") {
  auto in = io::dual_from_json(io::read_json_file(data("dual_counterexample_va.json")));
  auto ref = fx::dual_counterexample(true);
  CHECK(in.game.market == ref.game.market);
  CHECK(in.game.statisticOf == ref.game.statisticOf);
  CHECK(in.game.valuation == ref.game.valuation);
  CHECK(in.gov.mixing == ref.gov.mixing);
}

TEST_CASE("truncated countable example: identity and test function vanish") {
  for (int K : {8, 16, 32}) {
    for (const auto& r : fx::li_not_sli_residuals(K)) CHECK(r == 0);
    for (const auto& r : fx::li_not_sli_test_function_residuals(K)) CHECK(r == 0);
  }
  CHECK(fx::li_not_sli_truncated_rank(8) == 9);
  CHECK(fx::exact_rank({{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("Example 3 brute-force single-signal welfares") {
  auto ex = fx::example3();
  CHECK(fx::example3_welfare(ex) == doctest::Approx(1.0));
  CHECK(fx::example3_single_signal_welfare(ex, Player::A) == doctest::Approx(9.0 / 16.0));
  CHECK(fx::example3_single_signal_welfare(ex, Player::B) == doctest::Approx(11.0 / 16.0));
}

TEST_CASE("every registered fixture passes") {
  for (const auto& rec : fx::registry()) {
    CAPTURE(rec.name);
    for (const auto& c : rec.run()) {
      CAPTURE(c.check);
      CAPTURE(c.actual);
      CHECK(c.passed);
    }
  }
  CHECK(fx::find("example1-matching-pennies") != nullptr);
  CHECK(fx::find("nope") == nullptr);
}
