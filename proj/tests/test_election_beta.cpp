#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expost/beta.hpp"

using namespace expost;
using namespace expost::beta;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/5") == Rational(-2, 5));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("posteriors") {
  BetaModel<Rational> m{Rational(2), Rational(3)};
  CHECK(posterior_single(m, 1) == Rational(1, 2));
  CHECK(posterior_single(m, 0) == Rational(1, 3));
  CHECK(posterior_pair(m, 1, 1) == Rational(4, 7));
  CHECK(m.prior_mean() == Rational(2, 5));
}

TEST_CASE("overreaction strategy is exactly the midpoint rule") {
  BetaModel<Rational> m{Rational(3, 2), Rational(7, 3)};
  CHECK(overreaction_chain_holds(m));
  auto c = verify_midpoint(m, Rational(0));
  CHECK(c.holds);
  CHECK(c.maxResidual == 0);

  BetaModel<double> d{1.5, 7.0 / 3.0};
  auto cd = verify_midpoint(d, 1e-12);
  CHECK(cd.holds);
}

TEST_CASE("unbiased play: the ex-ante less likely signal wins") {
  BetaModel<Rational> lowAlpha{Rational(1), Rational(3)};  // signal 1 less likely
  auto o = unbiased_outcome(lowAlpha, 1, 0);
  CHECK(o.winner == Winner::A);
  CHECK(o.sameSign);
  CHECK(o.strictlyLarger);
  CHECK(unbiased_outcome(lowAlpha, 0, 1).winner == Winner::B);
  CHECK(unbiased_outcome(lowAlpha, 1, 1).winner == Winner::Tie);

  BetaModel<Rational> highAlpha{Rational(3), Rational(1)};
  CHECK(unbiased_outcome(highAlpha, 1, 0).winner == Winner::B);

  BetaModel<Rational> equal{Rational(2), Rational(2)};
  CHECK_THROWS_AS(unbiased_outcome(equal, 1, 0), Error);
}

TEST_CASE("Beta-Bernoulli fits the linear posterior form") {
  BetaModel<Rational> m{Rational(5, 2), Rational(3, 2)};
  auto lin = linear_form(m);
  auto y = overreaction_strategy(m);
  CHECK(linear_posterior_antipander(lin, Rational(0)) == y.y0);
  CHECK(linear_posterior_antipander(lin, Rational(1)) == y.y1);
  CHECK_THROWS_AS(validate(BetaModel<double>{0.0, 1.0}), Error);
}
