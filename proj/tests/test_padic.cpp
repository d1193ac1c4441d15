#include <gtest/gtest.h>

#include "cnckit/suites.hpp"
#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(PAdic, Valuations) {
  PAdicContext c(3);
  EXPECT_EQ(valuation(c, Rational(18)), 2);
  EXPECT_EQ(valuation(c, Rational(5, 27)), -3);
  EXPECT_FALSE(valuation(c, Rational(0)).has_value());
  EXPECT_EQ(format_valuation(std::nullopt), "+inf");
  EXPECT_THROW(PAdicContext(6), std::invalid_argument);
}

TEST(PAdic, Balls) {
  PAdicContext c(2);
  EXPECT_TRUE(in_ball(c, Rational(9), Rational(1), 3));
  EXPECT_FALSE(in_ball(c, Rational(9), Rational(1), 4));
  EXPECT_TRUE(in_ball(c, Rational(5), Rational(5), 100));
}

TEST(PAdic, PowersAgainstSearch) {
  Rng rng(71);
  for (std::int64_t p : {2, 3, 5, 7}) {
    PAdicContext c(p);
    for (int i = 0; i < 400; ++i) {
      Rational x(rng.uniform(1, 400) * (rng.chance(1, 2) ? 1 : -1), rng.uniform(1, 400));
      std::int64_t n = rng.uniform(1, 6);
      EXPECT_EQ(is_nth_power(c, x, n), nth_power_by_search(p, x, n)) << "p = " << p << " x = " << x.to_string() << " n = " << n;
    }
  }
}

TEST(PAdic, PowerExamples) {
  EXPECT_TRUE(is_nth_power(PAdicContext(7), Rational(2), 2));
  EXPECT_FALSE(is_nth_power(PAdicContext(7), Rational(5), 2));
  EXPECT_FALSE(is_nth_power(PAdicContext(2), Rational(3), 2));
  EXPECT_TRUE(is_nth_power(PAdicContext(2), Rational(17), 2));
  EXPECT_EQ(power_index(PAdicContext(3), 2), 4);
  EXPECT_EQ(power_index(PAdicContext(2), 2), 8);
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 1; n <= 4; ++n) EXPECT_EQ(power_index(PAdicContext(p), n), power_index_by_merge(p, n));
}

TEST(PAdic, SetMembershipAndGerms) {
  PAdicContext c(3);
  PAdicSet a = padic_set_of(parse_expr("pnpow(2)"), c);
  PAdicSet b = padic_set_of(parse_expr("pnpow(2) | (pnpow(2,2) & ball(0,50))"), c);
  EXPECT_TRUE(pset_member(c, Rational(4), a));
  EXPECT_FALSE(pset_member(c, Rational(2), a));
  EXPECT_FALSE(pset_member_point(c, PAdicPoint{false, Rational(2), 50}, a));
  EXPECT_TRUE(pset_member_point(c, PAdicPoint{false, Rational(2), 50}, b));
  GermResult deep = germ_compare(c, a, b, 60);
  EXPECT_FALSE(deep.equal);
  EXPECT_TRUE(deep.conclusive);
  EXPECT_EQ(deep.discrepancy_level, 50);
  EXPECT_EQ(deep.discrepancy_unit, Rational(2));
  GermResult shallow = germ_compare(c, a, b, 10);
  EXPECT_TRUE(shallow.equal);
  EXPECT_FALSE(shallow.conclusive);
}

TEST(PAdic, ProductsOfPowersArePowers) {
  Rng rng(72);
  for (std::int64_t p : {2, 3, 5}) {
    PAdicContext c(p);
    for (int i = 0; i < 300; ++i) {
      Rational x(rng.uniform(1, 60), rng.uniform(1, 60)), y(rng.uniform(-60, -1), rng.uniform(1, 60));
      std::int64_t n = rng.uniform(2, 4);
      Rational xn(1);
      for (std::int64_t k = 0; k < n; ++k) xn = xn * x;
      EXPECT_TRUE(is_nth_power(c, xn, n));
      if (is_nth_power(c, y, n)) EXPECT_TRUE(is_nth_power(c, xn * y, n));
      else EXPECT_FALSE(is_nth_power(c, xn * y, n));
    }
  }
}
