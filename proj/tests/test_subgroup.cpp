#include <gtest/gtest.h>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(Subgroups, ChainsPerKind) {
  EXPECT_EQ(convex_subgroups(GroupSpec::integers()).size(), 2u);
  EXPECT_EQ(convex_subgroups(GroupSpec::z_plus_alpha_z(phi())).size(), 2u);
  auto lex = GroupSpec::lex_rat(3);
  auto subs = convex_subgroups(lex);
  ASSERT_EQ(subs.size(), 4u);
  EXPECT_TRUE(subs.front().is_zero());
  EXPECT_TRUE(subs.back().is_whole());
}

TEST(Subgroups, ClosedAndConvexOnWindow) {
  auto spec = GroupSpec::lex_int(3);
  auto w = enum_window(window(spec, -2, 2));
  for (const auto& h : convex_subgroups(spec)) {
    std::vector<GroupElement> in;
    for (const auto& x : w)
      if (h.contains(x)) in.push_back(x);
    for (const auto& x : in)
      for (const auto& y : in) EXPECT_TRUE(h.contains(sub(spec, x, y)));
    // between two members of a sorted window everything is a member
    for (std::size_t i = 0; i < w.size(); ++i)
      if (h.contains(w[i]))
        for (std::size_t j = i + 1; j < w.size(); ++j)
          if (h.contains(w[j]))
            for (std::size_t k = i + 1; k < j; ++k) EXPECT_TRUE(h.contains(w[k]));
  }
}

TEST(Regular, ClosedFormAgreesWithDefinition) {
  std::vector<GroupWindow> windows = {window(GroupSpec::integers(), -40, 40),     window(GroupSpec::rationals(), -2, 2, 6),
                                      window(GroupSpec::lex_int(2), -10, 10),    window(GroupSpec::lex_rat(2), -2, 2, 3),
                                      window(GroupSpec::z_plus_alpha_z(phi()), -4, 4), window(GroupSpec::dyadic(), -2, 2, 8)};
  for (const auto& w : windows)
    for (std::int64_t n = 1; n <= 8; ++n) {
      RnAudit a = rn_window_audit(w.spec, n, w);
      EXPECT_TRUE(a.agrees) << w.spec.to_string() << " n = " << n;
    }
}

TEST(Regular, Examples) {
  EXPECT_TRUE(regular_subgroup(GroupSpec::rationals(), 5).is_whole());
  EXPECT_TRUE(regular_subgroup(GroupSpec::integers(), 7).is_whole());
  auto lex = GroupSpec::lex_int(2);
  EXPECT_EQ(regular_subgroup(lex, 1), (ConvexSubgroup{lex, 0}));
  EXPECT_EQ(regular_subgroup(lex, 2), (ConvexSubgroup{lex, 1}));
  // (1,0) and (1,1): two elements and neither is in 2M
  EXPECT_FALSE(in_nM(lex, el(lex, {1, 0}), 2));
  EXPECT_FALSE(in_nM(lex, el(lex, {1, 1}), 2));
}

TEST(Regular, IntervalsOfNElementsMeetCosets) {
  Rng rng(41);
  auto spec = GroupSpec::lex_int(2);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = rng.uniform(1, 8);
    ConvexSubgroup rn = regular_subgroup(spec, n);
    GroupElement a = el(spec, {rn.level == 0 ? rng.uniform(-5, 5) : 0, rng.uniform(-20, 20)});
    GroupElement x = el(spec, {rn.level == 0 ? rng.uniform(-5, 5) : 0, rng.uniform(-20, 20)});
    bool hit = false;
    for (std::int64_t k = 0; k < n; ++k) hit = hit || in_nM(spec, sub(spec, add(spec, x, el(spec, {0, k})), a), n);
    EXPECT_TRUE(hit);
  }
}

TEST(Pullback, LexicographicQuotients) {
  auto lex = GroupSpec::lex_int(2);
  QuotientMap m = quotient_map(lex, ConvexSubgroup{lex, 1});
  EXPECT_EQ(m.codomain, GroupSpec::integers());
  EXPECT_EQ(quotient(m, el(lex, {3, -9})), el(GroupSpec::integers(), {3}));
  CncSet p = pullback(m, eval_cnc(parse_expr("coset(2,1) & interval(0,+inf)"), GroupSpec::integers()));
  for (const auto& x : enum_window(window(lex, -4, 4))) {
    std::int64_t h = x.coords[0].num();
    EXPECT_EQ(cnc_member(x, p), h >= 0 && h % 2 != 0) << format_element(lex, x);
  }
  EXPECT_EQ(p.modulus, 2);
  EXPECT_THROW(quotient_map(lex, ConvexSubgroup{lex, 0}), std::invalid_argument);
  EXPECT_THROW(pullback(m, eval_cnc(parse_expr("interval(0,+inf)"), GroupSpec::rationals())), std::invalid_argument);
}

TEST(Pullback, CommutesWithBooleanOperations) {
  Rng rng(42);
  auto lex = GroupSpec::lex_rat(3);
  QuotientMap m = quotient_map(lex, ConvexSubgroup{lex, 2});
  RandomParams p;
  p.range = 3;
  p.den = 2;
  p.allow_reals = false;
  for (int i = 0; i < 60; ++i) {
    CncSet a = eval_cnc(random_group_expr(rng, m.codomain, p), m.codomain);
    CncSet b = eval_cnc(random_group_expr(rng, m.codomain, p), m.codomain);
    EXPECT_EQ(pullback(m, cnc_union(a, b)), cnc_union(pullback(m, a), pullback(m, b)));
    EXPECT_EQ(pullback(m, cnc_complement(a)), cnc_complement(pullback(m, a)));
  }
}
