#include <gtest/gtest.h>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

namespace {

Cut random_cut(Rng& rng, const GroupSpec& spec) {
  switch (rng.uniform(0, 5)) {
    case 0:
      return rng.chance(1, 2) ? Cut::neg_inf() : Cut::pos_inf();
    case 1:
      return closed_at(spec, sample(rng, spec, 6));
    case 2:
      return open_at(spec, sample(rng, spec, 6));
    default:
      break;
  }
  switch (spec.kind()) {
    case GroupKind::LexInt:
    case GroupKind::LexRat: {
      Rational head(rng.uniform(-5, 5));
      return rng.chance(1, 2) ? closed_prefix(spec, {head}) : open_prefix(spec, {head});
    }
    case GroupKind::Rat:
    case GroupKind::ZPlusAlphaZ:
      return real_cut(spec, QuadIrr(rng.uniform(-10, 10), rng.uniform(1, 3), 2, spec.kind() == GroupKind::Rat ? 2 : 5), rng.chance(1, 2));
    default:
      return closed_at(spec, sample(rng, spec, 6));
  }
}

std::vector<GroupSpec> cut_kinds() {
  return {GroupSpec::integers(), GroupSpec::rationals(), GroupSpec::lex_int(2), GroupSpec::lex_rat(2),
          GroupSpec::z_plus_alpha_z(phi())};
}

std::vector<GroupElement> grid(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::Int:
      return enum_window(window(spec, -12, 12));
    case GroupKind::Rat:
      return enum_window(window(spec, -8, 8, 6));
    case GroupKind::LexRat:
      return enum_window(window(spec, -6, 6, 2));
    default:
      return enum_window(window(spec, -8, 8));
  }
}

}  // namespace

TEST(Cut, MembershipIsDownwardClosed) {
  Rng rng(21);
  for (const auto& spec : cut_kinds()) {
    auto w = grid(spec);
    for (int i = 0; i < 60; ++i) {
      Cut c = random_cut(rng, spec);
      bool seen_out = false;
      for (const auto& x : w) {
        bool in = cut_contains(spec, c, x);
        EXPECT_FALSE(in && seen_out) << spec.to_string() << " " << format_cut_value(spec, c);
        seen_out = seen_out || !in;
      }
    }
  }
}

TEST(Cut, OrderMatchesInclusionOnWindows) {
  Rng rng(22);
  for (const auto& spec : cut_kinds()) {
    auto w = grid(spec);
    for (int i = 0; i < 200; ++i) {
      Cut a = random_cut(rng, spec), b = random_cut(rng, spec);
      int c = cut_cmp(spec, a, b);
      EXPECT_EQ(c, -cut_cmp(spec, b, a));
      bool sub = true, sup = true;
      for (const auto& x : w) {
        bool ia = cut_contains(spec, a, x), ib = cut_contains(spec, b, x);
        sub = sub && (!ia || ib);
        sup = sup && (!ib || ia);
      }
      if (c < 0) EXPECT_TRUE(sub);
      if (c > 0) EXPECT_TRUE(sup);
      if (c == 0) EXPECT_TRUE(sub && sup);
    }
  }
}

TEST(Cut, NegationAndTranslationArePointwise) {
  Rng rng(23);
  for (const auto& spec : cut_kinds()) {
    auto w = grid(spec);
    for (int i = 0; i < 60; ++i) {
      Cut c = random_cut(rng, spec);
      Cut n = negate_cut(spec, c);
      GroupElement g = sample(rng, spec, 3);
      Cut t = translate_cut(spec, c, g);
      for (const auto& x : w) {
        EXPECT_EQ(cut_contains(spec, n, x), !cut_contains(spec, c, neg(spec, x)));
        EXPECT_EQ(cut_contains(spec, t, x), cut_contains(spec, c, sub(spec, x, g)));
      }
    }
  }
}

TEST(Cut, StabilizerFixesTheCut) {
  Rng rng(24);
  for (const auto& spec : cut_kinds()) {
    for (int i = 0; i < 60; ++i) {
      Cut c = random_cut(rng, spec);
      ConvexSubgroup h = stabilizer(spec, c);
      for (int j = 0; j < 20; ++j) {
        GroupElement a = sample(rng, spec, 4);
        EXPECT_EQ(h.contains(a), translate_cut(spec, c, a) == c) << format_cut_value(spec, c) << " + " << format_element(spec, a);
      }
      EXPECT_EQ(is_valuational(spec, c), !c.is_infinite() && !h.is_zero());
    }
  }
}

TEST(Cut, Examples) {
  auto q = GroupSpec::rationals();
  EXPECT_LT(cut_cmp(q, closed_at(q, el(q, {1})), gap_at(q, QuadIrr(0, 1, 1, 2))), 0);
  auto z = GroupSpec::integers();
  EXPECT_EQ(open_at(z, el(z, {3})), closed_at(z, el(z, {2})));
  EXPECT_FALSE(is_valuational(z, closed_at(z, el(z, {7}))));
  auto lex = GroupSpec::lex_int(2);
  Cut p = closed_prefix(lex, {Rational(0)});
  EXPECT_TRUE(is_valuational(lex, p));
  EXPECT_EQ(stabilizer(lex, p), (ConvexSubgroup{lex, 1}));
  EXPECT_TRUE(cut_contains(lex, p, el(lex, {0, 1000})));
  EXPECT_FALSE(cut_contains(lex, p, el(lex, {1, -1000})));
  EXPECT_THROW(gap_at(q, QuadIrr(Rational(1, 2))), std::invalid_argument);
}

TEST(ConvexSet, IntersectionAndNegationArePointwise) {
  Rng rng(25);
  for (const auto& spec : cut_kinds()) {
    auto w = grid(spec);
    for (int i = 0; i < 80; ++i) {
      ConvexSet a{random_cut(rng, spec), random_cut(rng, spec)}, b{random_cut(rng, spec), random_cut(rng, spec)};
      ConvexSet m = convex_intersect(spec, a, b), n = convex_negate(spec, a);
      bool any = false;
      for (const auto& x : w) {
        bool in = convex_member(spec, x, m);
        EXPECT_EQ(in, convex_member(spec, x, a) && convex_member(spec, x, b));
        EXPECT_EQ(convex_member(spec, x, n), convex_member(spec, neg(spec, x), a));
        any = any || in;
      }
      if (any) EXPECT_FALSE(convex_empty(spec, m));
    }
  }
}

TEST(ConvexSet, Formatting) {
  auto z = GroupSpec::integers();
  EXPECT_EQ(format_convex(z, whole_line()), "(-inf, +inf)");
  EXPECT_EQ(format_convex(z, point_set(z, el(z, {4}))), "(3, 4]");
  auto q = GroupSpec::rationals();
  EXPECT_EQ(format_convex(q, point_set(q, el(q, {Rational(1, 2)}))), "[1/2, 1/2]");
}
