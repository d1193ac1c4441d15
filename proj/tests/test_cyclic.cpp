#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

namespace {

long double frac_pos(std::int64_t k) {
  long double t = static_cast<long double>(k) * (1.0L + std::sqrt(5.0L)) / 2.0L;
  return t - std::floor(t);
}

bool circular(long double a, long double b, long double c) { return (a < b && b < c) || (b < c && c < a) || (c < a && a < b); }

std::vector<CyclicSpec> circles() {
  return {CyclicSpec::z_with_alpha(phi()), CyclicSpec::z_with_alpha(QuadIrr(0, 1, 1, 2)), CyclicSpec::dyadic_circle()};
}

CircleElement sample_circle(Rng& rng, const CyclicSpec& spec) {
  if (spec.kind() == CyclicSpec::Kind::DyadicCircle) return Rational(rng.uniform(0, 63), 64);
  return Rational(rng.uniform(-100, 100));
}

LocalElement sample_local(Rng& rng, const CyclicSpec& spec) {
  CircleElement a = sample_circle(rng, spec);
  return a != Rational(0) && rng.chance(1, 2) ? local_neg(a) : local_nonneg(a);
}

}  // namespace

TEST(Cyclic, OrderOnIrrationalRotation) {
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_FALSE(cyclic_check(s, 1, 2, 3));
  EXPECT_TRUE(cyclic_check(s, 3, 2, 1));
  for (std::int64_t a = -12; a <= 12; ++a)
    for (std::int64_t b = -12; b <= 12; ++b)
      for (std::int64_t c = -12; c <= 12; ++c)
        EXPECT_EQ(cyclic_check(s, a, b, c), circular(frac_pos(a), frac_pos(b), frac_pos(c)));
}

TEST(Cyclic, AxiomsOnSamples) {
  Rng rng(61);
  for (const auto& s : circles())
    for (int i = 0; i < 2000; ++i) {
      CircleElement a = sample_circle(rng, s), b = sample_circle(rng, s), c = sample_circle(rng, s), g = sample_circle(rng, s);
      bool r = cyclic_check(s, a, b, c);
      EXPECT_EQ(r, cyclic_check(s, b, c, a));
      if (r) EXPECT_FALSE(cyclic_check(s, c, b, a));
      if (a != b && b != c && a != c) EXPECT_NE(r, cyclic_check(s, c, b, a));
      EXPECT_EQ(r, cyclic_check(s, circle_add(s, a, g), circle_add(s, b, g), circle_add(s, c, g)));
    }
}

TEST(Cover, AdditionExamples) {
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_EQ(cover_add(s, CoverElement{0, 1}, CoverElement{0, 1}), (CoverElement{1, 2}));
  auto d = CyclicSpec::dyadic_circle();
  EXPECT_EQ(cover_add(d, CoverElement{0, Rational(3, 4)}, CoverElement{0, Rational(1, 2)}), (CoverElement{1, Rational(1, 4)}));
}

TEST(Cover, GroupLawsAndProjection) {
  Rng rng(62);
  for (const auto& s : circles())
    for (int i = 0; i < 1000; ++i) {
      CoverElement x{rng.uniform(-5, 5), sample_circle(rng, s)}, y{rng.uniform(-5, 5), sample_circle(rng, s)},
          z{rng.uniform(-5, 5), sample_circle(rng, s)};
      EXPECT_EQ(cover_add(s, cover_add(s, x, y), z), cover_add(s, x, cover_add(s, y, z)));
      EXPECT_EQ(cover_add(s, x, y), cover_add(s, y, x));
      EXPECT_EQ(cover_add(s, x, cover_neg(s, x)), (CoverElement{0, 0}));
      EXPECT_EQ(cover_cmp(s, x, y), cover_cmp(s, cover_add(s, x, z), cover_add(s, y, z)));
      EXPECT_EQ(project(cover_add(s, x, y)), circle_add(s, project(x), project(y)));
      EXPECT_EQ(project(cover_add(s, x, cover_unit())), project(x));
      EXPECT_EQ(project(lift(project(x))), project(x));
      EXPECT_EQ(group_to_cover(s, cover_to_group(s, x)), x);
    }
}

TEST(Local, SumsInsideTheUnitInterval) {
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_FALSE(local_add(s, local_nonneg(1), local_nonneg(1)).has_value());
  auto z = local_add(s, local_nonneg(1), local_neg(1));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, local_nonneg(0));
  Rng rng(63);
  for (int i = 0; i < 1000; ++i) {
    LocalElement x = sample_local(rng, s);
    auto back = iota_inverse(s, iota(s, x));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, x);
  }
}

TEST(Local, EquivalenceImplementationsAgree) {
  Rng rng(64);
  for (const auto& s : circles())
    for (int i = 0; i < 1500; ++i) {
      LocalElement x = sample_local(rng, s), y = sample_local(rng, s);
      std::int64_t n = rng.uniform(1, 5);
      EXPECT_EQ(equiv_mod_n_direct(s, x, y, n), equiv_mod_n_definable(s, x, y, n));
    }
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_FALSE(equiv_mod_n_direct(s, local_nonneg(2), local_nonneg(4), 2));
  auto d = CyclicSpec::dyadic_circle();
  EXPECT_TRUE(equiv_mod_n_direct(d, local_nonneg(Rational(1, 4)), local_nonneg(Rational(3, 4)), 2));
}

TEST(Cover, IndexBound) {
  for (const auto& s : circles())
    for (std::int64_t n = 1; n <= 10; ++n) EXPECT_LE(cover_index(s, n), n * circle_index(s, n)) << s.to_string();
  EXPECT_EQ(cover_index(CyclicSpec::z_with_alpha(phi()), 4), 16);
  EXPECT_EQ(circle_index(CyclicSpec::dyadic_circle(), 6), 1);
}

TEST(Arcs, BooleanOperationsArePointwise) {
  Rng rng(65);
  auto s = CyclicSpec::z_with_alpha(phi());
  RandomParams p;
  p.range = 30;
  for (int i = 0; i < 60; ++i) {
    SetExpr ea = random_circle_expr(rng, s, p), eb = random_circle_expr(rng, s, p);
    ArcSet a = eval_arc(ea, s), b = eval_arc(eb, s);
    CircleOracle oa(ea, s), ob(eb, s);
    ArcSet u = arc_boolean(BoolOp::Union, a, b), n = arc_boolean(BoolOp::Intersect, a, b), c = arc_boolean(BoolOp::Complement, a, b);
    for (std::int64_t j = -120; j <= 120; ++j) {
      ASSERT_EQ(arc_member(j, a), oa(j)) << print_expr(ea) << " at " << j;
      EXPECT_EQ(arc_member(j, u), oa(j) || ob(j));
      EXPECT_EQ(arc_member(j, n), oa(j) && ob(j));
      EXPECT_EQ(arc_member(j, c), !oa(j));
    }
  }
}

TEST(Arcs, Examples) {
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_TRUE(arc_member(13, eval_arc(parse_expr("arc(0,5)"), s)));
  EXPECT_TRUE(eval_arc(parse_expr("arc(0,5) & arc(5,0)"), s).cover.empty());
  EXPECT_EQ(eval_arc(parse_expr("arc(0,5) | arc(5,0) | point(0) | point(5)"), s), arc_whole(s));
  auto d = CyclicSpec::dyadic_circle();
  ArcSet half = eval_arc(parse_expr("arc(0,1/2)"), d);
  EXPECT_TRUE(arc_member(Rational(1, 4), half));
  EXPECT_FALSE(arc_member(Rational(3, 4), half));
  EXPECT_FALSE(arc_member(Rational(0), half));
}
