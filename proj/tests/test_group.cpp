#include <gtest/gtest.h>

#include <cmath>

#include "cnckit/suites.hpp"
#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor(), -2);
  EXPECT_EQ(Rational::parse("-3/2"), r);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Rational, OverflowIsReported) {
  Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, OverflowError);
}

TEST(Rational, FieldLawsOnRandomPairs) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    Rational a(rng.uniform(-500, 500), rng.uniform(1, 60)), b(rng.uniform(-500, 500), rng.uniform(1, 60));
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ((a + b) * Rational(3), a * Rational(3) + b * Rational(3));
    if (b != Rational(0)) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(a < b, a.to_double() < b.to_double() && a != b);
    EXPECT_LE(Rational(a.floor()), a);
    EXPECT_GT(Rational(a.floor() + 1), a);
  }
}

TEST(QuadIrr, NormalForm) {
  QuadIrr s8(0, 1, 1, 8);
  EXPECT_EQ(s8, QuadIrr(0, 2, 1, 2));
  EXPECT_EQ(QuadIrr(2, 2, 4, 5), QuadIrr(1, 1, 2, 5));
  EXPECT_TRUE(QuadIrr(3, 0, 6, 7).is_rational());
  EXPECT_EQ(QuadIrr(3, 0, 6, 7).rational_value(), Rational(1, 2));
  EXPECT_EQ(QuadIrr(0, 3, 1, 4), QuadIrr(6, 0, 1, 1));
  EXPECT_EQ(QuadIrr::parse("(1+1*sqrt(5))/2"), phi());
  EXPECT_EQ(QuadIrr::parse(phi().to_string()), phi());
  EXPECT_EQ(QuadIrr::parse("sqrt(2)"), QuadIrr(0, 1, 1, 2));
}

TEST(QuadIrr, SignOfSmallExamples) {
  EXPECT_EQ(quad_sign(QuadIrr(2, -1, 1, 5)), -1);
  EXPECT_EQ(quad_sign(QuadIrr(3, -1, 1, 5)), 1);
  EXPECT_EQ(quad_sign(QuadIrr(0, 0, 1, 1)), 0);
  EXPECT_EQ(quad_compare(QuadIrr(0, 1, 1, 2), QuadIrr(0, 1, 1, 3)), -1);
  EXPECT_EQ(quad_compare(QuadIrr(0, 1, 1, 8), QuadIrr(0, 2, 1, 2)), 0);
}

TEST(QuadIrr, SignAgreesWithMultiprecisionNearZero) {
  Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    std::int64_t d = rng.uniform(2, 100000), b = rng.uniform(-100000, 100000), c = rng.uniform(1, 1000);
    long double root = std::sqrt(static_cast<long double>(d)) * static_cast<long double>(b);
    std::int64_t a = -std::llround(root) + rng.uniform(-2, 2);
    QuadIrr q(a, b, c, d);
    EXPECT_EQ(quad_sign(q), quad_sign_multiprecision(q)) << q.to_string();
  }
}

TEST(QuadIrr, FloorBracketsValue) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    QuadIrr q(rng.uniform(-1000000, 1000000), rng.uniform(-1000, 1000), rng.uniform(1, 500), rng.uniform(2, 5000));
    std::int64_t f = q.floor();
    EXPECT_GE(quad_compare(q, QuadIrr(Rational(f))), 0) << q.to_string();
    EXPECT_LT(quad_compare(q, QuadIrr(Rational(f + 1))), 0) << q.to_string();
  }
}

TEST(GroupSpec, ParseRoundTrip) {
  for (const auto& spec : all_kinds()) EXPECT_EQ(GroupSpec::parse(spec.to_string()), spec) << spec.to_string();
  EXPECT_EQ(GroupSpec::parse("lexint:3"), GroupSpec::lex_int(3));
  EXPECT_EQ(GroupSpec::parse("z+alpha:(1+1*sqrt(5))/2"), GroupSpec::z_plus_alpha_z(phi()));
  EXPECT_THROW(GroupSpec::parse("int2"), std::invalid_argument);
  EXPECT_THROW(GroupSpec::z_plus_alpha_z(QuadIrr(Rational(1, 2))), std::invalid_argument);
}

TEST(Group, ElementTextRoundTrip) {
  Rng rng(14);
  for (const auto& spec : all_kinds())
    for (int i = 0; i < 200; ++i) {
      GroupElement x = sample(rng, spec);
      EXPECT_EQ(parse_element(spec, format_element(spec, x)), x) << format_element(spec, x);
    }
  auto zp = GroupSpec::z_plus_alpha_z(phi());
  EXPECT_EQ(parse_element(zp, "1+1*alpha"), el(zp, {1, 1}));
  EXPECT_EQ(parse_element(zp, "-alpha"), el(zp, {0, -1}));
  EXPECT_THROW(parse_element(GroupSpec::integers(), "1/2"), std::invalid_argument);
  EXPECT_THROW(parse_element(GroupSpec::lex_int(2), "(1,2,3)"), std::invalid_argument);
}

TEST(Group, OrderedGroupLaws) {
  Rng rng(15);
  for (const auto& spec : all_kinds())
    for (int i = 0; i < 500; ++i) {
      GroupElement x = sample(rng, spec), y = sample(rng, spec), z = sample(rng, spec);
      EXPECT_EQ(add(spec, add(spec, x, y), z), add(spec, x, add(spec, y, z)));
      EXPECT_EQ(add(spec, x, y), add(spec, y, x));
      EXPECT_EQ(add(spec, x, neg(spec, x)), zero(spec));
      EXPECT_EQ(scale(spec, x, 3), add(spec, x, add(spec, x, x)));
      EXPECT_EQ(cmp(spec, x, y), -cmp(spec, y, x));
      EXPECT_EQ(cmp(spec, x, y), cmp(spec, add(spec, x, z), add(spec, y, z)));
      EXPECT_EQ(cmp(spec, x, y) == 0, x == y);
      if (cmp(spec, x, y) < 0 && cmp(spec, y, z) < 0) EXPECT_LT(cmp(spec, x, z), 0);
    }
}

TEST(Group, ArchimedeanOrderMatchesReals) {
  Rng rng(16);
  auto zp = GroupSpec::z_plus_alpha_z(phi());
  const long double a = (1.0L + std::sqrt(5.0L)) / 2.0L;
  for (int i = 0; i < 2000; ++i) {
    GroupElement x = sample(rng, zp, 1000), y = sample(rng, zp, 1000);
    long double rx = x.coords[0].to_double() + a * x.coords[1].to_double();
    long double ry = y.coords[0].to_double() + a * y.coords[1].to_double();
    if (std::fabs(rx - ry) > 1e-9L) EXPECT_EQ(cmp(zp, x, y) < 0, rx < ry);
    EXPECT_EQ(quad_compare(real_value(zp, x), real_value(zp, y)), cmp(zp, x, y));
  }
}

TEST(Group, UnitElements) {
  EXPECT_EQ(unit_element(GroupSpec::integers()), el(GroupSpec::integers(), {1}));
  EXPECT_EQ(unit_element(GroupSpec::lex_int(2)), el(GroupSpec::lex_int(2), {0, 1}));
  EXPECT_FALSE(unit_element(GroupSpec::rationals()).has_value());
  EXPECT_FALSE(unit_element(GroupSpec::z_plus_alpha_z(phi())).has_value());
  EXPECT_FALSE(unit_element(GroupSpec::dyadic()).has_value());
}

TEST(Group, ResiduesPartitionTheGroup) {
  Rng rng(17);
  for (const auto& spec : all_kinds())
    for (std::int64_t n = 1; n <= 6; ++n) {
      auto reps = residues(spec, n);
      std::size_t expect = 1;
      switch (spec.kind()) {
        case GroupKind::Int:
          expect = n;
          break;
        case GroupKind::LexInt:
        case GroupKind::ZPlusAlphaZ:
          expect = n * n;
          break;
        case GroupKind::Dyadic:
          expect = n / (n & -n);
          break;
        default:
          break;
      }
      EXPECT_EQ(reps.size(), expect) << spec.to_string() << " n = " << n;
      for (int i = 0; i < 50; ++i) {
        GroupElement x = sample(rng, spec);
        GroupElement r = residue(spec, x, n);
        EXPECT_TRUE(std::find(reps.begin(), reps.end(), r) != reps.end());
        EXPECT_TRUE(in_nM(spec, sub(spec, x, r), n));
        EXPECT_EQ(residue(spec, add(spec, x, scale(spec, r, n)), n), r);
      }
    }
}

TEST(Group, ConvexSubgroupMembership) {
  auto lex = GroupSpec::lex_int(3);
  ConvexSubgroup h{lex, 1};
  EXPECT_TRUE(h.contains(el(lex, {0, 5, -2})));
  EXPECT_FALSE(h.contains(el(lex, {1, 0, 0})));
  EXPECT_TRUE((ConvexSubgroup{lex, 3}).is_zero());
  EXPECT_TRUE((ConvexSubgroup{lex, 0}).is_whole());
}
