#include <gtest/gtest.h>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

namespace {

struct Case {
  GroupSpec spec;
  GroupWindow w;
};

std::vector<Case> cases() {
  auto zp = GroupSpec::z_plus_alpha_z(phi());
  return {{GroupSpec::integers(), window(GroupSpec::integers(), -40, 40)},
          {GroupSpec::rationals(), window(GroupSpec::rationals(), -6, 6, 4)},
          {GroupSpec::lex_int(2), window(GroupSpec::lex_int(2), -6, 6)},
          {GroupSpec::lex_rat(2), window(GroupSpec::lex_rat(2), -3, 3, 2)},
          {zp, window(zp, -8, 8)}};
}

RandomParams params_for(const GroupSpec& spec) {
  RandomParams p;
  p.range = spec.kind() == GroupKind::Int ? 30 : 5;
  return p;
}

}  // namespace

TEST(Cnc, BooleanOperationsArePointwise) {
  Rng rng(31);
  for (const auto& c : cases()) {
    auto w = enum_window(c.w);
    for (int i = 0; i < 60; ++i) {
      SetExpr ea = random_group_expr(rng, c.spec, params_for(c.spec)), eb = random_group_expr(rng, c.spec, params_for(c.spec));
      CncSet a = eval_cnc(ea, c.spec), b = eval_cnc(eb, c.spec);
      GroupOracle oa(ea, c.spec), ob(eb, c.spec);
      CncSet u = cnc_union(a, b), n = cnc_intersect(a, b), d = cnc_difference(a, b), m = cnc_complement(a);
      for (const auto& x : w) {
        bool ia = oa(x), ib = ob(x);
        ASSERT_EQ(cnc_member(x, a), ia) << print_expr(ea) << " at " << format_element(c.spec, x);
        EXPECT_EQ(cnc_member(x, u), ia || ib);
        EXPECT_EQ(cnc_member(x, n), ia && ib);
        EXPECT_EQ(cnc_member(x, d), ia && !ib);
        EXPECT_EQ(cnc_member(x, m), !ia);
      }
    }
  }
}

TEST(Cnc, CanonicalFormIsStable) {
  Rng rng(32);
  for (const auto& c : cases())
    for (int i = 0; i < 80; ++i) {
      CncSet a = random_set(rng, c.spec, params_for(c.spec));
      EXPECT_EQ(canonicalize(c.spec, pieces_of(a)), a) << format_cnc(a);
      EXPECT_EQ(cnc_complement(cnc_complement(a)), a);
      EXPECT_EQ(cnc_union(a, a), a);
      EXPECT_EQ(canonicalize(c.spec, pieces_of(refine(a, a.modulus * 6))), a);
    }
}

TEST(Cnc, RefineKeepsMembers) {
  Rng rng(33);
  for (const auto& c : cases()) {
    auto w = enum_window(c.w);
    for (int i = 0; i < 30; ++i) {
      CncSet a = random_set(rng, c.spec, params_for(c.spec));
      CncSet r = refine(a, a.modulus * 4);
      EXPECT_EQ(r.modulus, effective_modulus(c.spec, a.modulus * 4));
      for (const auto& x : w) EXPECT_EQ(cnc_member(x, r), cnc_member(x, a));
    }
  }
}

TEST(Cnc, TranslationAndNegationArePointwise) {
  Rng rng(34);
  for (const auto& c : cases()) {
    auto w = enum_window(c.w);
    for (int i = 0; i < 30; ++i) {
      CncSet a = random_set(rng, c.spec, params_for(c.spec));
      GroupElement g = sample(rng, c.spec, 3);
      CncSet t = cnc_translate(a, g), n = cnc_negate(a);
      for (const auto& x : w) {
        EXPECT_EQ(cnc_member(x, t), cnc_member(sub(c.spec, x, g), a));
        EXPECT_EQ(cnc_member(x, n), cnc_member(neg(c.spec, x), a));
      }
    }
  }
}

TEST(Cnc, ClassifyFiniteSets) {
  auto z = GroupSpec::integers();
  CncSet a = eval_cnc(parse_expr("(coset(3,1) & interval(0,10)) | point(40)"), z);
  Classification k = classify(a);
  ASSERT_EQ(k.kind, Classification::Kind::Finite);
  std::vector<std::int64_t> got;
  for (const auto& x : k.elements) got.push_back(x.coords[0].num());
  EXPECT_EQ(got, (std::vector<std::int64_t>{1, 4, 7, 10, 40}));
  EXPECT_EQ(a.modulus, 1);
  EXPECT_EQ(classify(empty_set(z)).kind, Classification::Kind::Empty);
  EXPECT_EQ(classify(coset_set(z, 2, el(z, {0}))).kind, Classification::Kind::Infinite);
  auto q = GroupSpec::rationals();
  EXPECT_EQ(classify(eval_cnc(parse_expr("interval(0,1)"), q)).kind, Classification::Kind::Infinite);
  EXPECT_EQ(classify(eval_cnc(parse_expr("point(0) | point(1/2)"), q)).elements.size(), 2u);
}

TEST(Cnc, SubgroupReduction) {
  auto z = GroupSpec::integers();
  CncSet a = canonicalize(z, {CncPiece{whole_line(), el(z, {0}), 4}, CncPiece{whole_line(), el(z, {2}), 4}});
  EXPECT_EQ(a, coset_set(z, 2, el(z, {0})));
  EXPECT_EQ(subgroup_reduce(eval_cnc(parse_expr("coset(6,0) | coset(6,3)"), z)).modulus, 3);
  EXPECT_THROW(subgroup_reduce(eval_cnc(parse_expr("coset(6,1) | coset(6,3)"), z)), std::invalid_argument);
  EXPECT_THROW(subgroup_reduce(eval_cnc(parse_expr("coset(2,0) & interval(0,+inf)"), z)), std::invalid_argument);
}

TEST(Cnc, SubgroupReductionAgainstDifferences) {
  Rng rng(35);
  auto z = GroupSpec::integers();
  for (int i = 0; i < 100; ++i) {
    std::int64_t g = rng.uniform(1, 12), t = rng.uniform(1, 3);
    std::vector<CncPiece> pieces;
    for (std::int64_t k = 0; k < t; ++k) pieces.push_back(CncPiece{whole_line(), el(z, {g * k + g * t * rng.uniform(-2, 2)}), g * t});
    CncSet s = subgroup_reduce(canonicalize(z, pieces));
    auto member = [&](std::int64_t x) { return cnc_member(el(z, {x}), s); };
    EXPECT_EQ(s.modulus, gcd_of_differences(member, 200));
  }
}

TEST(Cnc, DivisibleGroupsCollapseModuli) {
  auto q = GroupSpec::rationals();
  EXPECT_EQ(coset_set(q, 5, el(q, {Rational(1, 3)})), whole_set(q));
  EXPECT_EQ(effective_modulus(q, 12), 1);
}

TEST(Cnc, Formatting) {
  auto z = GroupSpec::integers();
  EXPECT_EQ(format_cnc(empty_set(z)), "group int, modulus 1: empty");
  EXPECT_NE(format_cnc(coset_set(z, 2, el(z, {1}))).find("2"), std::string::npos);
}
