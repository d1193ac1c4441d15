#include <gtest/gtest.h>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(Parse, Structure) {
  SetExpr e = parse_expr("coset(3,1) & interval([0],[100])");
  ASSERT_EQ(e.op, SetExpr::Op::Intersect);
  EXPECT_EQ(e.children[0].name, "coset");
  EXPECT_EQ(e.children[0].args, (std::vector<std::string>{"3", "1"}));
  EXPECT_EQ(e.children[1].name, "interval");
  EXPECT_EQ(e.children[1].args, (std::vector<std::string>{"[0]", "[100]"}));
  EXPECT_EQ(parse_expr("!!a()").op, SetExpr::Op::Complement);
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  try {
    parse_expr("!(");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_expr("coset(2,0) | point(1) & point(2)"), SyntaxError);
  EXPECT_THROW(parse_expr("coset(2,0"), SyntaxError);
  EXPECT_THROW(parse_expr(""), SyntaxError);
  EXPECT_THROW(parse_expr("point(1) point(2)"), SyntaxError);
}

TEST(Parse, ChainsAssociateLeft) {
  SetExpr e = parse_expr("point(1) | point(2) | point(3)");
  ASSERT_EQ(e.op, SetExpr::Op::Union);
  EXPECT_EQ(e.children[0].op, SetExpr::Op::Union);
  EXPECT_EQ(e.children[1].name, "point");
  SetExpr d = parse_expr("all() \\ point(1) \\ point(2)");
  EXPECT_EQ(d.children[0].op, SetExpr::Op::Difference);
}

TEST(Parse, PrintRoundTrip) {
  for (const char* text : {"coset(3,1) & interval([0],[100])", "!(point(1) | point(2))", "(coset(2,0) \\ point(4)) | point(7)",
                           "arc(0,5) | coset(2,1)", "pnpow(2) | (pnpow(2,2) & ball(0,50))", "!!all()"})
    EXPECT_EQ(print_expr(parse_expr(text)), text);
  Rng rng(81);
  for (const auto& spec : all_kinds())
    for (int i = 0; i < 100; ++i) {
      SetExpr e = random_group_expr(rng, spec, RandomParams{});
      std::string t = print_expr(e);
      EXPECT_EQ(print_expr(parse_expr(t)), t);
    }
}

TEST(Parse, SpacingIsCanonicalized) {
  EXPECT_EQ(print_expr(parse_expr("  coset( 4 ,0 )|coset(4,2)")), "coset(4,0) | coset(4,2)");
}

TEST(Types, AtomsAreCheckedAgainstTheContext) {
  auto z = GroupSpec::integers();
  EXPECT_THROW(eval_cnc(parse_expr("arc(0,5)"), z), TypeError);
  EXPECT_THROW(eval_cnc(parse_expr("coset(0,1)"), z), TypeError);
  EXPECT_THROW(eval_cnc(parse_expr("point(1/2)"), z), TypeError);
  EXPECT_THROW(eval_cnc(parse_expr("interval(0)"), z), TypeError);
  try {
    type_check_group(parse_expr("coset(2,0) | bogus(1)"), z);
    FAIL() << "no error";
  } catch (const TypeError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
  auto s = CyclicSpec::z_with_alpha(phi());
  EXPECT_NO_THROW(type_check_circle(parse_expr("arc(0,5) | coset(2,1)"), s));
  EXPECT_THROW(type_check_padic(parse_expr("arc(0,5)"), PAdicContext(3)), TypeError);
}

TEST(Types, IntervalFlags) {
  auto z = GroupSpec::integers();
  auto members = [&](const char* text) {
    CncSet s = eval_cnc(parse_expr(text), z);
    std::vector<std::int64_t> out;
    for (std::int64_t k = -5; k <= 10; ++k)
      if (cnc_member(el(z, {k}), s)) out.push_back(k);
    return out;
  };
  EXPECT_EQ(members("interval(0,3)"), (std::vector<std::int64_t>{0, 1, 2, 3}));
  EXPECT_EQ(members("interval(0,3,())"), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(members("interval(0,3,[))"), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(members("interval(0,3,(])"), (std::vector<std::int64_t>{1, 2, 3}));
}
