#include <gtest/gtest.h>

#include "cnckit/json_io.hpp"
#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(Json, CncRoundTrip) {
  Rng rng(101);
  for (const auto& spec : all_kinds())
    for (int i = 0; i < 50; ++i) {
      CncSet a = random_set(rng, spec);
      Json j = cnc_to_json(a);
      EXPECT_EQ(cnc_from_json(j), a) << j.dump();
      EXPECT_EQ(cnc_from_json(Json::parse(j.dump())), a);
    }
}

TEST(Json, KeyOrderIsStable) {
  auto z = GroupSpec::integers();
  Json j = cnc_to_json(coset_set(z, 2, el(z, {1})));
  EXPECT_EQ(j.dump(),
            R"({"group":"int","modulus":2,"classes":[{"residue":"1","pieces":[{"lower":{"kind":"-inf"},"upper":{"kind":"+inf"}}]}]})");
}

TEST(Json, CutsAndConvexSets) {
  auto q = GroupSpec::rationals();
  ConvexSet c{closed_at(q, el(q, {0})), gap_at(q, QuadIrr(0, 1, 1, 2))};
  EXPECT_EQ(convex_from_json(q, convex_to_json(q, c)), c);
  auto lex = GroupSpec::lex_int(2);
  Cut p = open_prefix(lex, {Rational(3)});
  EXPECT_EQ(cut_from_json(lex, cut_to_json(lex, p)), p);
}

TEST(Json, PAdicRoundTrip) {
  PAdicContext c(5);
  PAdicSet s = padic_set_of(parse_expr("pnpow(3,2,1) | (pnpow(2) & ball(1/5,4))"), c);
  PAdicSet back = padic_set_from_json(padic_set_to_json(s));
  EXPECT_EQ(back.p, s.p);
  EXPECT_EQ(back.pieces, s.pieces);
}

TEST(Json, MalformedInputIsRejected) {
  EXPECT_THROW(cnc_from_json(Json::parse(R"({"group":"int"})")), std::exception);
  EXPECT_THROW(cnc_from_json(Json::parse(R"({"group":"nope","modulus":1,"classes":[]})")), std::invalid_argument);
}
