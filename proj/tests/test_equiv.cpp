#include <gtest/gtest.h>

#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

namespace {

std::int64_t num(const GroupElement& x) { return x.coords[0].num(); }

}  // namespace

TEST(Equiv, RelationAxiomsOnWindows) {
  Rng rng(51);
  for (const auto& spec : {GroupSpec::integers(), GroupSpec::lex_int(2), GroupSpec::rationals(), GroupSpec::z_plus_alpha_z(phi())}) {
    RandomParams p;
    p.range = spec.kind() == GroupKind::Int ? 20 : 4;
    for (int i = 0; i < 10; ++i) {
      CncSet x = random_set(rng, spec, p);
      auto ctx = make_context(x, x.modulus * rng.uniform(1, 2));
      auto w = enum_window(window(spec, -4, 4, den_for(spec) > 1 ? 2 : 1));
      for (std::size_t a = 0; a < w.size(); a += 3) {
        EXPECT_TRUE(related(w[a], w[a], ctx));
        ConvexSet cls = eclass(w[a], ctx);
        for (std::size_t b = 0; b < w.size(); b += 2) {
          bool r = related(w[a], w[b], ctx);
          EXPECT_EQ(r, related(w[b], w[a], ctx));
          EXPECT_EQ(r, convex_member(spec, w[b], cls));
        }
      }
    }
  }
}

TEST(Equiv, Examples) {
  auto z = GroupSpec::integers();
  auto even = make_context(eval_cnc(parse_expr("coset(2,0)"), z), 2);
  EXPECT_TRUE(related(el(z, {0}), el(z, {100}), even));
  auto capped = make_context(eval_cnc(parse_expr("coset(2,0) & interval(-inf,10)"), z), 2);
  EXPECT_FALSE(related(el(z, {0}), el(z, {20}), capped));

  auto q = GroupSpec::rationals();
  auto open = make_context(eval_cnc(parse_expr("interval(0,sqrt(2),())"), q));
  EXPECT_EQ(eclass(el(q, {1}), open), (ConvexSet{closed_at(q, el(q, {0})), gap_at(q, QuadIrr(0, 1, 1, 2))}));

  auto pts = make_context(eval_cnc(parse_expr("point(0) | interval(1,2,())"), q));
  auto fc = finite_classes(pts);
  ASSERT_EQ(fc.size(), 3u);
  EXPECT_EQ(fc[1], point_set(q, el(q, {1})));

  EXPECT_THROW(make_context(eval_cnc(parse_expr("coset(2,0)"), z), 3), std::invalid_argument);
}

TEST(Equiv, FiniteClassesMatchRunsOfRelatedNeighbours) {
  Rng rng(52);
  auto z = GroupSpec::integers();
  for (int i = 0; i < 30; ++i) {
    RandomParams p;
    p.range = 15;
    CncSet x = random_set(rng, z, p);
    auto ctx = make_context(x, x.modulus * rng.uniform(1, 3));
    std::vector<std::vector<std::int64_t>> runs{{-60}};
    for (std::int64_t a = -60; a < 60; ++a) {
      if (related(el(z, {a}), el(z, {a + 1}), ctx)) runs.back().push_back(a + 1);
      else runs.push_back({a + 1});
    }
    // runs touching the ends of the window may continue outside it
    std::vector<std::vector<std::int64_t>> want, got;
    if (runs.size() > 2) want.assign(runs.begin() + 1, runs.end() - 1);
    for (const auto& c : finite_classes(ctx)) {
      std::vector<std::int64_t> m;
      for (const auto& e : classify(convex_cnc(z, c)).elements) m.push_back(num(e));
      got.push_back(m);
    }
    EXPECT_EQ(got, want) << format_cnc(x);
  }
}

TEST(Decompose, ReassemblesRandomSets) {
  Rng rng(53);
  for (const auto& spec : {GroupSpec::integers(), GroupSpec::rationals(), GroupSpec::lex_int(2), GroupSpec::lex_rat(2),
                           GroupSpec::z_plus_alpha_z(phi())}) {
    RandomParams p;
    p.range = spec.kind() == GroupKind::Int ? 30 : 5;
    for (int i = 0; i < 40; ++i) {
      CncSet x = random_set(rng, spec, p);
      Decomposition d = decompose(x);
      EXPECT_EQ(reassemble(d), x) << format_cnc(x);
      EXPECT_EQ(d.n, x.modulus);
      Decomposition d2 = decompose(x, x.modulus * 2);
      EXPECT_EQ(reassemble(d2), x) << format_cnc(x);
    }
  }
}

TEST(Decompose, TwoResidueBlocks) {
  auto z = GroupSpec::integers();
  CncSet x = eval_cnc(parse_expr("(coset(3,1) & interval(0,20)) | (coset(3,0) & interval(100,120))"), z);
  Decomposition d = decompose(x, 3);
  EXPECT_EQ(reassemble(d), x);
  std::vector<std::vector<std::int64_t>> residues;
  for (const auto& b : d.classes) {
    std::vector<std::int64_t> r;
    for (const auto& e : b.residues) r.push_back(num(e));
    residues.push_back(r);
  }
  EXPECT_EQ(residues, (std::vector<std::vector<std::int64_t>>{{1}, {0}}));
}
