#include <gtest/gtest.h>

#include <set>

#include "cnckit/suites.hpp"
#include "support.hpp"

using namespace cnckit;
using namespace cnckit::testing;

TEST(Window, SortedAndCapped) {
  auto zp = GroupSpec::z_plus_alpha_z(phi());
  auto w = enum_window(window(zp, -1, 1));
  std::vector<GroupElement> want;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{-1, -1}, {0, -1}, {-1, 0}, {1, -1}, {0, 0}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}})
    want.push_back(el(zp, {p, q}));
  EXPECT_EQ(w, want);
  for (const auto& spec : all_kinds()) {
    auto v = enum_window(window(spec, -3, 3, den_for(spec)));
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(cmp(spec, v[i - 1], v[i]), 0);
  }
  GroupWindow big = window(GroupSpec::lex_int(2), -100, 100);
  big.cap = 1000;
  EXPECT_THROW(enum_window(big), CapExceeded);
}

TEST(Rng, DocumentedDraws) {
  Rng a(5);
  std::mt19937_64 ref(5);
  for (int i = 0; i < 100; ++i) {
    auto want = static_cast<std::int64_t>(ref() % 21) - 10;
    EXPECT_EQ(a.uniform(-10, 10), want);
  }
}

TEST(RandomInstances, Reproducible) {
  auto z = GroupSpec::integers();
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(print_expr(random_instance(seed, z, {})), print_expr(random_instance(seed, z, {})));
  SetExpr fixture = random_instance(0, z, RandomParams{});
  CncSet s = eval_cnc(fixture, z);
  EXPECT_LE(s.modulus, 6 * 5 * 4);
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 200; ++seed) distinct.insert(print_expr(random_instance(seed, z, {})));
  EXPECT_GT(distinct.size(), 150u);
}

TEST(Bitmap, ParallelMatchesSerial) {
  Rng rng(91);
  for (const auto& spec : all_kinds()) {
    auto w = enum_window(window(spec, -15, 15, den_for(spec)));
    for (int i = 0; i < 10; ++i) {
      SetExpr e = random_group_expr(rng, spec, RandomParams{});
      GroupOracle o(e, spec);
      EXPECT_EQ(bitmap_serial(w, o), bitmap_parallel(w, o));
      CncSet s = eval_cnc(e, spec);
      EXPECT_EQ(symbolic_eval(s, w, false), symbolic_eval(s, w, true));
    }
  }
}

TEST(Bitmap, ParallelPropagatesExceptions) {
  std::vector<int> xs(100);
  EXPECT_THROW(bitmap_parallel(xs, [](int) -> bool { throw std::runtime_error("boom"); }), std::runtime_error);
}

TEST(Suites, CaseSeedsDependOnSaltAndIndex) {
  EXPECT_EQ(case_seed(1, "a", 3), case_seed(1, "a", 3));
  EXPECT_NE(case_seed(1, "a", 3), case_seed(1, "a", 4));
  EXPECT_NE(case_seed(1, "a", 3), case_seed(1, "b", 3));
  EXPECT_NE(case_seed(1, "a", 3), case_seed(2, "a", 3));
}

TEST(Suites, SerialAndParallelRunsAgree) {
  SuiteOptions serial, parallel;
  serial.parallel = false;
  serial.scale = parallel.scale = 0.05;
  for (const char* name : {"boolean", "decompose", "padic"}) {
    SuiteReport a = find_suite(name)->run(serial), b = find_suite(name)->run(parallel);
    EXPECT_EQ(report_to_json(a), report_to_json(b)) << name;
    EXPECT_TRUE(a.passed()) << report_to_json(a).dump(2);
  }
}

TEST(Suites, FailuresAreCollectedInCaseOrder) {
  SuiteOptions opt;
  opt.max_failures = 3;
  SuiteReport r = run_cases_parallel("t", 10, opt, [](Rng&, std::int64_t i, std::vector<Failure>& out) {
    if (i % 2 == 1) out.push_back(Failure{std::to_string(i), "", ""});
    if (i == 8) throw std::runtime_error("x");
  });
  EXPECT_EQ(r.cases, 10);
  EXPECT_EQ(r.failure_count, 6);
  ASSERT_EQ(r.failures.size(), 3u);
  EXPECT_EQ(r.failures[0].input, "1");
  EXPECT_EQ(r.failures[2].input, "5");
}

TEST(Oracle, RelatedScanMatchesLibraryOnIntegers) {
  Rng rng(92);
  auto z = GroupSpec::integers();
  for (int i = 0; i < 20; ++i) {
    SetExpr e = random_group_expr(rng, z, RandomParams{});
    CncSet x = eval_cnc(e, z);
    auto ctx = make_context(x);
    GroupOracle o(e, z);
    for (int j = 0; j < 20; ++j) {
      GroupElement a = el(z, {rng.uniform(-30, 30)}), b = el(z, {rng.uniform(-30, 30)});
      auto direct = oracle_related(a, b, [&](const GroupElement& y) { return o(y); }, z, ctx.n);
      ASSERT_TRUE(direct.has_value());
      EXPECT_EQ(*direct, related(a, b, ctx)) << print_expr(e);
    }
  }
}
