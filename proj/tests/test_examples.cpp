#include <gtest/gtest.h>

#include "cnckit/suites.hpp"

using namespace cnckit;

TEST(Examples, RecomputedByOracles) {
  SuiteOptions opt;
  opt.max_failures = 100;
  SuiteReport r = suite_examples(opt);
  EXPECT_GT(r.cases, 40);
  for (const auto& f : r.failures) ADD_FAILURE() << f.input << ": expected " << f.expected << ", got " << f.got;
  EXPECT_EQ(r.failure_count, 0);
}
