#include <cstdio>
#include <string>

#include "cnckit/suites.hpp"

using namespace cnckit;

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
  double limit_seconds;
};

const Criterion kCriteria[] = {
    {1, "boolean", "boolean operations match the pointwise oracle", 60},
    {2, "canonical", "canonical forms: idempotent, equality iff equal bitmaps", 30},
    {3, "subgroup-reduce", "subgroups of Z at their minimal modulus", 10},
    {4, "regular", "R_n closed form and interval/coset intersection", 30},
    {5, "decompose", "decomposition, relation axioms, finite classes", 120},
    {6, "pullback", "pullback along lexicographic quotients", 30},
    {7, "cyclic", "cyclic order axioms, cover, local group, index bound", 120},
    {8, "arcs", "arc set algebra over S_phi", 60},
    {9, "padic", "nth powers and power index against brute force", 60},
    {10, "irrational", "exact quadratic irrational decisions", 30},
};

}  // namespace

int main() {
  SuiteOptions opt;
  opt.max_failures = 5;
  int failed = 0;
  for (const auto& c : kCriteria) {
    SuiteReport r = find_suite(c.suite)->run(opt);
    bool in_time = r.seconds < c.limit_seconds;
    bool ok = r.passed() && in_time;
    failed += ok ? 0 : 1;
    std::printf("criterion %2d %s  %-56s cases %7lld  failures %lld  %.1f s (limit %.0f s)\n", c.id, ok ? "PASS" : "FAIL", c.title,
                static_cast<long long>(r.cases), static_cast<long long>(r.failure_count), r.seconds, c.limit_seconds);
    for (const auto& f : r.failures)
      std::printf("    %s: expected %s, got %s\n", f.input.c_str(), f.expected.c_str(), f.got.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
