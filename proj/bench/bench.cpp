#include <benchmark/benchmark.h>

#include "cnckit/suites.hpp"

using namespace cnckit;

namespace {

struct OracleFixture {
  GroupSpec spec = GroupSpec::lex_int(2);
  SetExpr expr = parse_expr("(coset(6,(1,2)) & interval([-40],[40])) | (coset(4,(0,3)) \\ point((5,5))) | !interval([-10],[10])");
  std::vector<GroupElement> elements = enum_window(GroupWindow{spec, -150, 150, 1, std::nullopt, std::nullopt, 1 << 20});
  GroupOracle oracle{expr, spec};
};

const OracleFixture& fixture() {
  static const OracleFixture f;
  return f;
}

void BM_OracleBitmapSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(bitmap_serial(f.elements, f.oracle));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.elements.size()));
}

void BM_OracleBitmapParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(bitmap_parallel(f.elements, f.oracle));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.elements.size()));
}

void BM_SymbolicBitmap(benchmark::State& state) {
  const auto& f = fixture();
  CncSet s = eval_cnc(f.expr, f.spec);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_eval(s, f.elements, state.range(0) != 0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.elements.size()));
}

void run_suite(benchmark::State& state, const char* name, bool parallel) {
  SuiteOptions opt;
  opt.parallel = parallel;
  opt.scale = 0.05;
  const SuiteInfo* s = find_suite(name);
  for (auto _ : state) {
    SuiteReport r = s->run(opt);
    if (!r.passed()) state.SkipWithError("suite failed");
    benchmark::DoNotOptimize(r);
  }
}

void BM_SuiteSerial(benchmark::State& state, const char* name) { run_suite(state, name, false); }
void BM_SuiteParallel(benchmark::State& state, const char* name) { run_suite(state, name, true); }

}  // namespace

BENCHMARK(BM_OracleBitmapSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleBitmapParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicBitmap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteSerial, boolean, "boolean")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteParallel, boolean, "boolean")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteSerial, decompose, "decompose")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteParallel, decompose, "decompose")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteSerial, padic, "padic")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuiteParallel, padic, "padic")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
