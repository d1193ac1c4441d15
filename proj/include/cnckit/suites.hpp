#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cnckit/json_io.hpp"
#include "cnckit/oracle.hpp"

namespace cnckit {

struct Failure {
  std::string input, expected, got;
};

struct SuiteReport {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;  // the first max_failures of them
  double seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return failure_count == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  bool parallel = true;
  /// Multiplies every case count (at least one case is kept); 1 is the full suite.
  double scale = 1.0;
  std::size_t max_failures = 20;
};

/// One seeded generator per case, so serial and parallel runs are identical.
std::uint64_t case_seed(std::uint64_t seed, std::string_view salt, std::int64_t index);

using CaseBody = std::function<void(Rng& rng, std::int64_t index, std::vector<Failure>& out)>;

/// Runs `count` independent cases and collects their failures in case order.
/// An exception escaping a case is recorded as a failure of that case.
SuiteReport run_cases_serial(const std::string& name, std::int64_t count, const SuiteOptions& opt, const CaseBody& body);
SuiteReport run_cases_parallel(const std::string& name, std::int64_t count, const SuiteOptions& opt, const CaseBody& body);
SuiteReport run_cases(const std::string& name, std::int64_t count, const SuiteOptions& opt, const CaseBody& body);

/// Appends `part` to `into` (cases, failures, notes, time).
void merge_report(SuiteReport& into, const SuiteReport& part, std::size_t max_failures);

struct SuiteInfo {
  std::string name;
  std::string title;
  std::function<SuiteReport(const SuiteOptions&)> run;
};

/// The property suites, in acceptance order, followed by `examples`.
const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

SuiteReport suite_boolean(const SuiteOptions& opt);
SuiteReport suite_canonical(const SuiteOptions& opt);
SuiteReport suite_subgroup_reduce(const SuiteOptions& opt);
SuiteReport suite_regular(const SuiteOptions& opt);
SuiteReport suite_decompose(const SuiteOptions& opt);
SuiteReport suite_pullback(const SuiteOptions& opt);
SuiteReport suite_cyclic(const SuiteOptions& opt);
SuiteReport suite_arcs(const SuiteOptions& opt);
SuiteReport suite_padic(const SuiteOptions& opt);
SuiteReport suite_irrational(const SuiteOptions& opt);
SuiteReport suite_examples(const SuiteOptions& opt);

/// {"suite", "cases", "failures": [{"input", "expected", "got"}], ...}
Json report_to_json(const SuiteReport& r);

// Oracles used by the suites, exposed for the unit tests -----------------------------

/// x in (Q_p^x)^n by searching y = p^(v/n) * w over w in [1, p^(2 v_p(n) + 1))
/// for v(y^n - x) >= v(x) + 2 v_p(n) + 1, with plain rational arithmetic.
bool nth_power_by_search(std::int64_t p, const Rational& x, std::int64_t n);
/// |Q_p^x / P_n| by merging the classes of p^j * w, 0 <= j < n, under nth_power_by_search.
std::int64_t power_index_by_merge(std::int64_t p, std::int64_t n);

/// Sign of (a + b sqrt(d)) / c from a 64-digit evaluation, escalating to 160
/// digits near zero; 2 when still undecided.
int quad_sign_multiprecision(const QuadIrr& q);

}  // namespace cnckit
