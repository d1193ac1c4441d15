#include "cnckit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace cnckit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::int64_t scaled(std::int64_t count, double scale) {
  return std::max<std::int64_t>(1, std::llround(static_cast<double>(count) * scale));
}

void run_one(const CaseBody& body, const std::string& name, const SuiteOptions& opt, std::int64_t i,
             std::vector<Failure>& out) {
  Rng rng(case_seed(opt.seed, name, i));
  try {
    body(rng, i, out);
  } catch (const std::exception& e) {
    out.push_back(Failure{name + " case " + std::to_string(i), "no exception", e.what()});
  }
}

SuiteReport collect(const std::string& name, std::vector<std::vector<Failure>>& per_case, const SuiteOptions& opt) {
  SuiteReport r;
  r.suite = name;
  r.cases = static_cast<std::int64_t>(per_case.size());
  for (auto& fs : per_case) {
    r.failure_count += static_cast<std::int64_t>(fs.size());
    for (auto& f : fs)
      if (r.failures.size() < opt.max_failures) r.failures.push_back(std::move(f));
  }
  return r;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::string_view salt, std::int64_t index) {
  return splitmix(splitmix(seed ^ fnv1a(salt)) + static_cast<std::uint64_t>(index));
}

SuiteReport run_cases_serial(const std::string& name, std::int64_t count, const SuiteOptions& opt,
                             const CaseBody& body) {
  auto t0 = std::chrono::steady_clock::now();
  const std::int64_t n = scaled(count, opt.scale);
  std::vector<std::vector<Failure>> per_case(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) run_one(body, name, opt, i, per_case[static_cast<std::size_t>(i)]);
  SuiteReport r = collect(name, per_case, opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteReport run_cases_parallel(const std::string& name, std::int64_t count, const SuiteOptions& opt,
                               const CaseBody& body) {
  auto t0 = std::chrono::steady_clock::now();
  const std::int64_t n = scaled(count, opt.scale);
  std::vector<std::vector<Failure>> per_case(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) run_one(body, name, opt, i, per_case[static_cast<std::size_t>(i)]);
  SuiteReport r = collect(name, per_case, opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteReport run_cases(const std::string& name, std::int64_t count, const SuiteOptions& opt, const CaseBody& body) {
  return opt.parallel ? run_cases_parallel(name, count, opt, body) : run_cases_serial(name, count, opt, body);
}

void merge_report(SuiteReport& into, const SuiteReport& part, std::size_t max_failures) {
  into.cases += part.cases;
  into.failure_count += part.failure_count;
  for (const auto& f : part.failures)
    if (into.failures.size() < max_failures) into.failures.push_back(f);
  into.notes.insert(into.notes.end(), part.notes.begin(), part.notes.end());
  into.seconds += part.seconds;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"boolean", "boolean operations agree with the pointwise oracle", suite_boolean},
      {"canonical", "canonical forms are idempotent and decide equality", suite_canonical},
      {"subgroup-reduce", "subgroups of Z come back at their minimal modulus", suite_subgroup_reduce},
      {"regular", "R_n closed form against its definition, interval/coset lemma", suite_regular},
      {"decompose", "convex equivalence relation and decomposition", suite_decompose},
      {"pullback", "pullback along lexicographic quotients", suite_pullback},
      {"cyclic", "cyclic order axioms, universal cover, local group, index bound", suite_cyclic},
      {"arcs", "arc set algebra against the pointwise oracle", suite_arcs},
      {"padic", "nth powers and power index against brute force", suite_padic},
      {"irrational", "exact quadratic irrational signs against multiprecision", suite_irrational},
      {"examples", "worked examples recomputed by oracles", suite_examples},
  };
  return all;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

Json report_to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return Json{{"suite", r.suite},          {"cases", r.cases},   {"failures", failures},
              {"failure_count", r.failure_count}, {"passed", r.passed()}, {"notes", notes}};
}

}  // namespace cnckit
