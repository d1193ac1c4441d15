#include <numeric>

#include "cnckit/suites.hpp"

namespace cnckit {

namespace {

// v_p by repeated division.
std::int64_t val(std::int64_t p, const Rational& x) {
  std::int64_t v = 0, a = x.num(), b = x.den();
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  while (b % p == 0) {
    b /= p;
    --v;
  }
  return v;
}

Rational power(const Rational& x, std::int64_t e) {
  Rational r(1);
  if (e < 0) return power(Rational(1) / x, -e);
  for (std::int64_t i = 0; i < e; ++i) r = r * x;
  return r;
}

std::int64_t ipow(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= p;
  return r;
}

Rational random_rational(Rng& rng, std::int64_t bound) {
  for (;;) {
    std::int64_t a = rng.uniform(-bound, bound);
    if (a != 0) return Rational(a, rng.uniform(1, bound));
  }
}

}  // namespace

bool nth_power_by_search(std::int64_t p, const Rational& x, std::int64_t n) {
  std::int64_t v = val(p, x);
  if (v % n != 0) return false;
  std::int64_t vn = 0;
  for (std::int64_t m = n; m % p == 0; m /= p) ++vn;
  const std::int64_t prec = 2 * vn + 1;
  const Rational base = power(Rational(p), v / n);
  const std::int64_t top = ipow(p, prec);
  for (std::int64_t w = 1; w < top; ++w) {
    if (w % p == 0) continue;
    Rational y = base * Rational(w);
    Rational diff = power(y, n) - x;
    if (diff == Rational(0) || val(p, diff) >= v + prec) return true;
  }
  return false;
}

std::int64_t power_index_by_merge(std::int64_t p, std::int64_t n) {
  std::int64_t vn = 0;
  for (std::int64_t m = n; m % p == 0; m /= p) ++vn;
  const std::int64_t top = ipow(p, 2 * vn + 1);
  std::vector<Rational> reps;
  for (std::int64_t j = 0; j < n; ++j)
    for (std::int64_t w = 1; w < top; ++w)
      if (w % p != 0) reps.push_back(Rational(ipow(p, j) * w));
  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (find(i) != find(j) && nth_power_by_search(p, reps[i] / reps[j], n)) parent[find(i)] = find(j);
  std::int64_t classes = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) classes += find(i) == i ? 1 : 0;
  return classes;
}

SuiteReport suite_padic(const SuiteOptions& opt) {
  const std::int64_t primes[] = {2, 3, 5, 7};
  SuiteReport total;
  total.suite = "padic";
  auto powers = run_cases("padic/nth-power", 10000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
    Rational x = random_rational(rng, 1000);
    for (std::int64_t p : primes) {
      PAdicContext ctx(p);
      for (std::int64_t n = 1; n <= 6; ++n) {
        bool want = nth_power_by_search(p, x, n), got = is_nth_power(ctx, x, n);
        if (want != got)
          out.push_back(Failure{"p = " + std::to_string(p) + ", n = " + std::to_string(n) + ", x = " + x.to_string(),
                                std::to_string(want), std::to_string(got)});
      }
    }
  });
  merge_report(total, powers, opt.max_failures);

  auto index = run_cases("padic/index", 24, opt, [&](Rng&, std::int64_t i, std::vector<Failure>& out) {
    std::int64_t p = primes[i / 6], n = i % 6 + 1;
    std::int64_t want = power_index_by_merge(p, n), got = power_index(PAdicContext(p), n);
    if (want != got)
      out.push_back(Failure{"power_index p = " + std::to_string(p) + ", n = " + std::to_string(n), std::to_string(want), std::to_string(got)});
  });
  merge_report(total, index, opt.max_failures);
  for (auto [p, n, want] : {std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 2, 4}, {2, 2, 8}}) {
    std::int64_t merged = power_index_by_merge(p, n), got = power_index(PAdicContext(p), n);
    ++total.cases;
    if (merged != want || got != want) {
      ++total.failure_count;
      total.failures.push_back(Failure{"power_index p = " + std::to_string(p) + ", n = " + std::to_string(n), std::to_string(want),
                                       std::to_string(got) + " (class merge " + std::to_string(merged) + ")"});
    }
  }

  auto valuations = run_cases("padic/valuation", 10000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
    Rational x = random_rational(rng, 1000), y = random_rational(rng, 1000);
    std::int64_t p = primes[rng.uniform(0, 3)];
    PAdicContext ctx(p);
    const std::string in = "p = " + std::to_string(p) + ", x = " + x.to_string() + ", y = " + y.to_string();
    auto vx = valuation(ctx, x), vy = valuation(ctx, y), vxy = valuation(ctx, x * y), vs = valuation(ctx, x + y);
    if (!vx || *vx != val(p, x)) out.push_back(Failure{in, "v(x) = " + std::to_string(val(p, x)), format_valuation(vx)});
    if (!vxy || *vxy != *vx + *vy) out.push_back(Failure{in, "v(xy) = v(x) + v(y)", format_valuation(vxy)});
    if (vs && *vs < std::min(*vx, *vy)) out.push_back(Failure{in, "v(x + y) >= min", format_valuation(vs)});
    std::int64_t k = rng.uniform(-3, 3);
    if (in_ball(ctx, x, y, k) != (x == y || val(p, x - y) >= k)) out.push_back(Failure{in + ", k = " + std::to_string(k), "ball test", "differs"});
    std::int64_t n = rng.uniform(1, 6);
    if (is_nth_power(ctx, x, n) && is_nth_power(ctx, y, n)) {
      if (!is_nth_power(ctx, x * y, n)) out.push_back(Failure{in + ", n = " + std::to_string(n), "P_n closed under products", "not"});
    }
    if (is_nth_power(ctx, x, n) && !is_nth_power(ctx, x * power(Rational(p), n), n))
      out.push_back(Failure{in + ", n = " + std::to_string(n), "x p^n in P_n", "not"});
  });
  merge_report(total, valuations, opt.max_failures);
  return total;
}

}  // namespace cnckit
