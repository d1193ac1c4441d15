#include <algorithm>
#include <bitset>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cnckit/suites.hpp"

namespace cnckit {

namespace {

using Op = SetExpr::Op;
using mp64 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;
using mp160 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

template <class F>
F value_of(const QuadIrr& q) {
  return (F(q.a()) + F(q.b()) * sqrt(F(q.d()))) / F(q.c());
}

template <class F>
F magnitude_of(const QuadIrr& q) {
  return (abs(F(q.a())) + abs(F(q.b())) * sqrt(F(q.d()))) / F(q.c());
}

template <class F>
int sign_with_margin(const QuadIrr& q, const F& margin) {
  F v = value_of<F>(q);
  if (abs(v) <= magnitude_of<F>(q) * margin) return 2;
  return v > 0 ? 1 : -1;
}

std::string ordering_text(int c) { return c < 0 ? "lt" : (c > 0 ? "gt" : "eq"); }

std::vector<CyclicSpec> cyclic_specs() {
  return {
      CyclicSpec::z_with_alpha(QuadIrr(1, 1, 2, 5)),  CyclicSpec::z_with_alpha(QuadIrr(0, 1, 1, 2)),
      CyclicSpec::z_with_alpha(QuadIrr(0, 1, 1, 3)),  CyclicSpec::z_with_alpha(QuadIrr(1, 1, 3, 7)),
      CyclicSpec::z_with_alpha(QuadIrr(-3, 1, 1, 11)), CyclicSpec::dyadic_circle(),
  };
}

bool dyadic(const CyclicSpec& s) { return s.kind() == CyclicSpec::Kind::DyadicCircle; }

CircleElement random_point(Rng& rng, const CyclicSpec& spec, std::int64_t range) {
  if (!dyadic(spec)) return Rational(rng.uniform(-range, range));
  std::int64_t q = std::int64_t{1} << rng.uniform(0, 7);
  return Rational(rng.uniform(0, q - 1), q);
}

CoverElement random_cover(Rng& rng, const CyclicSpec& spec) {
  return CoverElement{rng.uniform(-3, 3), random_point(rng, spec, 50)};
}

LocalElement random_local(Rng& rng, const CyclicSpec& spec, std::int64_t range) {
  CircleElement m = random_point(rng, spec, range);
  if (m != Rational(0) && rng.chance(1, 2)) return local_neg(m);
  return local_nonneg(m);
}

std::int64_t odd_part(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

SuiteOptions full_scale(const SuiteOptions& opt) {
  SuiteOptions o = opt;
  o.scale = 1.0;
  return o;
}

}  // namespace

int quad_sign_multiprecision(const QuadIrr& q) {
  if (q.a() == 0 && q.b() == 0) return 0;
  int s = sign_with_margin<mp64>(q, mp64("1e-50"));
  if (s != 2) return s;
  return sign_with_margin<mp160>(q, mp160("1e-140"));
}

SuiteReport suite_cyclic(const SuiteOptions& opt) {
  SuiteReport total;
  total.suite = "cyclic";
  const std::size_t size = static_cast<std::size_t>(std::clamp<double>(std::round(100 * opt.scale), 12, 100));
  for (const auto& spec : cyclic_specs()) {
    const std::string name = "cyclic/" + spec.to_string();
    std::vector<CircleElement> w;
    for (std::size_t i = 0; i < size; ++i)
      w.push_back(dyadic(spec) ? Rational(static_cast<std::int64_t>(i), 128) : Rational(static_cast<std::int64_t>(i) - 50));
    const std::vector<CircleElement> shifts =
        dyadic(spec) ? std::vector<CircleElement>{Rational(3, 8), Rational(5, 16)} : std::vector<CircleElement>{Rational(7), Rational(-13)};

    // table[i * size + j] bit k holds C(w_i, w_j, w_k)
    std::vector<std::bitset<128>> table(size * size);
    auto triple = [&](std::size_t i, std::size_t j, std::size_t k) { return "(" + w[i].to_string() + ", " + w[j].to_string() + ", " + w[k].to_string() + ")"; };
    auto build = run_cases(name + "/table", static_cast<std::int64_t>(size), full_scale(opt), [&](Rng&, std::int64_t ii, std::vector<Failure>& out) {
      auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
          bool c = cyclic_check(spec, w[i], w[j], w[k]);
          table[i * size + j][k] = c;
          for (const auto& g : shifts) {
            bool moved = cyclic_check(spec, circle_add(spec, w[i], g), circle_add(spec, w[j], g), circle_add(spec, w[k], g));
            if (moved != c && out.size() < 3)
              out.push_back(Failure{"axiom 5, shift " + g.to_string() + " of " + triple(i, j, k), std::to_string(c), std::to_string(moved)});
          }
        }
    });
    merge_report(total, build, opt.max_failures);

    auto axioms = run_cases(name + "/axioms", static_cast<std::int64_t>(size), full_scale(opt), [&](Rng&, std::int64_t ii, std::vector<Failure>& out) {
      auto i = static_cast<std::size_t>(ii);
      auto T = [&](std::size_t a, std::size_t b, std::size_t c) { return static_cast<bool>(table[a * size + b][c]); };
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
          if (out.size() >= 3) return;
          bool c = T(i, j, k);
          bool distinct = i != j && j != k && i != k;
          if (!distinct && c) out.push_back(Failure{"degenerate " + triple(i, j, k), "false", "true"});
          if (c && !T(j, k, i)) out.push_back(Failure{"axiom 1 at " + triple(i, j, k), "C(b,c,a)", "false"});
          if (c && T(k, j, i)) out.push_back(Failure{"axiom 2 at " + triple(i, j, k), "not C(c,b,a)", "true"});
          if (distinct && !c && !T(k, j, i)) out.push_back(Failure{"axiom 4 at " + triple(i, j, k), "C(a,b,c) or C(c,b,a)", "neither"});
          if (c) {
            // C(a,b,c) and C(a,c,d) imply C(a,b,d), for every d at once.
            auto missing = table[i * size + k] & ~table[i * size + j];
            if (missing.any()) {
              std::size_t d = 0;
              while (!missing[d]) ++d;
              out.push_back(Failure{"axiom 3 at a, b, c, d = " + triple(i, j, k) + ", " + w[d].to_string(), "C(a,b,d)", "false"});
            }
          }
        }
    });
    merge_report(total, axioms, opt.max_failures);

    const GroupSpec h = spec.cover_group();
    const CoverElement zero_c{0, Rational(0)}, u = cover_unit(), minus_u{-1, Rational(0)};
    auto cover = run_cases(name + "/cover", 2000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      CoverElement x = random_cover(rng, spec), y = random_cover(rng, spec), z = random_cover(rng, spec);
      const std::string in = format_cover(spec, x) + ", " + format_cover(spec, y) + ", " + format_cover(spec, z);
      auto expect = [&](bool ok, const std::string& what) {
        if (!ok) out.push_back(Failure{spec.to_string() + " " + in, what, "violated"});
      };
      expect(cover_add(spec, cover_add(spec, x, y), z) == cover_add(spec, x, cover_add(spec, y, z)), "associative");
      expect(cover_add(spec, x, y) == cover_add(spec, y, x), "commutative");
      expect(cover_add(spec, x, zero_c) == x, "identity");
      expect(cover_add(spec, x, cover_neg(spec, x)) == zero_c, "inverse");
      int xy = cover_cmp(spec, x, y), yz = cover_cmp(spec, y, z);
      expect(xy == -cover_cmp(spec, y, x) && (xy == 0) == (x == y), "antisymmetric total order");
      if (xy < 0 && yz < 0) expect(cover_cmp(spec, x, z) < 0, "transitive order");
      expect(cover_cmp(spec, cover_add(spec, x, z), cover_add(spec, y, z)) == xy, "translation invariant order");
      expect(cover_cmp(spec, CoverElement{x.winding, Rational(0)}, x) <= 0 && cover_cmp(spec, x, CoverElement{x.winding + 1, Rational(0)}) < 0,
             "x lies between consecutive multiples of u");
      expect(project(cover_add(spec, x, y)) == circle_add(spec, project(x), project(y)), "projection is a homomorphism");
      CoverElement ku = zero_c;
      for (std::int64_t k = 0; k < std::abs(x.winding); ++k) ku = cover_add(spec, ku, x.winding > 0 ? u : minus_u);
      expect((project(x) == Rational(0)) == (x == ku), "kernel of the projection is uZ");
      CircleElement a = project(x);
      CoverElement l = lift(a);
      expect(project(l) == a && cover_cmp(spec, zero_c, l) <= 0 && cover_cmp(spec, l, u) < 0, "lift lands in [0, u)");
      expect(project(cover_add(spec, l, u)) == a, "project(lift(a) + u) = a");
      GroupElement gx = cover_to_group(spec, x), gy = cover_to_group(spec, y);
      expect(cover_to_group(spec, cover_add(spec, x, y)) == add(h, gx, gy), "cover_to_group is additive");
      expect(cmp(h, gx, gy) == xy, "cover_to_group preserves order");
      expect(group_to_cover(spec, gx) == x, "group_to_cover inverts cover_to_group");

      LocalElement p = random_local(rng, spec, 50), q = random_local(rng, spec, 50);
      const std::string lin = format_local(spec, p) + ", " + format_local(spec, q);
      CoverElement s = cover_add(spec, iota(spec, p), iota(spec, q));
      bool inside = cover_cmp(spec, minus_u, s) < 0 && cover_cmp(spec, s, u) < 0;
      auto sum = local_add(spec, p, q);
      if (sum.has_value() != inside)
        out.push_back(Failure{spec.to_string() + " local_add " + lin, inside ? "defined" : "undefined", sum ? "defined" : "undefined"});
      else if (sum && !(iota(spec, *sum) == s))
        out.push_back(Failure{spec.to_string() + " local_add " + lin, format_cover(spec, s), format_cover(spec, iota(spec, *sum))});
      if (local_cmp(spec, p, q) != cover_cmp(spec, iota(spec, p), iota(spec, q)))
        out.push_back(Failure{spec.to_string() + " local_cmp " + lin, ordering_text(cover_cmp(spec, iota(spec, p), iota(spec, q))),
                              ordering_text(local_cmp(spec, p, q))});
      auto back = iota_inverse(spec, iota(spec, p));
      if (!back || !(*back == p)) out.push_back(Failure{spec.to_string() + " iota_inverse " + format_local(spec, p), "inverse", "differs"});
    });
    merge_report(total, cover, opt.max_failures);

    auto equiv = run_cases(name + "/equiv", 10000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      LocalElement p = random_local(rng, spec, 20), q = random_local(rng, spec, 20);
      std::int64_t n = rng.uniform(1, 6);
      bool direct = equiv_mod_n_direct(spec, p, q, n), definable = equiv_mod_n_definable(spec, p, q, n);
      if (direct != definable)
        out.push_back(Failure{spec.to_string() + " " + format_local(spec, p) + " =_" + std::to_string(n) + " " + format_local(spec, q),
                              std::to_string(direct), std::to_string(definable)});
    });
    merge_report(total, equiv, opt.max_failures);

    auto index = run_cases(name + "/index", 10, full_scale(opt), [&](Rng&, std::int64_t i, std::vector<Failure>& out) {
      std::int64_t n = i + 1;
      std::int64_t hn = cover_index(spec, n), mn = circle_index(spec, n);
      std::int64_t want_h = dyadic(spec) ? odd_part(n) : n * n, want_m = dyadic(spec) ? 1 : n;
      const std::string in = spec.to_string() + ", n = " + std::to_string(n);
      if (hn > n * mn) out.push_back(Failure{in, "|H/nH| <= n|M/nM|", std::to_string(hn) + " > " + std::to_string(n * mn)});
      if (hn != want_h || mn != want_m)
        out.push_back(Failure{in, std::to_string(want_h) + " and " + std::to_string(want_m), std::to_string(hn) + " and " + std::to_string(mn)});
    });
    merge_report(total, index, opt.max_failures);
  }
  return total;
}

SuiteReport suite_arcs(const SuiteOptions& opt) {
  const CyclicSpec spec = CyclicSpec::z_with_alpha(QuadIrr(1, 1, 2, 5));
  const auto w = enum_circle_window(CircleWindow{spec, -200, 200, 64});
  RandomParams p;
  p.max_pieces = 3;
  p.max_modulus = 4;
  p.range = 30;
  auto r = run_cases("arcs", 300, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
    SetExpr a = random_circle_expr(rng, spec, p), b = random_circle_expr(rng, spec, p);
    ArcSet sa = eval_arc(a, spec), sb = eval_arc(b, spec);
    auto oa = bitmap_serial(w, CircleOracle(a, spec));
    auto ob = bitmap_serial(w, CircleOracle(b, spec));
    const std::pair<BoolOp, const char*> ops[] = {
        {BoolOp::Union, "union"}, {BoolOp::Intersect, "intersect"}, {BoolOp::Complement, "complement"}, {BoolOp::Difference, "difference"}};
    for (const auto& [op, label] : ops) {
      ArcSet res = arc_boolean(op, sa, sb);
      for (std::size_t i = 0; i < w.size(); ++i) {
        bool x = oa.bits[i] != 0, y = ob.bits[i] != 0;
        bool want = op == BoolOp::Union ? (x || y) : op == BoolOp::Intersect ? (x && y) : op == BoolOp::Complement ? !x : (x && !y);
        if (arc_member(w[i], res) != want) {
          out.push_back(Failure{std::string(label) + " A = " + print_expr(a) + "; B = " + print_expr(b) + " at " + w[i].to_string(),
                                want ? "member" : "not a member", format_arc_set(res)});
          break;
        }
      }
    }
  });
  r.notes.push_back(spec.to_string() + ": window of " + std::to_string(w.size()) + " elements");
  return r;
}

SuiteReport suite_irrational(const SuiteOptions& opt) {
  SuiteReport total;
  total.suite = "irrational";
  auto random_quad = [](Rng& rng) {
    std::int64_t d = rng.uniform(2, 1000000), c = rng.uniform(1, 1000000);
    std::int64_t b = rng.uniform(-1000000000, 1000000000);
    std::int64_t a = rng.uniform(-1000000000, 1000000000);
    if (rng.chance(1, 2)) {
      // a close to -b sqrt(d): the sign hinges on the last digits
      long double r = static_cast<long double>(b) * std::sqrt(static_cast<long double>(d));
      a = -std::llround(r) + rng.uniform(-2, 2);
    }
    return QuadIrr(a, b, c, d);
  };
  auto exact = run_cases("irrational/quad", 10000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
    QuadIrr x = random_quad(rng);
    int want = quad_sign_multiprecision(x), got = quad_sign(x);
    if (want == 2 || want != got) out.push_back(Failure{"quad_sign " + x.to_string(), std::to_string(want), std::to_string(got)});
    mp160 v = value_of<mp160>(x);
    auto fl = static_cast<std::int64_t>(floor(v));
    if (x.is_rational()) fl = x.rational_value().floor();
    if (fl != x.floor()) out.push_back(Failure{"floor " + x.to_string(), std::to_string(fl), std::to_string(x.floor())});
    QuadIrr y = rng.chance(1, 2) ? random_quad(rng) : QuadIrr(x.a() + rng.uniform(-1, 1), x.b(), x.c(), x.d());
    mp160 diff = v - value_of<mp160>(y);
    mp160 scale = magnitude_of<mp160>(x) + magnitude_of<mp160>(y);
    int c = x == y ? 0 : (abs(diff) <= scale * mp160("1e-140") ? 2 : (diff > 0 ? 1 : -1));
    int gotc = quad_compare(x, y);
    if (c == 2 || c != gotc) out.push_back(Failure{"quad_compare " + x.to_string() + " vs " + y.to_string(), std::to_string(c), std::to_string(gotc)});
  });
  merge_report(total, exact, opt.max_failures);

  for (const QuadIrr& alpha : {QuadIrr(1, 1, 2, 5), QuadIrr(0, 1, 1, 2), QuadIrr(0, 1, 1, 3)}) {
    const CyclicSpec spec = CyclicSpec::z_with_alpha(alpha);
    const std::int64_t lo = -50, hi = 50;
    const std::size_t m = static_cast<std::size_t>(hi - lo + 1);
    // Positions at 64 digits; the table is only trusted when every pair is
    // separated far beyond the working precision, otherwise redo at 160.
    auto positions = [&](auto tag) {
      using F = decltype(tag);
      std::vector<F> out;
      F a = value_of<F>(alpha);
      for (std::int64_t k = lo; k <= hi; ++k) {
        F t = a * F(k);
        out.push_back(t - floor(t));
      }
      return out;
    };
    std::vector<std::size_t> rank(m);
    auto rank_from = [&](const auto& pos, const auto& margin) {
      std::vector<std::size_t> idx(m);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return pos[x] < pos[y]; });
      for (std::size_t r = 0; r < m; ++r) rank[idx[r]] = r;
      for (std::size_t r = 1; r < m; ++r)
        if (pos[idx[r]] - pos[idx[r - 1]] <= margin) return false;
      return true;
    };
    auto p64 = positions(mp64());
    bool separated = rank_from(p64, mp64("1e-40"));
    if (!separated) separated = rank_from(positions(mp160()), mp160("1e-130"));
    if (!separated) {
      total.failure_count++;
      total.failures.push_back(Failure{"positions for " + spec.to_string(), "separated", "undecided at 160 digits"});
      continue;
    }
    auto part = run_cases("irrational/" + spec.to_string(), static_cast<std::int64_t>(m), full_scale(opt), [&](Rng&, std::int64_t ia, std::vector<Failure>& out) {
      auto i = static_cast<std::size_t>(ia);
      const Rational a(lo + ia);
      mp64 exact_pos = value_of<mp64>(position(spec, a));
      if (abs(exact_pos - p64[i]) > mp64("1e-50")) out.push_back(Failure{"position of " + a.to_string(), "agrees", "differs"});
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t ra = rank[i], rb = rank[j], rc = rank[k];
          bool want = i != j && j != k && i != k && ((ra < rb && rb < rc) || (rb < rc && rc < ra) || (rc < ra && ra < rb));
          bool got = cyclic_check(spec, a, Rational(lo + static_cast<std::int64_t>(j)), Rational(lo + static_cast<std::int64_t>(k)));
          if (want != got && out.size() < 3)
            out.push_back(Failure{spec.to_string() + " C(" + a.to_string() + ", " + std::to_string(lo + static_cast<std::int64_t>(j)) + ", " +
                                      std::to_string(lo + static_cast<std::int64_t>(k)) + ")",
                                  std::to_string(want), std::to_string(got)});
        }
    });
    merge_report(total, part, opt.max_failures);
  }
  return total;
}

}  // namespace cnckit
