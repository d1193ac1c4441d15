#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cnckit/subgroup.hpp"
#include "cnckit/suites.hpp"

namespace cnckit {

namespace {

using mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;

const QuadIrr kPhi(1, 1, 2, 5);
const QuadIrr kSqrt2(0, 1, 1, 2);

mp real(const QuadIrr& q) { return (mp(q.a()) + mp(q.b()) * sqrt(mp(q.d()))) / mp(q.c()); }

// frac(k * alpha) and floor(k * alpha) at 64 digits.
mp frac_mul(const QuadIrr& alpha, std::int64_t k) {
  mp t = real(alpha) * mp(k);
  return t - floor(t);
}
std::int64_t floor_mul(const QuadIrr& alpha, std::int64_t k) {
  mp t = real(alpha) * mp(k);
  return static_cast<std::int64_t>(floor(t));
}

bool circular(const mp& a, const mp& b, const mp& c) { return (a < b && b < c) || (b < c && c < a) || (c < a && a < b); }

GroupElement el(const GroupSpec& spec, std::vector<Rational> coords) { return make_element(spec, std::move(coords)); }

GroupWindow window(const GroupSpec& spec, std::int64_t lo, std::int64_t hi, std::int64_t den = 1) {
  return GroupWindow{spec, lo, hi, den, std::nullopt, std::nullopt, 1 << 20};
}

struct Example {
  std::string name;
  std::function<void(std::vector<Failure>&)> check;
};

void expect(std::vector<Failure>& out, const std::string& what, bool ok, const std::string& want, const std::string& got) {
  if (!ok) out.push_back(Failure{what, want, got});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Compares a symbolic set with a pointwise predicate on a window.
template <class Pred>
void same_on(std::vector<Failure>& out, const std::string& what, const CncSet& s, const std::vector<GroupElement>& w, Pred pred) {
  for (const auto& x : w)
    if (cnc_member(x, s) != pred(x)) {
      out.push_back(Failure{what + " at " + format_element(s.spec, x), yes_no(pred(x)), format_cnc(s)});
      return;
    }
}

std::int64_t num(const GroupElement& x, std::size_t i = 0) { return x.coords[i].num(); }

std::vector<Example> group_examples() {
  std::vector<Example> ex;
  ex.push_back({"compare 2-phi with 0 over Z+phiZ", [](auto& out) {
                  auto spec = GroupSpec::z_plus_alpha_z(kPhi);
                  int oracle = quad_sign_multiprecision(QuadIrr(3, -1, 2, 5));
                  Ordering got = compare(spec, el(spec, {2, -1}), zero(spec));
                  expect(out, "oracle sign of 2-phi", oracle == 1, "1", std::to_string(oracle));
                  expect(out, "compare((2,-1), 0)", got == Ordering::gt, "gt", std::to_string(to_int(got)));
                }});
  ex.push_back({"sign of 2-sqrt(5)", [](auto& out) {
                  QuadIrr q(2, -1, 1, 5);
                  // a > 0, b < 0 and a^2 = 4 < 5 = b^2 d
                  int want = 2 * 2 < 1 * 1 * 5 ? -1 : 1;
                  expect(out, "quad_sign", quad_sign(q) == want, std::to_string(want), std::to_string(quad_sign(q)));
                  expect(out, "multiprecision", quad_sign_multiprecision(q) == want, std::to_string(want),
                         std::to_string(quad_sign_multiprecision(q)));
                }});
  ex.push_back({"unit element of lexint:2", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  auto w = enum_window(window(spec, -3, 3));
                  std::optional<GroupElement> least;
                  for (const auto& x : w)
                    if (cmp(spec, x, zero(spec)) > 0 && (!least || cmp(spec, x, *least) < 0)) least = x;
                  auto u = unit_element(spec);
                  expect(out, "unit_element", u && least && *u == *least, format_element(spec, *least),
                         u ? format_element(spec, *u) : "none");
                }});
  ex.push_back({"Q has no unit element", [](auto& out) {
                  auto spec = GroupSpec::rationals();
                  // every positive element has a smaller positive half
                  for (const auto& x : enum_window(window(spec, 0, 2, 6)))
                    if (x.coords[0] > Rational(0))
                      expect(out, "half of " + x.coords[0].to_string(), Rational(0) < x.coords[0] / Rational(2) && x.coords[0] / Rational(2) < x.coords[0],
                             "smaller positive", "not");
                  expect(out, "unit_element(rat)", !unit_element(spec).has_value(), "none", "some");
                }});
  return ex;
}

std::vector<Example> cut_examples() {
  std::vector<Example> ex;
  ex.push_back({"principal(1) below gap(sqrt 2) over Q", [](auto& out) {
                  auto spec = GroupSpec::rationals();
                  int oracle = quad_sign_multiprecision(QuadIrr(1, -1, 1, 2));
                  Ordering got = cut_compare(spec, closed_at(spec, el(spec, {1})), gap_at(spec, kSqrt2));
                  expect(out, "sign of 1-sqrt(2)", oracle == -1, "-1", std::to_string(oracle));
                  expect(out, "cut_compare", got == Ordering::lt, "lt", std::to_string(to_int(got)));
                }});
  ex.push_back({"1 in (0, sqrt 2) over Q", [](auto& out) {
                  auto spec = GroupSpec::rationals();
                  ConvexSet c{closed_at(spec, zero(spec)), gap_at(spec, kSqrt2)};
                  bool oracle = real(QuadIrr(1, 0, 1, 1)) > 0 && real(QuadIrr(1, 0, 1, 1)) < real(kSqrt2);
                  expect(out, "member(1)", convex_member(spec, el(spec, {1}), c) == oracle, yes_no(oracle), "differs");
                  expect(out, "member(0)", !convex_member(spec, zero(spec), c), "false", "true");
                }});
  ex.push_back({"(-inf,10] meets [3,+inf) over Z", [](auto& out) {
                  auto spec = GroupSpec::integers();
                  ConvexSet c = convex_intersect(spec, ConvexSet{Cut::neg_inf(), closed_at(spec, el(spec, {10}))},
                                                 ConvexSet{closed_at(spec, el(spec, {2})), Cut::pos_inf()});
                  for (const auto& x : enum_window(window(spec, -20, 20))) {
                    bool want = num(x) >= 3 && num(x) <= 10;
                    if (convex_member(spec, x, c) != want) {
                      out.push_back(Failure{"member " + format_element(spec, x), yes_no(want), format_convex(spec, c)});
                      break;
                    }
                  }
                }});
  ex.push_back({"principal(7) over Z is not valuational", [](auto& out) {
                  auto spec = GroupSpec::integers();
                  Cut c = closed_at(spec, el(spec, {7}));
                  // the cut has a maximum
                  expect(out, "maximum 7", cut_contains(spec, c, el(spec, {7})) && !cut_contains(spec, c, el(spec, {8})), "7", "none");
                  expect(out, "is_valuational", !is_valuational(spec, c), "false", "true");
                  expect(out, "stabilizer", stabilizer(spec, c).is_zero(), "{0}", stabilizer(spec, c).to_string());
                }});
  ex.push_back({"prefix cut first <= 0 over lexint:2", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  Cut c = closed_prefix(spec, {Rational(0)});
                  auto w = enum_window(window(spec, -5, 5));
                  auto below = [](const GroupElement& x) { return num(x) <= 0; };
                  for (const auto& x : w) expect(out, "membership " + format_element(spec, x), cut_contains(spec, c, x) == below(x), "x0 <= 0", "differs");
                  // C + a = C on the window exactly for a with a0 = 0
                  for (const auto& a : enum_window(window(spec, -2, 2))) {
                    bool fixes = std::all_of(w.begin(), w.end(), [&](const GroupElement& x) { return below(add(spec, x, a)) == below(x); });
                    ConvexSubgroup h = stabilizer(spec, c);
                    expect(out, "stabilizer at " + format_element(spec, a), h.contains(a) == fixes, yes_no(fixes), h.to_string());
                  }
                  expect(out, "is_valuational", is_valuational(spec, c), "true", "false");
                  expect(out, "stabilizer level", stabilizer(spec, c) == (ConvexSubgroup{spec, 1}), "{0} x Z", stabilizer(spec, c).to_string());
                }});
  ex.push_back({"gap(sqrt 2) over Q is not valuational", [](auto& out) {
                  auto spec = GroupSpec::rationals();
                  Cut c = gap_at(spec, kSqrt2);
                  // for each positive a some grid point x has x < sqrt 2 <= x + a
                  mp r2 = real(kSqrt2);
                  for (std::int64_t k = 1; k <= 16; ++k) {
                    Rational a(k, 8);
                    bool moved = false;
                    for (std::int64_t m = 0; m <= 256 && !moved; ++m) {
                      Rational x(m, 128);
                      moved = mp(x.num()) / mp(x.den()) < r2 && mp((x + a).num()) / mp((x + a).den()) > r2;
                    }
                    expect(out, "C + " + a.to_string() + " != C", moved, "moved", "fixed");
                  }
                  expect(out, "is_valuational", !is_valuational(spec, c), "false", "true");
                  expect(out, "stabilizer", stabilizer(spec, c).is_zero(), "{0}", stabilizer(spec, c).to_string());
                }});
  ex.push_back({"prefix cut with two fixed coordinates over lexrat:3", [](auto& out) {
                  auto spec = GroupSpec::lex_rat(3);
                  Cut c = closed_prefix(spec, {Rational(0), Rational(0)});
                  auto w = enum_window(window(spec, -1, 1, 2));
                  auto below = [](const GroupElement& x) {
                    return x.coords[0] < Rational(0) || (x.coords[0] == Rational(0) && x.coords[1] <= Rational(0));
                  };
                  ConvexSubgroup h = stabilizer(spec, c);
                  for (const auto& a : enum_window(window(spec, -1, 1, 2))) {
                    bool fixes = std::all_of(w.begin(), w.end(), [&](const GroupElement& x) { return below(add(spec, x, a)) == below(x); });
                    if (h.contains(a) != fixes) {
                      out.push_back(Failure{"stabilizer at " + format_element(spec, a), yes_no(fixes), h.to_string()});
                      break;
                    }
                  }
                  expect(out, "stabilizer level", h == (ConvexSubgroup{spec, 2}), "{0}^2 x Q", h.to_string());
                }});
  return ex;
}

std::vector<Example> cnc_examples() {
  std::vector<Example> ex;
  const GroupSpec z = GroupSpec::integers();
  ex.push_back({"cosets 0 and 2 mod 4 give 2Z", [z](auto& out) {
                  CncSet s = canonicalize(z, {CncPiece{whole_line(), el(z, {0}), 4}, CncPiece{whole_line(), el(z, {2}), 4}});
                  expect(out, "equals 2Z", s == coset_set(z, 2, zero(z)), "modulus 2, residue 0, full line", format_cnc(s));
                  same_on(out, "2Z", s, enum_window(window(z, -50, 50)), [](const GroupElement& x) { return num(x) % 2 == 0; });
                }});
  ex.push_back({"[0,10] and [5,20] inside 1+3Z", [z](auto& out) {
                  ConvexSet a{closed_at(z, el(z, {-1})), closed_at(z, el(z, {10}))}, b{closed_at(z, el(z, {4})), closed_at(z, el(z, {20}))};
                  CncSet s = canonicalize(z, {CncPiece{a, el(z, {1}), 3}, CncPiece{b, el(z, {1}), 3}});
                  same_on(out, "union", s, enum_window(window(z, -5, 25)), [](const GroupElement& x) {
                    std::int64_t v = num(x);
                    return mod_floor(v, 3) == 1 && v >= 0 && v <= 20;
                  });
                }});
  ex.push_back({"complement of [0,+inf) & 2Z", [z](auto& out) {
                  CncSet a = eval_cnc(parse_expr("coset(2,0) & interval(0,+inf)"), z);
                  CncSet c = cnc_complement(a);
                  SetExpr expected = parse_expr("coset(2,1) | (coset(2,0) & interval(-inf,-2))");
                  GroupOracle oracle(expected, z);
                  auto w = enum_window(window(z, -100, 100));
                  same_on(out, "complement", c, w, [](const GroupElement& x) { return !(num(x) >= 0 && num(x) % 2 == 0); });
                  same_on(out, "expected form", c, w, [&](const GroupElement& x) { return oracle(x); });
                }});
  ex.push_back({"2-phi in (0, sqrt 5) over Z+phiZ", [](auto& out) {
                  auto spec = GroupSpec::z_plus_alpha_z(kPhi);
                  QuadIrr r5(0, 1, 1, 5);
                  CncSet a = convex_cnc(spec, ConvexSet{closed_at(spec, zero(spec)), real_cut(spec, r5, false)});
                  mp x = real(QuadIrr(3, -1, 2, 5));
                  bool want = x > 0 && x < real(r5);
                  bool got = cnc_member(el(spec, {2, -1}), a);
                  expect(out, "member(2-phi)", got == want, yes_no(want), yes_no(got));
                }});
  ex.push_back({"window of 2M over Z+phiZ", [](auto& out) {
                  auto spec = GroupSpec::z_plus_alpha_z(kPhi);
                  CncSet a = coset_set(spec, 2, zero(spec));
                  std::vector<GroupElement> got;
                  for (auto& x : enum_window(window(spec, -2, 2)))
                    if (cnc_member(x, a)) got.push_back(x);
                  std::vector<std::pair<mp, GroupElement>> want;
                  for (std::int64_t p = -2; p <= 2; p += 2)
                    for (std::int64_t q = -2; q <= 2; q += 2) want.push_back({mp(p) + mp(q) * real(kPhi), el(spec, {p, q})});
                  std::sort(want.begin(), want.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
                  bool same = got.size() == want.size();
                  for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i] == want[i].second;
                  expect(out, "sorted members", same, "9 elements sorted by real value", std::to_string(got.size()) + " elements");
                }});
  ex.push_back({"subgroup {0,2,4} mod 6", [z](auto& out) {
                  CncSet s = subgroup_reduce(eval_cnc(parse_expr("coset(6,0) | coset(6,2) | coset(6,4)"), z));
                  expect(out, "modulus", s.modulus == 2, "2", std::to_string(s.modulus));
                  same_on(out, "2Z", s, enum_window(window(z, -60, 60)), [](const GroupElement& x) { return num(x) % 2 == 0; });
                }});
  ex.push_back({"subgroup {0,3} mod 6", [z](auto& out) {
                  CncSet s = subgroup_reduce(eval_cnc(parse_expr("coset(6,0) | coset(6,3)"), z));
                  expect(out, "modulus", s.modulus == 3, "3", std::to_string(s.modulus));
                  same_on(out, "3Z", s, enum_window(window(z, -60, 60)), [](const GroupElement& x) { return num(x) % 3 == 0; });
                }});
  ex.push_back({"normalize coset(4,0)|coset(4,2)", [z](auto& out) {
                  CncSet n = eval_cnc(parse_expr("coset(4,0)|coset(4,2)"), z);
                  CncSet r = subgroup_reduce(canonicalize(z, {CncPiece{whole_line(), el(z, {0}), 4}, CncPiece{whole_line(), el(z, {2}), 4}}));
                  expect(out, "normalize equals subgroup_reduce", n == r && n.modulus == 2, format_cnc(r), format_cnc(n));
                }});
  return ex;
}

std::vector<Example> subgroup_examples() {
  std::vector<Example> ex;
  ex.push_back({"convex subgroups of lexrat:3", [](auto& out) {
                  auto spec = GroupSpec::lex_rat(3);
                  auto subs = convex_subgroups(spec);
                  std::vector<int> levels;
                  for (const auto& h : subs) levels.push_back(h.level);
                  expect(out, "levels", levels == std::vector<int>{3, 2, 1, 0}, "3,2,1,0", std::to_string(levels.size()) + " subgroups");
                }});
  ex.push_back({"convex subgroups of lexint:2", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  auto subs = convex_subgroups(spec);
                  expect(out, "count", subs.size() == 3, "3", std::to_string(subs.size()));
                  auto w = enum_window(window(spec, -3, 3));
                  for (const auto& h : subs) {
                    bool closed = true, convex = true;
                    for (const auto& x : w)
                      for (const auto& y : w) {
                        if (!h.contains(x) || !h.contains(y)) continue;
                        closed = closed && h.contains(sub(spec, x, y));
                        for (const auto& m : w)
                          if (cmp(spec, x, m) < 0 && cmp(spec, m, y) < 0) convex = convex && h.contains(m);
                      }
                    expect(out, h.to_string() + " closed and convex", closed && convex, "true", "false");
                  }
                  expect(out, "middle is {0} x Z", subs[1].contains(el(spec, {0, 5})) && !subs[1].contains(el(spec, {1, 0})), "{0} x Z",
                         subs[1].to_string());
                }});
  ex.push_back({"regular subgroups", [](auto& out) {
                  struct Case {
                    GroupWindow w;
                    std::int64_t n;
                    int level;
                  };
                  for (const auto& c : {Case{window(GroupSpec::rationals(), -2, 2, 6), 5, 0}, Case{window(GroupSpec::integers(), -40, 40), 7, 0},
                                        Case{window(GroupSpec::lex_int(2), -6, 6), 2, 1}}) {
                    ConvexSubgroup rn = regular_subgroup(c.w.spec, c.n);
                    RnAudit audit = rn_window_audit(c.w.spec, c.n, c.w);
                    std::string in = c.w.spec.to_string() + ", n = " + std::to_string(c.n);
                    expect(out, in, rn.level == c.level, std::to_string(c.level), rn.to_string());
                    expect(out, in + " against the definition", audit.agrees, "agrees", "differs");
                  }
                  // {(1,0), (1,1)} has two elements and no element of 2M
                  auto spec = GroupSpec::lex_int(2);
                  bool hit = false;
                  for (std::int64_t t = 0; t <= 1; ++t) hit = hit || (1 % 2 == 0 && t % 2 == 0);
                  expect(out, "interval {(1,0),(1,1)} misses 2M", !hit && !regular_subgroup(spec, 2).contains(el(spec, {1, 0})), "misses", "hits");
                }});
  ex.push_back({"pullback of (1+2Z) & [0,+inf) to lexint:2", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  QuotientMap map = quotient_map(spec, ConvexSubgroup{spec, 1});
                  CncSet p = pullback(map, eval_cnc(parse_expr("coset(2,1) & interval(0,+inf)"), GroupSpec::integers()));
                  same_on(out, "pullback", p, enum_window(window(spec, -4, 4)), [](const GroupElement& x) { return num(x) >= 0 && mod_floor(num(x), 2) == 1; });
                  expect(out, "modulus", p.modulus == 2 && p.classes.size() == 2, "residues (1,0) and (1,1) mod 2", format_cnc(p));
                }});
  ex.push_back({"pullback of {3} to lexint:2", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  QuotientMap map = quotient_map(spec, ConvexSubgroup{spec, 1});
                  CncSet p = pullback(map, eval_cnc(parse_expr("point(3)"), GroupSpec::integers()));
                  same_on(out, "slab", p, enum_window(window(spec, -5, 5)), [](const GroupElement& x) { return num(x) == 3; });
                  expect(out, "one convex piece", p.modulus == 1 && p.classes.size() == 1 && p.classes[0].second.size() == 1, "slab at modulus 1",
                         format_cnc(p));
                }});
  return ex;
}

std::vector<Example> equiv_examples() {
  std::vector<Example> ex;
  const GroupSpec z = GroupSpec::integers(), q = GroupSpec::rationals();
  auto scan = [](const SetExpr& e, const GroupSpec& spec) {
    GroupOracle o(e, spec);
    return [o](const GroupElement& x) { return o(x); };
  };
  ex.push_back({"X = 2Z: 0 E 100", [=](auto& out) {
                  SetExpr e = parse_expr("coset(2,0)");
                  auto ctx = make_context(eval_cnc(e, z), 2);
                  auto direct = oracle_related(el(z, {0}), el(z, {100}), scan(e, z), z, 2);
                  expect(out, "clause scan", direct && *direct, "true", "false");
                  expect(out, "related", related(el(z, {0}), el(z, {100}), ctx), "true", "false");
                }});
  ex.push_back({"X = 2Z & (-inf,10]: 0 not E 20", [=](auto& out) {
                  SetExpr e = parse_expr("coset(2,0) & interval(-inf,10)");
                  auto ctx = make_context(eval_cnc(e, z), 2);
                  auto direct = oracle_related(el(z, {0}), el(z, {20}), scan(e, z), z, 2);
                  expect(out, "clause scan", direct && !*direct, "false", "true");
                  expect(out, "related", !related(el(z, {0}), el(z, {20}), ctx), "false", "true");
                }});
  ex.push_back({"X = (0, sqrt 2): class of 1", [=](auto& out) {
                  SetExpr e = parse_expr("interval(0,sqrt(2),())");
                  auto ctx = make_context(eval_cnc(e, q), 1);
                  ConvexSet cls = eclass(el(q, {1}), ctx);
                  expect(out, "eclass(1)", cls == (ConvexSet{closed_at(q, zero(q)), gap_at(q, kSqrt2)}), "(0, sqrt 2)", format_convex(q, cls));
                  for (const auto& t : enum_window(window(q, -3, 3, 8))) {
                    mp v = mp(t.coords[0].num()) / mp(t.coords[0].den());
                    bool want = v > 0 && v < real(kSqrt2);
                    auto direct = oracle_related(el(q, {1}), t, scan(e, q), q, 1);
                    if (!direct || *direct != want) {
                      out.push_back(Failure{"clause scan 1 E " + format_element(q, t), yes_no(want), direct ? yes_no(*direct) : "undecided"});
                      break;
                    }
                  }
                }});
  ex.push_back({"lexint:2, X = (0,1) + 2M: class of (0,0)", [](auto& out) {
                  auto spec = GroupSpec::lex_int(2);
                  SetExpr e = parse_expr("coset(2,(0,1))");
                  auto ctx = make_context(eval_cnc(e, spec), 2);
                  ConvexSet cls = eclass(zero(spec), ctx);
                  GroupOracle o(e, spec);
                  for (const auto& x : enum_window(window(spec, -4, 4))) {
                    auto direct = oracle_related(zero(spec), x, [&](const GroupElement& y) { return o(y); }, spec, 2);
                    bool want = num(x) == 0;
                    if (convex_member(spec, x, cls) != want || (direct && *direct != want)) {
                      out.push_back(Failure{"class of (0,0) at " + format_element(spec, x), yes_no(want), format_convex(spec, cls)});
                      break;
                    }
                  }
                }});
  ex.push_back({"X = {0} | (1,2) over Q: finite classes", [=](auto& out) {
                  SetExpr e = parse_expr("point(0) | interval(1,2,())");
                  auto ctx = make_context(eval_cnc(e, q), 1);
                  auto fc = finite_classes(ctx);
                  std::vector<ConvexSet> want;
                  for (int k : {0, 1, 2}) want.push_back(point_set(q, el(q, {k})));
                  expect(out, "finite_classes", fc == want, "{0}, {1}, {2}", std::to_string(fc.size()) + " classes");
                  for (const auto& t : enum_window(window(q, -3, 3, 4))) {
                    bool breakpoint = t.coords[0] == Rational(0) || t.coords[0] == Rational(1) || t.coords[0] == Rational(2);
                    auto left = oracle_related(t, el(q, {t.coords[0] - Rational(1, 16)}), scan(e, q), q, 1);
                    auto right = oracle_related(t, el(q, {t.coords[0] + Rational(1, 16)}), scan(e, q), q, 1);
                    bool alone = !*left && !*right;
                    expect(out, "singleton at " + format_element(q, t), alone == breakpoint, yes_no(breakpoint), yes_no(alone));
                  }
                }});
  ex.push_back({"X = [0,10] & 2Z: finite classes", [=](auto& out) {
                  SetExpr e = parse_expr("coset(2,0) & interval(0,10)");
                  auto ctx = make_context(eval_cnc(e, z), 2);
                  // runs of the window joined by the clause scan; runs touching the edges are infinite
                  std::vector<std::vector<std::int64_t>> runs{{-30}};
                  for (std::int64_t a = -30; a < 40; ++a) {
                    auto r = oracle_related(el(z, {a}), el(z, {a + 1}), scan(e, z), z, 2);
                    if (*r) runs.back().push_back(a + 1);
                    else runs.push_back({a + 1});
                  }
                  std::vector<std::vector<std::int64_t>> want(runs.begin() + 1, runs.end() - 1), got;
                  for (const auto& c : finite_classes(ctx)) {
                    std::vector<std::int64_t> members;
                    for (const auto& x : classify(convex_cnc(z, c)).elements) members.push_back(num(x));
                    got.push_back(members);
                  }
                  expect(out, "finite classes", got == want, std::to_string(want.size()) + " classes", std::to_string(got.size()) + " classes");
                }});
  ex.push_back({"decompose two residue blocks", [=](auto& out) {
                  CncSet x = eval_cnc(parse_expr("(coset(3,1) & interval(0,20)) | (coset(3,0) & interval(100,120))"), z);
                  expect(out, "reassemble at the set's modulus", reassemble(decompose(x)) == x, format_cnc(x), "differs");
                  Decomposition d = decompose(x, 3);
                  expect(out, "reassemble at n = 3", reassemble(d) == x, format_cnc(x), "differs");
                  std::set<std::vector<std::int64_t>> residue_sets;
                  for (const auto& b : d.classes) {
                    std::vector<std::int64_t> rs;
                    for (const auto& r : b.residues) rs.push_back(num(r));
                    if (!rs.empty()) residue_sets.insert(rs);
                  }
                  expect(out, "residue sets", residue_sets == std::set<std::vector<std::int64_t>>{{0}, {1}}, "{1} and {0}",
                         decomposition_to_json(d).dump());
                  same_on(out, "reassembled", reassemble(d), enum_window(window(z, -10, 130)), [](const GroupElement& v) {
                    std::int64_t t = num(v);
                    return (t >= 0 && t <= 20 && mod_floor(t, 3) == 1) || (t >= 100 && t <= 120 && mod_floor(t, 3) == 0);
                  });
                }});
  ex.push_back({"decompose (0,1) | {5} over Q", [=](auto& out) {
                  Decomposition d = decompose(eval_cnc(parse_expr("interval(0,1,()) | point(5)"), q));
                  bool ok = d.n == 1 && d.finite_part == std::vector<GroupElement>{el(q, {5})};
                  bool block = std::any_of(d.classes.begin(), d.classes.end(), [&](const DecompositionBlock& b) {
                    return b.block == (ConvexSet{closed_at(q, zero(q)), open_at(q, el(q, {1}))}) && b.residues.size() == 1;
                  });
                  expect(out, "decomposition", ok && block, "n = 1, class (0,1), finite part {5}", decomposition_to_json(d).dump());
                }});
  return ex;
}

std::vector<Example> cyclic_examples() {
  std::vector<Example> ex;
  const CyclicSpec phi = CyclicSpec::z_with_alpha(kPhi), dy = CyclicSpec::dyadic_circle();
  ex.push_back({"C(1,2,3) over S_phi", [=](auto& out) {
                  mp p1 = frac_mul(kPhi, 1), p2 = frac_mul(kPhi, 2), p3 = frac_mul(kPhi, 3);
                  bool f = circular(p1, p2, p3), b = circular(p3, p2, p1);
                  expect(out, "C(1,2,3)", cyclic_check(phi, 1, 2, 3) == f && !f, "false", yes_no(cyclic_check(phi, 1, 2, 3)));
                  expect(out, "C(3,2,1)", cyclic_check(phi, 3, 2, 1) == b && b, "true", yes_no(cyclic_check(phi, 3, 2, 1)));
                }});
  ex.push_back({"(0,1) + (0,1) over S_phi", [=](auto& out) {
                  mp sum = frac_mul(kPhi, 1) * 2;
                  auto w = static_cast<std::int64_t>(round(sum - frac_mul(kPhi, 2)));
                  CoverElement got = cover_add(phi, CoverElement{0, 1}, CoverElement{0, 1});
                  expect(out, "sum", got == (CoverElement{w, 2}) && w == 1, "(1, 2)", format_cover(phi, got));
                }});
  ex.push_back({"(0,3/4) + (0,1/2) over the dyadic circle", [=](auto& out) {
                  Rational s = Rational(3, 4) + Rational(1, 2);
                  CoverElement want{s.floor(), s - Rational(s.floor())};
                  CoverElement got = cover_add(dy, CoverElement{0, Rational(3, 4)}, CoverElement{0, Rational(1, 2)});
                  expect(out, "sum", got == want, format_cover(dy, want), format_cover(dy, got));
                }});
  ex.push_back({"project(lift(a) + u) = a", [=](auto& out) {
                  Rng rng(7);
                  for (int i = 0; i < 100; ++i) {
                    Rational a(rng.uniform(-1000, 1000));
                    Rational b(rng.uniform(0, 255), 256);
                    expect(out, "phi at " + a.to_string(), project(cover_add(phi, lift(a), cover_unit())) == a, a.to_string(), "differs");
                    expect(out, "dyadic at " + b.to_string(), project(cover_add(dy, lift(b), cover_unit())) == b, b.to_string(), "differs");
                  }
                }});
  ex.push_back({"local sums over S_phi", [=](auto& out) {
                  bool leaves = frac_mul(kPhi, 1) * 2 >= 1;
                  auto s = local_add(phi, local_nonneg(1), local_nonneg(1));
                  expect(out, "1 + 1 undefined", s.has_value() != leaves && leaves, "undefined", s ? format_local(phi, *s) : "undefined");
                  auto z = local_add(phi, local_nonneg(1), local_neg(1));
                  expect(out, "1 + (-1) = 0", z && *z == local_nonneg(0), "0", z ? format_local(phi, *z) : "undefined");
                }});
  ex.push_back({"equivalence mod 2 of 2 and 4 over S_phi", [=](auto& out) {
                  // iota(k) = k phi - floor(k phi) as (p, q) = (-floor(k phi), k)
                  std::int64_t p = -floor_mul(kPhi, 2) + floor_mul(kPhi, 4), q = 2 - 4;
                  bool divisible = false;
                  for (std::int64_t y1 = -10; y1 <= 10; ++y1)
                    for (std::int64_t y2 = -10; y2 <= 10; ++y2) divisible = divisible || (2 * y1 == p && 2 * y2 == q);
                  LocalElement a = local_nonneg(2), b = local_nonneg(4);
                  expect(out, "direct", equiv_mod_n_direct(phi, a, b, 2) == divisible && !divisible, "false", "true");
                  expect(out, "definable", equiv_mod_n_definable(phi, a, b, 2) == divisible, yes_no(divisible), yes_no(!divisible));
                }});
  ex.push_back({"equivalence mod 2 of 1/4 and 3/4 over the dyadic circle", [=](auto& out) {
                  Rational d = Rational(1, 4) - Rational(3, 4);
                  bool divisible = false;
                  for (std::int64_t m = 0; m <= 6; ++m)
                    for (std::int64_t k = -64; k <= 64; ++k) divisible = divisible || Rational(2) * Rational(k, std::int64_t{1} << m) == d;
                  LocalElement a = local_nonneg(Rational(1, 4)), b = local_nonneg(Rational(3, 4));
                  expect(out, "direct", equiv_mod_n_direct(dy, a, b, 2) == divisible, yes_no(divisible), yes_no(!divisible));
                  expect(out, "definable", equiv_mod_n_definable(dy, a, b, 2) == divisible, yes_no(divisible), yes_no(!divisible));
                }});
  ex.push_back({"13 on the arc from 0 to 5 over S_phi", [=](auto& out) {
                  bool want = circular(frac_mul(kPhi, 0), frac_mul(kPhi, 13), frac_mul(kPhi, 5));
                  ArcSet a = eval_arc(parse_expr("arc(0,5)"), phi);
                  expect(out, "arc_member(13)", arc_member(13, a) == want && want, "true", yes_no(arc_member(13, a)));
                }});
  ex.push_back({"arc(0,5) & arc(5,0) over S_phi", [=](auto& out) {
                  SetExpr e = parse_expr("arc(0,5) & arc(5,0)");
                  ArcSet a = arc_boolean(BoolOp::Intersect, eval_arc(parse_expr("arc(0,5)"), phi), eval_arc(parse_expr("arc(5,0)"), phi));
                  CircleOracle o(e, phi);
                  for (std::int64_t j = -200; j <= 200; ++j)
                    if (o(j) || arc_member(j, a)) {
                      out.push_back(Failure{"member " + std::to_string(j), "empty", format_arc_set(a)});
                      break;
                    }
                  expect(out, "empty", a.cover.empty(), "empty", format_arc_set(a));
                }});
  return ex;
}

std::vector<Example> padic_examples() {
  std::vector<Example> ex;
  auto squares_mod = [](std::int64_t m, std::int64_t p) {
    std::set<std::int64_t> s;
    for (std::int64_t w = 1; w < m; ++w)
      if (w % p != 0) s.insert(w * w % m);
    return s;
  };
  ex.push_back({"squares in Q_7", [=](auto& out) {
                  PAdicContext c(7);
                  auto sq = squares_mod(7, 7);
                  for (std::int64_t x : {2, 5}) {
                    bool want = sq.count(x) > 0;
                    expect(out, "is_nth_power(" + std::to_string(x) + ", 2)", is_nth_power(c, Rational(x), 2) == want, yes_no(want), yes_no(!want));
                    expect(out, "search oracle at " + std::to_string(x), nth_power_by_search(7, Rational(x), 2) == want, yes_no(want), yes_no(!want));
                  }
                }});
  ex.push_back({"3 is not a 2-adic square", [=](auto& out) {
                  PAdicContext c(2);
                  bool want = squares_mod(8, 2).count(3) > 0;
                  PAdicSet s{2, {PAdicPiece{Rational(0), Rational(1), 2, std::nullopt}}};
                  expect(out, "member(3, P_2)", pset_member(c, Rational(3), s) == want && !want, "false", "true");
                }});
  ex.push_back({"germ of P_2 against P_2 | 2P_2 & B(0,50) at p = 3", [=](auto& out) {
                  PAdicContext c(3);
                  PAdicSet a{3, {PAdicPiece{Rational(0), Rational(1), 2, std::nullopt}}};
                  PAdicSet b = a;
                  b.pieces.push_back(PAdicPiece{Rational(0), Rational(2), 2, PAdicBall{Rational(0), 50}});
                  // 2 * 3^50: not a square (2 is not a square mod 3), but 3^50 is.
                  PAdicPoint x{false, Rational(2), 50};
                  bool in_a = pset_member_point(c, x, a), in_b = pset_member_point(c, x, b);
                  expect(out, "2*3^50 separates the sets", !in_a && in_b, "outside A, inside B", yes_no(in_a) + "/" + yes_no(in_b));
                  GermResult deep = germ_compare(c, a, b, 60);
                  expect(out, "depth 60", !deep.equal && deep.discrepancy_level == std::optional<std::int64_t>(50), "discrepancy at level 50",
                         deep.equal ? "equal" : std::to_string(deep.discrepancy_level.value_or(-1)));
                  GermResult shallow = germ_compare(c, a, b, 10);
                  expect(out, "depth 10 is inconclusive", shallow.equal && !shallow.conclusive, "equal, inconclusive", "differs");
                }});
  ex.push_back({"power index", [](auto& out) {
                  for (auto [p, n, want] : {std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 2, 4}, {2, 2, 8}}) {
                    std::int64_t merged = power_index_by_merge(p, n), got = power_index(PAdicContext(p), n);
                    std::string in = "p = " + std::to_string(p) + ", n = " + std::to_string(n);
                    expect(out, in + " class merge", merged == want, std::to_string(want), std::to_string(merged));
                    expect(out, in, got == want, std::to_string(want), std::to_string(got));
                  }
                }});
  return ex;
}

// Seeds whose Int instance agrees with an earlier seed's on [-50, 50].
std::int64_t seed_collisions(std::uint64_t seeds) {
  auto spec = GroupSpec::integers();
  auto w = enum_window(window(spec, -50, 50));
  std::set<std::vector<std::uint8_t>> seen;
  std::int64_t collisions = 0;
  for (std::uint64_t seed = 0; seed < seeds; ++seed)
    if (!seen.insert(bitmap_serial(w, GroupOracle(random_instance(seed, spec, RandomParams{}), spec)).bits).second) ++collisions;
  return collisions;
}

std::vector<Example> harness_examples() {
  std::vector<Example> ex;
  ex.push_back({"window of Z+phiZ with coefficients in [-1,1]", [](auto& out) {
                  auto spec = GroupSpec::z_plus_alpha_z(kPhi);
                  auto w = enum_window(window(spec, -1, 1));
                  std::vector<GroupElement> want;
                  for (auto [p, q] : std::vector<std::pair<int, int>>{{-1, -1}, {0, -1}, {-1, 0}, {1, -1}, {0, 0}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}})
                    want.push_back(el(spec, {p, q}));
                  expect(out, "order", w == want, "-1-phi < -phi < -1 < 1-phi < 0 < phi-1 < 1 < phi < 1+phi", std::to_string(w.size()) + " elements");
                  for (std::size_t i = 1; i < want.size(); ++i) {
                    mp lo = mp(num(want[i - 1], 0)) + mp(num(want[i - 1], 1)) * real(kPhi);
                    mp hi = mp(num(want[i], 0)) + mp(num(want[i], 1)) * real(kPhi);
                    expect(out, "real order at " + std::to_string(i), lo < hi, "increasing", "not");
                  }
                }});
  ex.push_back({"random instances by seed", [](auto& out) {
                  auto spec = GroupSpec::integers();
                  for (std::uint64_t seed = 0; seed < 1000; seed += 37)
                    if (print_expr(random_instance(seed, spec, RandomParams{})) != print_expr(random_instance(seed, spec, RandomParams{})))
                      out.push_back(Failure{"seed " + std::to_string(seed), "same instance twice", "differs"});
                  std::int64_t collisions = seed_collisions(1000);
                  expect(out, "collisions among 1000 seeds", collisions < 250, "below 250", std::to_string(collisions));
                }});
  return ex;
}

}  // namespace

SuiteReport suite_examples(const SuiteOptions& opt) {
  std::vector<Example> all;
  for (auto part : {group_examples(), cut_examples(), cnc_examples(), subgroup_examples(), equiv_examples(), cyclic_examples(),
                    padic_examples(), harness_examples()})
    all.insert(all.end(), part.begin(), part.end());
  SuiteOptions o = opt;
  o.scale = 1.0;
  SuiteReport r = run_cases("examples", static_cast<std::int64_t>(all.size()), o, [&](Rng&, std::int64_t i, std::vector<Failure>& out) {
    const Example& e = all[static_cast<std::size_t>(i)];
    std::vector<Failure> local;
    e.check(local);
    for (auto& f : local) out.push_back(Failure{e.name + ": " + f.input, f.expected, f.got});
  });
  r.notes.push_back("seed collisions over 1000 Int instances on [-50,50]: " + std::to_string(seed_collisions(1000)));
  return r;
}

}  // namespace cnckit
