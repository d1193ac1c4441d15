#include "cnckit/cyclic.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cnckit {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

Rational frac(const Rational& r) { return r - Rational(r.floor()); }

QuadIrr frac(const QuadIrr& q) { return q - QuadIrr(Rational(q.floor())); }

std::int64_t floor_of_multiple(const QuadIrr& alpha, std::int64_t a) { return (alpha * Rational(a)).floor(); }

bool local_in(const CyclicSpec& spec, const LocalElement& x) {
  check_circle(spec, x.magnitude);
  return !(x.negative && x.magnitude == Rational(0));
}

}  // namespace

CyclicSpec CyclicSpec::z_with_alpha(const QuadIrr& alpha) {
  if (alpha.is_rational()) throw std::invalid_argument("alpha must be irrational");
  return CyclicSpec(Kind::ZWithSAlpha, alpha);
}

GroupSpec CyclicSpec::cover_group() const {
  return kind_ == Kind::ZWithSAlpha ? GroupSpec::z_plus_alpha_z(alpha_) : GroupSpec::dyadic();
}

std::string CyclicSpec::to_string() const {
  return kind_ == Kind::ZWithSAlpha ? "alpha:" + alpha_.to_string() : "dyadic";
}

CyclicSpec CyclicSpec::parse(std::string_view text) {
  if (text == "dyadic") return dyadic_circle();
  for (std::string_view head : {"alpha:", "z+alpha:", "zalpha:"}) {
    if (text.substr(0, head.size()) == head) return z_with_alpha(QuadIrr::parse(text.substr(head.size())));
  }
  return z_with_alpha(QuadIrr::parse(text));
}

void check_circle(const CyclicSpec& spec, const CircleElement& a) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    if (!a.is_integer()) throw std::invalid_argument("circle element " + a.to_string() + " is not an integer");
    return;
  }
  if (!is_power_of_two(a.den()) || a < Rational(0) || a >= Rational(1))
    throw std::invalid_argument("circle element " + a.to_string() + " is not a dyadic rational in [0,1)");
}

CircleElement circle_add(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) return a + b;
  return frac(a + b);
}

CircleElement circle_neg(const CyclicSpec& spec, const CircleElement& a) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) return -a;
  return frac(-a);
}

CircleElement circle_sub(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b) {
  return circle_add(spec, a, circle_neg(spec, b));
}

CircleElement circle_scale(const CyclicSpec& spec, const CircleElement& a, std::int64_t n) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) return a * Rational(n);
  return frac(a * Rational(n));
}

QuadIrr position(const CyclicSpec& spec, const CircleElement& a) {
  check_circle(spec, a);
  if (spec.kind() == CyclicSpec::Kind::DyadicCircle) return QuadIrr(a);
  return frac(spec.alpha() * a);
}

bool cyclic_check(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b, const CircleElement& c) {
  if (a == b || b == c || a == c) return false;
  QuadIrr pa = position(spec, a), pb = position(spec, b), pc = position(spec, c);
  bool ab = quad_compare(pa, pb) < 0, bc = quad_compare(pb, pc) < 0, ca = quad_compare(pc, pa) < 0;
  return (ab && bc) || (bc && ca) || (ca && ab);
}

bool circle_precedes(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b) {
  if (a == Rational(0)) return b != Rational(0);
  return cyclic_check(spec, Rational(0), a, b);
}

std::string format_circle(const CyclicSpec&, const CircleElement& a) { return a.to_string(); }

CircleElement parse_circle(const CyclicSpec& spec, std::string_view text) {
  Rational r = Rational::parse(text);
  if (spec.kind() == CyclicSpec::Kind::DyadicCircle) {
    if (!is_power_of_two(r.den())) throw std::invalid_argument("'" + std::string(text) + "' is not dyadic");
    r = frac(r);
  }
  check_circle(spec, r);
  return r;
}

CoverElement cover_unit() { return CoverElement{1, Rational(0)}; }

CoverElement cover_add(const CyclicSpec& spec, const CoverElement& x, const CoverElement& y) {
  CircleElement s = circle_add(spec, x.base, y.base);
  std::int64_t k = narrow(add_checked(x.winding, y.winding));
  bool no_carry = x.base == Rational(0) || y.base == Rational(0) || cyclic_check(spec, Rational(0), x.base, s);
  if (!no_carry) k = narrow(add_checked(k, 1));
  return CoverElement{k, s};
}

CoverElement cover_neg(const CyclicSpec& spec, const CoverElement& x) {
  if (x.base == Rational(0)) return CoverElement{-x.winding, x.base};
  return CoverElement{narrow(-static_cast<i128>(x.winding) - 1), circle_neg(spec, x.base)};
}

int cover_cmp(const CyclicSpec& spec, const CoverElement& x, const CoverElement& y) {
  if (x.winding != y.winding) return x.winding < y.winding ? -1 : 1;
  if (x.base == y.base) return 0;
  return circle_precedes(spec, x.base, y.base) ? -1 : 1;
}

CircleElement project(const CoverElement& x) { return x.base; }

CoverElement lift(const CircleElement& a) { return CoverElement{0, a}; }

GroupElement cover_to_group(const CyclicSpec& spec, const CoverElement& x) {
  GroupSpec h = spec.cover_group();
  check_circle(spec, x.base);
  if (spec.kind() == CyclicSpec::Kind::DyadicCircle) return make_element(h, {Rational(x.winding) + x.base});
  std::int64_t a = x.base.num();
  return make_element(h, {Rational(x.winding) - Rational(floor_of_multiple(spec.alpha(), a)), x.base});
}

CoverElement group_to_cover(const CyclicSpec& spec, const GroupElement& g) {
  check_element(spec.cover_group(), g);
  if (spec.kind() == CyclicSpec::Kind::DyadicCircle) {
    std::int64_t k = g.coords[0].floor();
    return CoverElement{k, g.coords[0] - Rational(k)};
  }
  std::int64_t q = g.coords[1].num();
  return CoverElement{narrow(add_checked(g.coords[0].num(), floor_of_multiple(spec.alpha(), q))), g.coords[1]};
}

std::string format_cover(const CyclicSpec& spec, const CoverElement& x) {
  return "(" + std::to_string(x.winding) + ", " + format_circle(spec, x.base) + ")";
}

LocalElement local_nonneg(const CircleElement& a) { return LocalElement{false, a}; }

LocalElement local_neg(const CircleElement& a) {
  if (a == Rational(0)) throw std::invalid_argument("the negative part excludes 0");
  return LocalElement{true, a};
}

LocalElement local_minus(const LocalElement& x) {
  if (x.magnitude == Rational(0)) return x;
  return LocalElement{!x.negative, x.magnitude};
}

std::optional<LocalElement> local_add(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y) {
  if (!local_in(spec, x) || !local_in(spec, y)) throw std::invalid_argument("not an element of the local group");
  const Rational zero_c(0);
  if (!x.negative && x.magnitude == zero_c) return y;
  if (!y.negative && y.magnitude == zero_c) return x;
  if (x.negative == y.negative) {
    const CircleElement& a = x.magnitude;
    CircleElement s = circle_add(spec, a, y.magnitude);
    if (!cyclic_check(spec, zero_c, a, s)) return std::nullopt;
    return LocalElement{x.negative, s};
  }
  const CircleElement& a = x.negative ? y.magnitude : x.magnitude;
  const CircleElement& b = x.negative ? x.magnitude : y.magnitude;
  // a + (-b) = c with c >= 0 iff b + c = a.
  CircleElement c = circle_sub(spec, a, b);
  if (c == zero_c) {
    if (a == b) return LocalElement{false, zero_c};
  } else if (cyclic_check(spec, zero_c, b, circle_add(spec, b, c))) {
    return LocalElement{false, c};
  }
  // a + (-b) = -c iff a + c = b.
  c = circle_sub(spec, b, a);
  if (c != zero_c && cyclic_check(spec, zero_c, a, circle_add(spec, a, c))) return LocalElement{true, c};
  throw std::logic_error("local sum of opposite signs must be defined");
}

int local_cmp(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y) {
  if (x.negative != y.negative) return x.negative ? -1 : 1;
  if (x.magnitude == y.magnitude) return 0;
  bool less = circle_precedes(spec, x.magnitude, y.magnitude);
  if (x.negative) less = !less;
  return less ? -1 : 1;
}

CoverElement iota(const CyclicSpec& spec, const LocalElement& x) {
  if (!local_in(spec, x)) throw std::invalid_argument("not an element of the local group");
  CoverElement c = lift(x.magnitude);
  return x.negative ? cover_neg(spec, c) : c;
}

std::optional<LocalElement> iota_inverse(const CyclicSpec& spec, const CoverElement& x) {
  check_circle(spec, x.base);
  if (x.winding == 0) return LocalElement{false, x.base};
  if (x.winding == -1 && x.base != Rational(0)) return LocalElement{true, circle_neg(spec, x.base)};
  return std::nullopt;
}

std::string format_local(const CyclicSpec& spec, const LocalElement& x) {
  if (x.negative) return "-(" + format_circle(spec, x.magnitude) + ")";
  return format_circle(spec, x.magnitude);
}

LocalElement parse_local(const CyclicSpec& spec, std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 2) == "-(" && text.back() == ')')
    return local_neg(parse_circle(spec, text.substr(2, text.size() - 3)));
  return local_nonneg(parse_circle(spec, text));
}

bool equiv_mod_n_direct(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  GroupSpec h = spec.cover_group();
  GroupElement d = sub(h, cover_to_group(spec, iota(spec, x)), cover_to_group(spec, iota(spec, y)));
  return in_nM(h, d, n);
}

std::optional<LocalElement> local_multiple(const CyclicSpec& spec, const LocalElement& y, std::int64_t n) {
  LocalElement acc = local_nonneg(Rational(0));
  for (std::int64_t i = 0; i < n; ++i) {
    auto next = local_add(spec, acc, y);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

std::vector<LocalElement> witness_domain(const CyclicSpec& spec, const std::vector<LocalElement>& args, std::int64_t n) {
  std::vector<LocalElement> out;
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    std::int64_t bound = 0;
    for (const auto& a : args) bound += std::abs(a.magnitude.num());
    for (std::int64_t m = -bound; m <= bound; ++m) {
      out.push_back(local_nonneg(Rational(m)));
      if (m != 0) out.push_back(local_neg(Rational(m)));
    }
    return out;
  }
  std::int64_t den = 1;
  for (const auto& a : args) den = std::max(den, a.magnitude.den());
  for (std::int64_t m = n; m % 2 == 0; m /= 2) den *= 2;
  for (std::int64_t k = 0; k < den; ++k) {
    out.push_back(local_nonneg(Rational(k, den)));
    if (k != 0) out.push_back(local_neg(Rational(k, den)));
  }
  return out;
}

namespace {

// a in nH ∩ I: some b in I has n*b = a.
bool in_nH_local(const CyclicSpec& spec, const LocalElement& a, std::int64_t n, const std::vector<LocalElement>& dom) {
  for (const auto& b : dom) {
    if (local_multiple(spec, b, n) == std::optional<LocalElement>(a)) return true;
  }
  return false;
}

bool definable_nonneg(const CyclicSpec& spec, const LocalElement& a, const LocalElement& b, std::int64_t n,
                      const std::vector<LocalElement>& dom) {
  const LocalElement& lo = local_cmp(spec, a, b) <= 0 ? a : b;
  const LocalElement& hi = local_cmp(spec, a, b) <= 0 ? b : a;
  for (const auto& c : dom) {
    if (c.negative) continue;
    if (local_add(spec, lo, c) == std::optional<LocalElement>(hi)) return in_nH_local(spec, c, n, dom);
  }
  return false;
}

// lo + e + ... + e (n times) = hi for some e >= 0; every partial sum lies in [lo, hi].
bool definable_chain(const CyclicSpec& spec, const LocalElement& lo, const LocalElement& hi, std::int64_t n,
                     const std::vector<LocalElement>& dom) {
  for (const auto& e : dom) {
    if (e.negative) continue;
    std::optional<LocalElement> acc = lo;
    for (std::int64_t i = 0; i < n && acc; ++i) acc = local_add(spec, *acc, e);
    if (acc == std::optional<LocalElement>(hi)) return true;
  }
  return false;
}

}  // namespace

bool equiv_mod_n_definable(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (n == 1 || x == y) return true;
  auto dom = witness_domain(spec, {x, y}, n);
  if (!x.negative && !y.negative) return definable_nonneg(spec, x, y, n, dom);
  if (x.negative && y.negative) return definable_nonneg(spec, local_minus(x), local_minus(y), n, dom);
  const LocalElement& lo = x.negative ? x : y;
  const LocalElement& hi = x.negative ? y : x;
  return definable_chain(spec, lo, hi, n, dom);
}

std::int64_t cover_index(const CyclicSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  GroupSpec h = spec.cover_group();
  std::vector<GroupElement> box;
  for (std::int64_t i = 0; i < n; ++i) {
    if (spec.kind() == CyclicSpec::Kind::DyadicCircle) {
      box.push_back(make_element(h, {Rational(i)}));
    } else {
      for (std::int64_t j = 0; j < n; ++j) box.push_back(make_element(h, {Rational(i), Rational(j)}));
    }
  }
  std::vector<GroupElement> reps;
  for (const auto& g : box) {
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const GroupElement& r) { return in_nM(h, sub(h, g, r), n); });
    if (fresh) reps.push_back(g);
  }
  return static_cast<std::int64_t>(reps.size());
}

namespace {

bool circle_in_nM(const CyclicSpec& spec, const CircleElement& a, std::int64_t n) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) return a.num() % n == 0;
  for (std::int64_t m = 0; m < n; ++m) {
    if (is_power_of_two(((a + Rational(m)) / Rational(n)).den())) return true;
  }
  return false;
}

}  // namespace

std::int64_t circle_index(const CyclicSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<CircleElement> box;
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    for (std::int64_t i = 0; i < n; ++i) box.push_back(Rational(i));
  } else {
    for (std::int64_t i = 0; i < 4; ++i) box.push_back(Rational(i, 4));
  }
  std::vector<CircleElement> reps;
  for (const auto& g : box) {
    bool fresh = std::none_of(reps.begin(), reps.end(),
                              [&](const CircleElement& r) { return circle_in_nM(spec, circle_sub(spec, g, r), n); });
    if (fresh) reps.push_back(g);
  }
  return static_cast<std::int64_t>(reps.size());
}

// Arc sets ---------------------------------------------------------------------

namespace {

ConvexSet fundamental_domain(const GroupSpec& h) {
  return ConvexSet{open_at(h, zero(h)), open_at(h, make_element(h, h.kind() == GroupKind::Dyadic
                                                                        ? std::vector<Rational>{Rational(1)}
                                                                        : std::vector<Rational>{Rational(1), Rational(0)}))};
}

GroupElement unit_of(const GroupSpec& h) {
  return make_element(h, h.kind() == GroupKind::Dyadic ? std::vector<Rational>{Rational(1)}
                                                        : std::vector<Rational>{Rational(1), Rational(0)});
}

ArcSet restrict(const CyclicSpec& spec, const CncSet& s) {
  GroupSpec h = spec.cover_group();
  return ArcSet{spec, cnc_intersect(s, convex_cnc(h, fundamental_domain(h)))};
}

bool in_arc(const CyclicSpec& spec, const CircleElement& j, const Arc& arc) {
  if (arc.closed_from && j == arc.from) return true;
  if (arc.closed_to && j == arc.to) return true;
  return cyclic_check(spec, arc.from, j, arc.to);
}

}  // namespace

ArcSet arc_empty(const CyclicSpec& spec) { return ArcSet{spec, empty_set(spec.cover_group())}; }

ArcSet arc_whole(const CyclicSpec& spec) {
  GroupSpec h = spec.cover_group();
  return ArcSet{spec, convex_cnc(h, fundamental_domain(h))};
}

ArcSet arc_set(const CyclicSpec& spec, const std::vector<ArcPiece>& pieces) {
  GroupSpec h = spec.cover_group();
  GroupElement u = unit_of(h);
  std::vector<CncPiece> cover_pieces;
  for (const auto& p : pieces) {
    if (p.modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    check_circle(spec, p.base);
    GroupElement from = cover_to_group(spec, lift(p.arc.from));
    GroupElement to = cover_to_group(spec, lift(p.arc.to));
    ConvexSet scaled;
    if (p.arc.from == p.arc.to) {
      if (!p.arc.closed_from && !p.arc.closed_to) continue;
      scaled = point_set(h, scale(h, from, p.modulus));
    } else {
      if (cmp(h, to, from) < 0) to = add(h, to, u);
      GroupElement nf = scale(h, from, p.modulus), nt = scale(h, to, p.modulus);
      scaled = ConvexSet{p.arc.closed_from ? open_at(h, nf) : closed_at(h, nf),
                         p.arc.closed_to ? closed_at(h, nt) : open_at(h, nt)};
    }
    GroupElement base = cover_to_group(spec, lift(p.base));
    // n*lifted + base lies in [0, 2n + 1); shift it by k*u so that it meets [0, u).
    for (std::int64_t k = -2 * p.modulus - 2; k <= 1; ++k) {
      GroupElement shift = add(h, base, scale(h, u, k));
      cover_pieces.push_back(CncPiece{convex_translate(h, scaled, shift), shift, p.modulus});
    }
  }
  if (cover_pieces.empty()) return arc_empty(spec);
  return restrict(spec, canonicalize(h, cover_pieces));
}

ArcSet arc_coset(const CyclicSpec& spec, std::int64_t n, const CircleElement& a) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  GroupSpec h = spec.cover_group();
  GroupElement u = unit_of(h);
  GroupElement base = cover_to_group(spec, lift(a));
  std::vector<CncPiece> pieces;
  for (std::int64_t k = 0; k < n; ++k) pieces.push_back(CncPiece{whole_line(), add(h, base, scale(h, u, k)), n});
  return restrict(spec, canonicalize(h, pieces));
}

ArcSet arc_boolean(BoolOp op, const ArcSet& a, const ArcSet& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("circle mismatch: " + a.spec.to_string() + " vs " + b.spec.to_string());
  return restrict(a.spec, boolean(op, a.cover, b.cover));
}

bool arc_member(const CircleElement& x, const ArcSet& a) {
  return cnc_member(cover_to_group(a.spec, lift(x)), a.cover);
}

bool arc_piece_member_pointwise(const CyclicSpec& spec, const CircleElement& x, const ArcPiece& p) {
  check_circle(spec, x);
  Rational d = x - p.base;
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    Rational j = d / Rational(p.modulus);
    return j.is_integer() && in_arc(spec, j, p.arc);
  }
  for (std::int64_t m = 0; m < p.modulus; ++m) {
    Rational j = (d + Rational(m)) / Rational(p.modulus);
    if (!is_power_of_two(j.den())) continue;
    if (in_arc(spec, frac(j), p.arc)) return true;
  }
  return false;
}

std::vector<ArcComponent> arc_components(const ArcSet& a) {
  const GroupSpec g = a.spec.cover_group();
  auto point = [&](const Cut& c) {
    if (!full_prefix(g, c)) throw std::logic_error("arc endpoint is not a circle point");
    return project(group_to_cover(a.spec, prefix_element(g, c)));
  };
  const Cut start = open_at(g, zero(g));
  const Cut end = open_at(g, cover_to_group(a.spec, cover_unit()));
  std::vector<ArcComponent> out;
  for (const auto& [r, list] : a.cover.classes) {
    CircleElement base = project(group_to_cover(a.spec, r));
    for (const auto& c : list) {
      ArcComponent comp{base, a.cover.modulus, {}, false};
      comp.whole = c.lower == start && c.upper == end;
      comp.arc.from = point(c.lower);
      comp.arc.closed_from = c.lower.kind == Cut::Kind::Open;
      comp.arc.to = point(c.upper);
      comp.arc.closed_to = c.upper.kind == Cut::Kind::Closed;
      out.push_back(comp);
    }
  }
  return out;
}

std::string format_arc_set(const ArcSet& a) { return "circle " + a.spec.to_string() + "\n" + format_cnc(a.cover); }

}  // namespace cnckit
