#include "cnckit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cnckit/subgroup.hpp"

namespace cnckit {

namespace {

using Op = SetExpr::Op;

std::vector<Rational> grid_values(std::int64_t lo, std::int64_t hi, std::int64_t den, bool powers_of_two) {
  std::set<Rational> out;
  for (std::int64_t q = 1; q <= den; ++q) {
    if (powers_of_two && (q & (q - 1)) != 0) continue;
    for (std::int64_t k = lo * q; k <= hi * q; ++k) out.insert(Rational(k, q));
  }
  return {out.begin(), out.end()};
}

void cartesian(const std::vector<Rational>& values, int arity, std::vector<Rational>& prefix,
               std::vector<std::vector<Rational>>& out) {
  if (static_cast<int>(prefix.size()) == arity) {
    out.push_back(prefix);
    return;
  }
  for (const auto& v : values) {
    prefix.push_back(v);
    cartesian(values, arity, prefix, out);
    prefix.pop_back();
  }
}

// x[0..j) compared with t lexicographically.
int prefix_cmp(const GroupElement& x, const std::vector<Rational>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (x.coords[i] < t[i]) return -1;
    if (x.coords[i] > t[i]) return 1;
  }
  return 0;
}

// Sign of x - e for an interval endpoint e; 0 means x sits on the endpoint.
int endpoint_cmp(const GroupSpec& spec, const GroupElement& x, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return 1;
    case Endpoint::Kind::PosInf: return -1;
    case Endpoint::Kind::Element: return cmp(spec, x, e.element);
    case Endpoint::Kind::Prefix: return prefix_cmp(x, e.prefix);
    case Endpoint::Kind::Real: return quad_compare(real_value(spec, x), e.real);
  }
  return 0;
}

bool atom_member(const GroupSpec& spec, const GroupAtom& a, const GroupElement& x) {
  switch (a.kind) {
    case GroupAtom::Kind::Coset: return in_nM(spec, sub(spec, x, a.element), a.modulus);
    case GroupAtom::Kind::Point: return x == a.element;
    case GroupAtom::Kind::All: return true;
    case GroupAtom::Kind::Empty: return false;
    case GroupAtom::Kind::Interval: {
      int lo = endpoint_cmp(spec, x, a.lo);
      int hi = endpoint_cmp(spec, x, a.hi);
      bool above = lo > 0 || (lo == 0 && a.lo_closed);
      bool below = hi < 0 || (hi == 0 && a.hi_closed);
      return above && below;
    }
  }
  return false;
}

bool is_power_of_two(std::int64_t d) { return d > 0 && (d & (d - 1)) == 0; }

// y on the arc from -> to (positive direction), flags deciding the endpoints.
bool on_arc(const CyclicSpec& spec, const CircleElement& y, const Arc& arc) {
  if (y == arc.from && arc.closed_from) return true;
  if (y == arc.to && arc.closed_to) return true;
  if (arc.from == arc.to) return false;
  return cyclic_check(spec, arc.from, y, arc.to);
}

// Every y with n*y = d on the circle.
std::vector<CircleElement> circle_roots(const CyclicSpec& spec, const CircleElement& d, std::int64_t n) {
  std::vector<CircleElement> out;
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    if (mod_floor(d.num(), n) == 0) out.push_back(Rational(d.num() / n));
    return out;
  }
  for (std::int64_t m = 0; m < n; ++m) {
    Rational y = (d + Rational(m)) / Rational(n);
    if (is_power_of_two(y.den())) out.push_back(y);
  }
  return out;
}

bool arc_piece_member(const CyclicSpec& spec, const CircleElement& x, const ArcPiece& p) {
  auto roots = circle_roots(spec, circle_sub(spec, x, p.base), p.modulus);
  return std::any_of(roots.begin(), roots.end(), [&](const CircleElement& y) { return on_arc(spec, y, p.arc); });
}

std::string flags_text(bool lo, bool hi) { return std::string(lo ? "[" : "(") + (hi ? "]" : ")"); }

SetExpr union_of(std::vector<SetExpr> terms) {
  if (terms.empty()) return atom_expr("empty", {});
  SetExpr out = std::move(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) out = binary_expr(Op::Union, std::move(out), std::move(terms[i]));
  return out;
}

double real_or_coord(const GroupSpec& spec, const GroupElement& x) {
  if (spec.archimedean()) return static_cast<double>(real_value(spec, x).approx());
  return x.coords[0].to_double();
}

Endpoint random_endpoint(Rng& rng, const GroupSpec& spec, const RandomParams& p) {
  Endpoint e;
  if (rng.chance(1, 10)) {
    e.kind = rng.chance(1, 2) ? Endpoint::Kind::NegInf : Endpoint::Kind::PosInf;
    return e;
  }
  if (spec.lex_ordered() && spec.arity() > 1 && rng.chance(1, 4)) {
    e.kind = Endpoint::Kind::Prefix;
    GroupElement g = random_element(rng, spec, p.range, p.den);
    e.prefix.assign(g.coords.begin(), g.coords.begin() + rng.uniform(1, spec.arity() - 1));
    return e;
  }
  if (p.allow_reals && spec.kind() == GroupKind::Rat && rng.chance(1, 6)) {
    e.kind = Endpoint::Kind::Real;
    std::int64_t c = rng.uniform(1, 3);
    std::int64_t b = rng.chance(1, 2) ? 1 : -1;
    e.real = QuadIrr(rng.uniform(-p.range * c, p.range * c), b, c, 2);
    return e;
  }
  if (p.allow_reals && spec.kind() == GroupKind::ZPlusAlphaZ && rng.chance(1, 6)) {
    e.kind = Endpoint::Kind::Real;
    e.real = QuadIrr(Rational(2 * rng.uniform(-p.range, p.range) + 1, 2));
    return e;
  }
  e.kind = Endpoint::Kind::Element;
  e.element = random_element(rng, spec, p.range, p.den);
  return e;
}

SetExpr random_interval(Rng& rng, const GroupSpec& spec, const RandomParams& p) {
  Endpoint lo = random_endpoint(rng, spec, p);
  Endpoint hi = random_endpoint(rng, spec, p);
  if (lo.kind == Endpoint::Kind::PosInf) lo.kind = Endpoint::Kind::NegInf;
  if (hi.kind == Endpoint::Kind::NegInf) hi.kind = Endpoint::Kind::PosInf;
  auto rank = [&](const Endpoint& e) {
    // Orders finite endpoints so that most intervals come out non-empty.
    if (e.kind == Endpoint::Kind::Element) return real_or_coord(spec, e.element);
    if (e.kind == Endpoint::Kind::Prefix) return e.prefix[0].to_double();
    if (e.kind == Endpoint::Kind::Real) return static_cast<double>(e.real.approx());
    return 0.0;
  };
  bool finite = lo.kind != Endpoint::Kind::NegInf && hi.kind != Endpoint::Kind::PosInf;
  if (finite && rank(lo) > rank(hi)) std::swap(lo, hi);
  std::string flags = flags_text(rng.chance(1, 2), rng.chance(1, 2));
  return atom_expr("interval", {format_endpoint(spec, lo), format_endpoint(spec, hi), flags});
}

}  // namespace

// Windows ---------------------------------------------------------------------------

std::vector<GroupElement> enum_window(const GroupWindow& w) {
  const GroupSpec& spec = w.spec;
  if (w.lo > w.hi) return {};
  std::int64_t den = 1;
  bool dyadic = spec.kind() == GroupKind::Dyadic;
  if (spec.kind() == GroupKind::Rat || spec.kind() == GroupKind::LexRat || dyadic) den = std::max<std::int64_t>(1, w.den);
  auto values = grid_values(w.lo, w.hi, den, dyadic);
  long double exact = 1;
  for (int i = 0; i < spec.arity(); ++i) exact *= static_cast<long double>(values.size());
  if (exact > static_cast<long double>(w.cap))
    throw CapExceeded(static_cast<std::int64_t>(std::min<long double>(exact, 9e18L)), w.cap);
  std::vector<std::vector<Rational>> tuples;
  std::vector<Rational> prefix;
  cartesian(values, spec.arity(), prefix, tuples);
  std::vector<GroupElement> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) {
    GroupElement x = make_element(spec, std::move(t));
    if (w.lower && cmp(spec, x, *w.lower) < 0) continue;
    if (w.upper && cmp(spec, x, *w.upper) > 0) continue;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) { return cmp(spec, a, b) < 0; });
  return out;
}

std::vector<CircleElement> enum_circle_window(const CircleWindow& w) {
  std::vector<CircleElement> out;
  if (w.spec.kind() == CyclicSpec::Kind::ZWithSAlpha) {
    for (std::int64_t k = w.lo; k <= w.hi; ++k) out.emplace_back(k);
    return out;
  }
  if (!is_power_of_two(w.den)) throw std::invalid_argument("dyadic window denominator must be a power of two");
  for (std::int64_t k = 0; k < w.den; ++k) out.emplace_back(k, w.den);
  return out;
}

std::vector<Rational> enum_rational_window(std::int64_t bound, std::int64_t max_den) {
  std::set<Rational> out;
  for (std::int64_t q = 1; q <= max_den; ++q)
    for (std::int64_t k = -bound; k <= bound; ++k) out.insert(Rational(k, q));
  return {out.begin(), out.end()};
}

// Oracles -----------------------------------------------------------------------------

GroupOracle::GroupOracle(const SetExpr& e, const GroupSpec& spec) : spec_(spec), root_(compile(e, spec)) {}

GroupOracle::Node GroupOracle::compile(const SetExpr& e, const GroupSpec& spec) {
  Node n{e.op, {}, {}};
  if (e.op == Op::Atom) n.atom = type_group_atom(e, spec);
  for (const auto& c : e.children) n.children.push_back(compile(c, spec));
  return n;
}

bool GroupOracle::eval(const Node& n, const GroupElement& x) const {
  switch (n.op) {
    case Op::Atom: return atom_member(spec_, n.atom, x);
    case Op::Complement: return !eval(n.children[0], x);
    case Op::Union: return eval(n.children[0], x) || eval(n.children[1], x);
    case Op::Intersect: return eval(n.children[0], x) && eval(n.children[1], x);
    case Op::Difference: return eval(n.children[0], x) && !eval(n.children[1], x);
  }
  return false;
}

bool GroupOracle::operator()(const GroupElement& x) const { return eval(root_, x); }

bool circle_coset_member(const CyclicSpec& spec, const CircleElement& x, std::int64_t n, const CircleElement& a) {
  return !circle_roots(spec, circle_sub(spec, x, a), n).empty();
}

CircleOracle::CircleOracle(const SetExpr& e, const CyclicSpec& spec) : spec_(spec), root_(compile(e, spec)) {}

CircleOracle::Node CircleOracle::compile(const SetExpr& e, const CyclicSpec& spec) {
  Node n{e.op, {}, {}};
  if (e.op == Op::Atom) n.atom = type_circle_atom(e, spec);
  for (const auto& c : e.children) n.children.push_back(compile(c, spec));
  return n;
}

bool CircleOracle::eval(const Node& n, const CircleElement& x) const {
  switch (n.op) {
    case Op::Atom:
      switch (n.atom.kind) {
        case CircleAtom::Kind::Arc: return arc_piece_member(spec_, x, n.atom.arc);
        case CircleAtom::Kind::Coset: return circle_coset_member(spec_, x, n.atom.modulus, n.atom.element);
        case CircleAtom::Kind::Point: return x == n.atom.element;
        case CircleAtom::Kind::All: return true;
        case CircleAtom::Kind::Empty: return false;
      }
      return false;
    case Op::Complement: return !eval(n.children[0], x);
    case Op::Union: return eval(n.children[0], x) || eval(n.children[1], x);
    case Op::Intersect: return eval(n.children[0], x) && eval(n.children[1], x);
    case Op::Difference: return eval(n.children[0], x) && !eval(n.children[1], x);
  }
  return false;
}

bool CircleOracle::operator()(const CircleElement& x) const { return eval(root_, x); }

PAdicOracle::PAdicOracle(const SetExpr& e, const PAdicContext& ctx) : ctx_(ctx), root_(compile(e, ctx)) {}

PAdicOracle::Node PAdicOracle::compile(const SetExpr& e, const PAdicContext& ctx) {
  Node n{e.op, {}, {}};
  if (e.op == Op::Atom) n.atom = type_padic_atom(e, ctx);
  for (const auto& c : e.children) n.children.push_back(compile(c, ctx));
  return n;
}

bool PAdicOracle::eval(const Node& n, const Rational& x) const {
  switch (n.op) {
    case Op::Atom:
      switch (n.atom.kind) {
        case PAdicAtom::Kind::Power: {
          const PAdicPiece& piece = n.atom.piece;
          if (piece.ball && !in_ball(ctx_, x, piece.ball->center, piece.ball->radius)) return false;
          Rational d = x - piece.a;
          return d.num() != 0 && is_nth_power(ctx_, d / piece.b, piece.n);
        }
        case PAdicAtom::Kind::Ball: return in_ball(ctx_, x, n.atom.ball.center, n.atom.ball.radius);
        case PAdicAtom::Kind::Point: return x == n.atom.point;
        case PAdicAtom::Kind::All: return true;
        case PAdicAtom::Kind::Empty: return false;
      }
      return false;
    case Op::Complement: return !eval(n.children[0], x);
    case Op::Union: return eval(n.children[0], x) || eval(n.children[1], x);
    case Op::Intersect: return eval(n.children[0], x) && eval(n.children[1], x);
    case Op::Difference: return eval(n.children[0], x) && !eval(n.children[1], x);
  }
  return false;
}

bool PAdicOracle::operator()(const Rational& x) const { return eval(root_, x); }

Bitmap<GroupElement> oracle_eval(const SetExpr& e, const GroupWindow& w, bool parallel) {
  GroupOracle oracle(e, w.spec);
  auto elements = enum_window(w);
  return parallel ? bitmap_parallel(elements, oracle) : bitmap_serial(elements, oracle);
}

Bitmap<GroupElement> symbolic_eval(const CncSet& s, const std::vector<GroupElement>& elements, bool parallel) {
  auto pred = [&](const GroupElement& x) { return cnc_member(x, s); };
  return parallel ? bitmap_parallel(elements, pred) : bitmap_serial(elements, pred);
}

// Random instances ----------------------------------------------------------------------

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t draw = engine_();
  if (span != 0) draw %= span;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw);
}

GroupElement random_element(Rng& rng, const GroupSpec& spec, std::int64_t range, std::int64_t den) {
  std::vector<Rational> coords;
  for (int i = 0; i < spec.arity(); ++i) {
    switch (spec.kind()) {
      case GroupKind::Rat:
      case GroupKind::LexRat: {
        std::int64_t q = rng.uniform(1, std::max<std::int64_t>(1, den));
        coords.emplace_back(rng.uniform(-range * q, range * q), q);
        break;
      }
      case GroupKind::Dyadic: {
        std::int64_t q = 1;
        while (q < den && rng.chance(1, 2)) q *= 2;
        coords.emplace_back(rng.uniform(-range * q, range * q), q);
        break;
      }
      default: coords.emplace_back(rng.uniform(-range, range));
    }
  }
  return make_element(spec, std::move(coords));
}

SetExpr random_group_expr(Rng& rng, const GroupSpec& spec, const RandomParams& p) {
  std::vector<SetExpr> terms;
  auto count = rng.uniform(1, p.max_pieces);
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t kind = rng.uniform(0, 19);
    auto coset = [&] {
      std::int64_t n = rng.uniform(1, p.max_modulus);
      return atom_expr("coset", {std::to_string(n), format_element(spec, random_element(rng, spec, p.range, p.den))});
    };
    if (kind < 10) {
      SetExpr c = coset();
      terms.push_back(binary_expr(Op::Intersect, std::move(c), random_interval(rng, spec, p)));
    } else if (kind < 15) {
      terms.push_back(random_interval(rng, spec, p));
    } else if (kind < 17 || !p.allow_points) {
      terms.push_back(coset());
    } else {
      terms.push_back(atom_expr("point", {format_element(spec, random_element(rng, spec, p.range, p.den))}));
    }
  }
  return union_of(std::move(terms));
}

SetExpr random_instance(std::uint64_t seed, const GroupSpec& spec, const RandomParams& p) {
  Rng rng(seed);
  return random_group_expr(rng, spec, p);
}

namespace {

CircleElement random_circle(Rng& rng, const CyclicSpec& spec, const RandomParams& p) {
  if (spec.kind() == CyclicSpec::Kind::ZWithSAlpha) return Rational(rng.uniform(-p.range, p.range));
  std::int64_t q = 1;
  while (q < p.den && rng.chance(2, 3)) q *= 2;
  return Rational(rng.uniform(0, q - 1), q);
}

}  // namespace

SetExpr random_circle_expr(Rng& rng, const CyclicSpec& spec, const RandomParams& p) {
  std::vector<SetExpr> terms;
  auto count = rng.uniform(1, p.max_pieces);
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t kind = rng.uniform(0, 9);
    if (kind < 7) {
      std::int64_t n = rng.uniform(1, p.max_modulus);
      terms.push_back(atom_expr("arc", {format_circle(spec, random_circle(rng, spec, p)),
                                        format_circle(spec, random_circle(rng, spec, p)), std::to_string(n),
                                        format_circle(spec, random_circle(rng, spec, p)),
                                        flags_text(rng.chance(1, 2), rng.chance(1, 2))}));
    } else if (kind < 9 || !p.allow_points) {
      std::int64_t n = rng.uniform(1, p.max_modulus);
      terms.push_back(atom_expr("coset", {std::to_string(n), format_circle(spec, random_circle(rng, spec, p))}));
    } else {
      terms.push_back(atom_expr("point", {format_circle(spec, random_circle(rng, spec, p))}));
    }
  }
  return union_of(std::move(terms));
}

SetExpr random_padic_expr(Rng& rng, const PAdicContext& ctx, const RandomParams& p) {
  (void)ctx;
  std::vector<SetExpr> terms;
  auto count = rng.uniform(1, p.max_pieces);
  auto small = [&](bool nonzero) {
    for (;;) {
      Rational r(rng.uniform(-p.range, p.range), rng.uniform(1, p.den));
      if (!nonzero || r.num() != 0) return r;
    }
  };
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t n = rng.uniform(1, p.max_modulus);
    SetExpr piece = atom_expr("pnpow", {std::to_string(n), small(true).to_string(), small(false).to_string()});
    if (rng.chance(1, 2)) {
      SetExpr ball = atom_expr("ball", {small(false).to_string(), std::to_string(rng.uniform(-2, 4))});
      piece = binary_expr(Op::Intersect, std::move(piece), std::move(ball));
    }
    terms.push_back(std::move(piece));
  }
  return union_of(std::move(terms));
}

// Audits --------------------------------------------------------------------------------

std::optional<GroupElement> divisible_between(const GroupSpec& spec, std::int64_t n, const GroupElement& x,
                                              const GroupElement& y) {
  if (cmp(spec, x, y) >= 0) return std::nullopt;
  switch (spec.kind()) {
    case GroupKind::Int:
    case GroupKind::LexInt: {
      // Discrete: scan the successors of x inside the last coordinate line.
      GroupElement u = *unit_element(spec);
      GroupElement z = add(spec, x, u);
      for (std::int64_t i = 0; i < n && cmp(spec, z, y) < 0; ++i, z = add(spec, z, u))
        if (in_nM(spec, z, n)) return z;
      return std::nullopt;
    }
    case GroupKind::Rat:
    case GroupKind::LexRat: {
      GroupElement mid = x;
      for (std::size_t i = 0; i < mid.coords.size(); ++i) mid.coords[i] = (x.coords[i] + y.coords[i]) / Rational(2);
      return mid;
    }
    case GroupKind::Dyadic: {
      Rational a = x.coords[0], b = y.coords[0];
      for (std::int64_t q = 1; q <= (std::int64_t{1} << 40); q *= 2) {
        // smallest multiple of n/q above a
        Rational step(n, q);
        Rational k = Rational((a / step).floor() + 1);
        Rational cand = k * step;
        if (cand < b) return make_element(spec, {cand});
      }
      return std::nullopt;
    }
    case GroupKind::ZPlusAlphaZ: {
      QuadIrr lo = real_value(spec, x), hi = real_value(spec, y);
      QuadIrr alpha = spec.alpha();
      for (std::int64_t t = 0; t <= 200000; ++t) {
        for (std::int64_t s : {t, -t}) {
          std::int64_t q = n * s;
          QuadIrr base = lo - alpha * Rational(q);
          std::int64_t p = n * ((base * Rational(1, n)).floor() + 1);
          if (quad_compare(QuadIrr(Rational(p)) + alpha * Rational(q), hi) < 0)
            return make_element(spec, {Rational(p), Rational(q)});
          if (t == 0) break;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

RnAudit rn_window_audit(const GroupSpec& spec, std::int64_t n, const GroupWindow& w) {
  RnAudit out;
  auto elements = enum_window(w);
  std::vector<std::size_t> nonneg;
  GroupElement z = zero(spec);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (cmp(spec, elements[i], z) >= 0) nonneg.push_back(i);

  // ok[k]: every interval of the window inside [0, elements[nonneg[k]]] with
  // at least n elements meets nM. Monotone in k, so a prefix of true values.
  std::vector<bool> ok(nonneg.size(), true);
  bool still = true;
  for (std::size_t k = 0; k < nonneg.size(); ++k) {
    const GroupElement& a = elements[nonneg[k]];
    if (still) {
      if (spec.discrete()) {
        // the run of n consecutive group elements ending at a
        GroupElement u = *unit_element(spec);
        GroupElement b = a;
        bool run = true, hit = in_nM(spec, b, n);
        for (std::int64_t i = 1; i < n && run; ++i) {
          b = sub(spec, b, u);
          if (cmp(spec, b, z) < 0) run = false;
          else hit = hit || in_nM(spec, b, n);
        }
        if (run && !hit) still = false;
      } else if (k > 0) {
        if (!divisible_between(spec, n, elements[nonneg[k - 1]], a)) still = false;
      }
      ++out.checked;
    }
    ok[k] = still;
  }

  // The closed form must be the largest convex subgroup on which the property holds.
  ConvexSubgroup rn = regular_subgroup(spec, n);
  auto subs = convex_subgroups(spec);
  auto inside = [&](const ConvexSubgroup& h) {
    for (std::size_t k = 0; k < nonneg.size(); ++k)
      if (h.contains(elements[nonneg[k]]) && !ok[k]) return std::optional<GroupElement>(elements[nonneg[k]]);
    return std::optional<GroupElement>();
  };
  if (auto bad = inside(rn)) {
    out.agrees = false;
    out.counterexample = bad;
    return out;
  }
  if (!rn.is_whole()) {
    ConvexSubgroup bigger{spec, rn.level - 1};
    if (!inside(bigger)) {
      out.agrees = false;
      return out;
    }
  }
  return out;
}

std::optional<bool> oracle_related(const GroupElement& a0, const GroupElement& b0,
                                   const std::function<bool(const GroupElement&)>& in_x, const GroupSpec& spec,
                                   std::int64_t n) {
  if (a0 == b0) return true;
  GroupElement a = a0, b = b0;
  if (cmp(spec, a, b) > 0) std::swap(a, b);
  ConvexSubgroup rn = n >= 2 ? regular_subgroup(spec, n) : ConvexSubgroup{spec, 0};
  if (spec.discrete()) {
    // b' - a' in R_n forces b - a in R_n; then the witnesses nearest to a and b are best.
    if (!rn.contains(sub(spec, b, a))) return false;
    GroupElement d = sub(spec, b, a);
    for (std::size_t i = 0; i + 1 < d.coords.size(); ++i)
      if (d.coords[i] != Rational(0)) return std::nullopt;  // the scan below would never reach b
    GroupElement u = *unit_element(spec);
    GroupElement lo = sub(spec, a, scale(spec, u, n + 1));
    GroupElement hi = add(spec, b, scale(spec, u, n + 1));
    std::vector<int> verdict(static_cast<std::size_t>(n), -1);
    std::int64_t i = 0;
    for (GroupElement x = add(spec, lo, u); cmp(spec, x, hi) < 0; x = add(spec, x, u), ++i) {
      std::size_t r = static_cast<std::size_t>(i % n);
      int m = in_x(x) ? 1 : 0;
      if (verdict[r] == -1) verdict[r] = m;
      else if (verdict[r] != m) return false;
    }
    return true;
  }
  if (spec.kind() != GroupKind::Rat) throw std::invalid_argument("oracle_related supports int, lexint and rat");
  // n = 1: X must be constant on a neighbourhood of [a, b]; scan a grid plus one-sided probes.
  const Rational h(1, 840), eps(1, std::int64_t{1} << 30);
  const Rational lo = a.coords[0], hi = b.coords[0];
  bool first = in_x(make_element(spec, {lo - eps}));
  auto same = [&](const Rational& t) { return in_x(make_element(spec, {t})) == first; };
  if (!same(hi + eps)) return false;
  for (Rational t = lo; t < hi; t += h)
    if (!same(t)) return false;
  return same(hi);
}

std::int64_t gcd_of_differences(const std::function<bool(std::int64_t)>& member, std::int64_t bound) {
  std::optional<std::int64_t> first;
  std::int64_t g = 0;
  for (std::int64_t k = -bound; k <= bound; ++k) {
    if (!member(k)) continue;
    if (!first) first = k;
    else g = std::gcd(g, k - *first);
  }
  return g;
}

}  // namespace cnckit
