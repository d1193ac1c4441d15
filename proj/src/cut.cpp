#include "cnckit/cut.hpp"

#include <stdexcept>

namespace cnckit {

namespace {

using Kind = Cut::Kind;

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

std::optional<GroupElement> element_of_real(const GroupSpec& spec, const QuadIrr& r) {
  switch (spec.kind()) {
    case GroupKind::Rat:
      if (r.is_rational()) return make_element(spec, {r.rational_value()});
      return std::nullopt;
    case GroupKind::Dyadic:
      if (r.is_rational() && is_power_of_two(r.rational_value().den())) return make_element(spec, {r.rational_value()});
      return std::nullopt;
    case GroupKind::Int:
      if (r.is_rational() && r.rational_value().is_integer()) return make_element(spec, {r.rational_value()});
      return std::nullopt;
    case GroupKind::ZPlusAlphaZ: {
      const QuadIrr& a = spec.alpha();
      if (r.is_rational()) {
        if (!r.rational_value().is_integer()) return std::nullopt;
        return make_element(spec, {r.rational_value(), Rational(0)});
      }
      if (r.d() != a.d()) return std::nullopt;
      Rational q = Rational(r.b(), r.c()) / Rational(a.b(), a.c());
      if (!q.is_integer()) return std::nullopt;
      QuadIrr p = r - a * q;
      if (!p.is_rational() || !p.rational_value().is_integer()) return std::nullopt;
      return make_element(spec, {p.rational_value(), q});
    }
    default: throw std::invalid_argument("lexicographic groups have no real embedding");
  }
}

Cut real_cut(const GroupSpec& spec, const QuadIrr& r, bool closed) {
  if (auto e = element_of_real(spec, r)) return closed ? closed_at(spec, *e) : open_at(spec, *e);
  return gap_at(spec, r);
}

namespace {

void check_prefix(const GroupSpec& spec, const std::vector<Rational>& prefix) {
  if (prefix.empty() || static_cast<int>(prefix.size()) > spec.arity())
    throw std::invalid_argument("cut prefix has wrong length");
  if (!spec.lex_ordered() && static_cast<int>(prefix.size()) != spec.arity())
    throw std::invalid_argument("prefix cuts need a lexicographic group");
  GroupElement probe = zero(spec);
  for (std::size_t i = 0; i < prefix.size(); ++i) probe.coords[i] = prefix[i];
  check_element(spec, probe);
}

QuadIrr cut_value(const GroupSpec& spec, const Cut& c) {
  if (c.kind == Kind::Gap) return c.gap;
  return real_value(spec, GroupElement{spec.kind(), c.prefix});
}

int prefix_cmp(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    auto c = a[i] <=> b[i];
    if (c < 0) return -1;
    if (c > 0) return 1;
  }
  return 0;
}

}  // namespace

Cut normalize_cut(const GroupSpec& spec, Cut c) {
  switch (c.kind) {
    case Kind::NegInf:
    case Kind::PosInf:
      c.prefix.clear();
      c.gap = QuadIrr();
      return c;
    case Kind::Gap:
      if (spec.discrete() || spec.kind() == GroupKind::LexRat)
        throw std::invalid_argument("real gap cuts are not available for group " + spec.to_string());
      if (spec.kind() == GroupKind::ZPlusAlphaZ && !c.gap.is_rational() && c.gap.d() != spec.alpha().d())
        throw std::invalid_argument("gap endpoint must use the radicand of alpha");
      if (element_of_real(spec, c.gap))
        throw std::invalid_argument("gap endpoint " + c.gap.to_string() + " lies in the group");
      c.prefix.clear();
      return c;
    default:
      check_prefix(spec, c.prefix);
      c.gap = QuadIrr();
      if (spec.discrete() && c.kind == Kind::Open) {
        c.kind = Kind::Closed;
        c.prefix.back() -= Rational(1);
      }
      return c;
  }
}

Cut closed_at(const GroupSpec& spec, const GroupElement& e) {
  check_element(spec, e);
  return normalize_cut(spec, Cut{Kind::Closed, e.coords, {}});
}

Cut open_at(const GroupSpec& spec, const GroupElement& e) {
  check_element(spec, e);
  return normalize_cut(spec, Cut{Kind::Open, e.coords, {}});
}

Cut closed_prefix(const GroupSpec& spec, std::vector<Rational> prefix) {
  return normalize_cut(spec, Cut{Kind::Closed, std::move(prefix), {}});
}

Cut open_prefix(const GroupSpec& spec, std::vector<Rational> prefix) {
  return normalize_cut(spec, Cut{Kind::Open, std::move(prefix), {}});
}

Cut gap_at(const GroupSpec& spec, const QuadIrr& r) { return normalize_cut(spec, Cut{Kind::Gap, {}, r}); }

bool full_prefix(const GroupSpec& spec, const Cut& c) {
  return c.is_point() && static_cast<int>(c.prefix.size()) == spec.arity();
}

GroupElement prefix_element(const GroupSpec& spec, const Cut& c) {
  if (!full_prefix(spec, c)) throw std::logic_error("cut has no endpoint element");
  return GroupElement{spec.kind(), c.prefix};
}

int cut_cmp(const GroupSpec& spec, const Cut& a, const Cut& b) {
  auto rank = [](const Cut& c) { return c.kind == Kind::NegInf ? 0 : (c.kind == Kind::PosInf ? 2 : 1); };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (rank(a) != 1) return 0;
  if (spec.lex_ordered() && a.kind != Kind::Gap && b.kind != Kind::Gap) {
    std::size_t m = std::min(a.prefix.size(), b.prefix.size());
    if (int c = prefix_cmp(a.prefix, b.prefix, m)) return c;
    // Open sits below every extension of its prefix, Closed above.
    int ta = a.kind == Kind::Open ? -1 : 1;
    int tb = b.kind == Kind::Open ? -1 : 1;
    if (a.prefix.size() == b.prefix.size()) return ta == tb ? 0 : (ta < tb ? -1 : 1);
    return a.prefix.size() < b.prefix.size() ? ta : -tb;
  }
  if (int c = quad_compare(cut_value(spec, a), cut_value(spec, b))) return c;
  int ta = a.kind == Kind::Closed ? 1 : 0;
  int tb = b.kind == Kind::Closed ? 1 : 0;
  return ta == tb ? 0 : (ta < tb ? -1 : 1);
}

Ordering cut_compare(const GroupSpec& spec, const Cut& a, const Cut& b) { return to_ordering(cut_cmp(spec, a, b)); }

const Cut& cut_min(const GroupSpec& spec, const Cut& a, const Cut& b) { return cut_cmp(spec, a, b) <= 0 ? a : b; }
const Cut& cut_max(const GroupSpec& spec, const Cut& a, const Cut& b) { return cut_cmp(spec, a, b) >= 0 ? a : b; }

bool cut_contains(const GroupSpec& spec, const Cut& c, const GroupElement& x) {
  switch (c.kind) {
    case Kind::NegInf: return false;
    case Kind::PosInf: return true;
    case Kind::Gap: return quad_compare(real_value(spec, x), c.gap) < 0;
    default: break;
  }
  int s;
  if (spec.lex_ordered()) {
    s = prefix_cmp(x.coords, c.prefix, c.prefix.size());
  } else {
    s = cmp(spec, x, GroupElement{spec.kind(), c.prefix});
  }
  return c.kind == Kind::Closed ? s <= 0 : s < 0;
}

Cut negate_cut(const GroupSpec& spec, const Cut& c) {
  Cut r = c;
  switch (c.kind) {
    case Kind::NegInf: return Cut::pos_inf();
    case Kind::PosInf: return Cut::neg_inf();
    case Kind::Gap: r.gap = -c.gap; return r;
    default: break;
  }
  for (auto& v : r.prefix) v = -v;
  r.kind = c.kind == Kind::Closed ? Kind::Open : Kind::Closed;
  return normalize_cut(spec, std::move(r));
}

Cut translate_cut(const GroupSpec& spec, const Cut& c, const GroupElement& g) {
  Cut r = c;
  switch (c.kind) {
    case Kind::NegInf:
    case Kind::PosInf: return r;
    case Kind::Gap: r.gap = c.gap + real_value(spec, g); return r;
    default: break;
  }
  for (std::size_t i = 0; i < r.prefix.size(); ++i) r.prefix[i] += g.coords[i];
  return r;
}

bool is_valuational(const GroupSpec& spec, const Cut& c) {
  if (c.is_infinite()) return false;
  return !stabilizer(spec, c).is_zero();
}

ConvexSubgroup stabilizer(const GroupSpec& spec, const Cut& c) {
  if (c.is_infinite()) return ConvexSubgroup{spec, 0};
  if (spec.archimedean()) return ConvexSubgroup{spec, 1};
  return ConvexSubgroup{spec, static_cast<int>(c.prefix.size())};
}

ConvexSet point_set(const GroupSpec& spec, const GroupElement& e) {
  return ConvexSet{open_at(spec, e), closed_at(spec, e)};
}

bool convex_empty(const GroupSpec& spec, const ConvexSet& c) { return cut_cmp(spec, c.lower, c.upper) >= 0; }

bool convex_member(const GroupSpec& spec, const GroupElement& x, const ConvexSet& c) {
  return cut_contains(spec, c.upper, x) && !cut_contains(spec, c.lower, x);
}

ConvexSet convex_intersect(const GroupSpec& spec, const ConvexSet& a, const ConvexSet& b) {
  return ConvexSet{cut_max(spec, a.lower, b.lower), cut_min(spec, a.upper, b.upper)};
}

ConvexSet convex_negate(const GroupSpec& spec, const ConvexSet& c) {
  return ConvexSet{negate_cut(spec, c.upper), negate_cut(spec, c.lower)};
}

ConvexSet convex_translate(const GroupSpec& spec, const ConvexSet& c, const GroupElement& g) {
  return ConvexSet{translate_cut(spec, c.lower, g), translate_cut(spec, c.upper, g)};
}

bool convex_bounded(const ConvexSet& c) { return !c.lower.is_infinite() && !c.upper.is_infinite(); }

std::string format_cut_value(const GroupSpec& spec, const Cut& c) {
  switch (c.kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Gap: return c.gap.to_string();
    default: break;
  }
  if (full_prefix(spec, c)) return format_element(spec, prefix_element(spec, c));
  std::string s = "[";
  for (std::size_t i = 0; i < c.prefix.size(); ++i) {
    if (i) s += ",";
    s += c.prefix[i].to_string();
  }
  return s + "]";
}

std::string format_convex(const GroupSpec& spec, const ConvexSet& c) {
  std::string lo = c.lower.kind == Kind::Open ? "[" : "(";
  std::string hi = c.upper.kind == Kind::Closed ? "]" : ")";
  return lo + format_cut_value(spec, c.lower) + ", " + format_cut_value(spec, c.upper) + hi;
}

}  // namespace cnckit
