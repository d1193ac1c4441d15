#include "cnckit/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnckit {

namespace {

std::string strip(std::string_view t) {
  std::string s;
  for (char ch : t)
    if (ch != ' ') s += ch;
  return s;
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

std::int64_t odd_part(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

// Inverse of 2 modulo an odd o > 1.
std::int64_t inverse_of_two(std::int64_t o) { return (o + 1) / 2; }

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  i128 r = 1 % m, b = mod_floor(base, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

void require_same(const GroupSpec& spec, const GroupElement& x) {
  if (x.kind != spec.kind() || static_cast<int>(x.coords.size()) != spec.arity())
    throw std::invalid_argument("element does not belong to group " + spec.to_string());
}

}  // namespace

Ordering to_ordering(int c) { return c < 0 ? Ordering::lt : (c > 0 ? Ordering::gt : Ordering::eq); }
int to_int(Ordering o) { return o == Ordering::lt ? -1 : (o == Ordering::gt ? 1 : 0); }

GroupSpec GroupSpec::lex_int(int k) {
  if (k < 1) throw std::invalid_argument("lexicographic arity must be >= 1");
  if (k == 1) return integers();
  return GroupSpec(GroupKind::LexInt, k, {});
}

GroupSpec GroupSpec::lex_rat(int k) {
  if (k < 1) throw std::invalid_argument("lexicographic arity must be >= 1");
  if (k == 1) return rationals();
  return GroupSpec(GroupKind::LexRat, k, {});
}

GroupSpec GroupSpec::z_plus_alpha_z(const QuadIrr& alpha) {
  if (alpha.is_rational()) throw std::invalid_argument("alpha must be irrational");
  return GroupSpec(GroupKind::ZPlusAlphaZ, 2, alpha);
}

bool GroupSpec::archimedean() const { return kind_ != GroupKind::LexInt && kind_ != GroupKind::LexRat; }

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::Int: return "int";
    case GroupKind::Rat: return "rat";
    case GroupKind::LexInt: return "lexint:" + std::to_string(arity_);
    case GroupKind::LexRat: return "lexrat:" + std::to_string(arity_);
    case GroupKind::ZPlusAlphaZ: return "z+alpha:" + alpha_.to_string();
    case GroupKind::Dyadic: return "dyadic";
  }
  return "?";
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s = strip(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "int" || s == "z") return integers();
  if (s == "rat" || s == "q") return rationals();
  if (s == "dyadic") return dyadic();
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown group '" + std::string(text) + "'");
  std::string head = s.substr(0, colon), arg = s.substr(colon + 1);
  if (head == "lexint" || head == "lexz") return lex_int(static_cast<int>(Rational::parse(arg).num()));
  if (head == "lexrat" || head == "lexq") return lex_rat(static_cast<int>(Rational::parse(arg).num()));
  if (head == "z+alpha" || head == "zalpha") return z_plus_alpha_z(QuadIrr::parse(arg));
  throw std::invalid_argument("unknown group '" + std::string(text) + "'");
}

GroupElement make_element(const GroupSpec& spec, std::vector<Rational> coords) {
  GroupElement e{spec.kind(), std::move(coords)};
  check_element(spec, e);
  return e;
}

GroupElement zero(const GroupSpec& spec) {
  return GroupElement{spec.kind(), std::vector<Rational>(static_cast<std::size_t>(spec.arity()), Rational(0))};
}

void check_element(const GroupSpec& spec, const GroupElement& x) {
  require_same(spec, x);
  for (const auto& c : x.coords) {
    switch (spec.kind()) {
      case GroupKind::Int:
      case GroupKind::LexInt:
      case GroupKind::ZPlusAlphaZ:
        if (!c.is_integer()) throw std::invalid_argument("coordinate must be an integer: " + c.to_string());
        break;
      case GroupKind::Dyadic:
        if (!is_power_of_two(c.den())) throw std::invalid_argument("not a dyadic rational: " + c.to_string());
        break;
      default: break;
    }
  }
}

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  require_same(spec, x);
  require_same(spec, y);
  GroupElement r{spec.kind(), x.coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& x) {
  require_same(spec, x);
  GroupElement r{spec.kind(), x.coords};
  for (auto& c : r.coords) c = -c;
  return r;
}

GroupElement sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  return add(spec, x, neg(spec, y));
}

GroupElement scale(const GroupSpec& spec, const GroupElement& x, std::int64_t k) {
  require_same(spec, x);
  GroupElement r{spec.kind(), x.coords};
  for (auto& c : r.coords) c = c * Rational(k);
  return r;
}

QuadIrr real_value(const GroupSpec& spec, const GroupElement& x) {
  require_same(spec, x);
  switch (spec.kind()) {
    case GroupKind::Int:
    case GroupKind::Rat:
    case GroupKind::Dyadic: return QuadIrr(x.coords[0]);
    case GroupKind::ZPlusAlphaZ: return QuadIrr(x.coords[0]) + spec.alpha() * x.coords[1];
    default: throw std::invalid_argument("lexicographic groups have no real value");
  }
}

int cmp(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  require_same(spec, x);
  require_same(spec, y);
  if (spec.kind() == GroupKind::ZPlusAlphaZ) {
    QuadIrr diff = QuadIrr(x.coords[0] - y.coords[0]) + spec.alpha() * (x.coords[1] - y.coords[1]);
    return quad_sign(diff);
  }
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    auto c = x.coords[i] <=> y.coords[i];
    if (c < 0) return -1;
    if (c > 0) return 1;
  }
  return 0;
}

Ordering compare(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  return to_ordering(cmp(spec, x, y));
}

bool in_nM(const GroupSpec& spec, const GroupElement& x, std::int64_t n) {
  require_same(spec, x);
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  switch (spec.kind()) {
    case GroupKind::Rat:
    case GroupKind::LexRat: return true;
    case GroupKind::Dyadic: return x.coords[0].num() % odd_part(n) == 0;
    default:
      return std::all_of(x.coords.begin(), x.coords.end(), [n](const Rational& c) { return c.num() % n == 0; });
  }
}

std::optional<GroupElement> unit_element(const GroupSpec& spec) {
  if (!spec.discrete()) return std::nullopt;
  GroupElement u = zero(spec);
  u.coords.back() = Rational(1);
  return u;
}

std::int64_t effective_modulus(const GroupSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (spec.divisible()) return 1;
  if (spec.kind() == GroupKind::Dyadic) return odd_part(n);
  return n;
}

GroupElement residue(const GroupSpec& spec, const GroupElement& x, std::int64_t n) {
  require_same(spec, x);
  n = effective_modulus(spec, n);
  GroupElement r = zero(spec);
  if (n == 1) return r;
  if (spec.kind() == GroupKind::Dyadic) {
    const Rational& v = x.coords[0];
    std::int64_t m = 0;
    for (std::int64_t d = v.den(); d > 1; d /= 2) ++m;
    i128 val = static_cast<i128>(mod_floor(v.num(), n)) * pow_mod(inverse_of_two(n), m, n) % n;
    r.coords[0] = Rational(static_cast<std::int64_t>(val));
    return r;
  }
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = Rational(mod_floor(x.coords[i].num(), n));
  return r;
}

std::vector<GroupElement> residues(const GroupSpec& spec, std::int64_t n) {
  n = effective_modulus(spec, n);
  std::vector<GroupElement> out;
  if (n == 1) {
    out.push_back(zero(spec));
    return out;
  }
  int dims = spec.kind() == GroupKind::Dyadic ? 1 : spec.arity();
  std::vector<std::int64_t> digits(static_cast<std::size_t>(dims), 0);
  while (true) {
    GroupElement e = zero(spec);
    for (int i = 0; i < dims; ++i) e.coords[static_cast<std::size_t>(i)] = Rational(digits[static_cast<std::size_t>(i)]);
    out.push_back(e);
    int i = dims - 1;
    while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == n) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

bool residue_less(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

std::string format_element(const GroupSpec& spec, const GroupElement& x) {
  require_same(spec, x);
  switch (spec.kind()) {
    case GroupKind::Int:
    case GroupKind::Rat:
    case GroupKind::Dyadic: return x.coords[0].to_string();
    case GroupKind::ZPlusAlphaZ: {
      std::int64_t p = x.coords[0].num(), q = x.coords[1].num();
      if (q == 0) return std::to_string(p);
      std::string s = p == 0 ? (q < 0 ? "-" : "") : std::to_string(p) + (q < 0 ? "-" : "+");
      std::int64_t mag = q < 0 ? -q : q;
      return s + (mag == 1 ? "" : std::to_string(mag) + "*") + "alpha";
    }
    default: {
      std::string s = "(";
      for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) s += ",";
        s += x.coords[i].to_string();
      }
      return s + ")";
    }
  }
}

namespace {

GroupElement parse_alpha_element(const GroupSpec& spec, const std::string& s) {
  std::int64_t p = 0, q = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw std::invalid_argument("malformed element: " + s);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    auto pos = term.find("alpha");
    if (pos == std::string::npos) {
      p += sign * Rational::parse(term).num();
    } else {
      std::int64_t coeff = 1;
      if (pos > 0) {
        if (term[pos - 1] != '*') throw std::invalid_argument("expected '*' before alpha: " + term);
        coeff = Rational::parse(term.substr(0, pos - 1)).num();
      }
      q += sign * coeff;
    }
    any = true;
    i = j;
  }
  return make_element(spec, {Rational(p), Rational(q)});
}

}  // namespace

GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty element");
  if (spec.kind() == GroupKind::ZPlusAlphaZ && s.find("alpha") != std::string::npos)
    return parse_alpha_element(spec, s);
  if (s.front() == '(' || s.front() == '[') {
    char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw std::invalid_argument("unbalanced tuple: " + s);
    std::vector<Rational> coords;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      coords.push_back(Rational::parse(body.substr(start, comma - start)));
      start = comma + 1;
    }
    return make_element(spec, std::move(coords));
  }
  if (spec.kind() == GroupKind::ZPlusAlphaZ) return make_element(spec, {Rational::parse(s), Rational(0)});
  return make_element(spec, {Rational::parse(s)});
}

bool ConvexSubgroup::is_zero() const { return spec.archimedean() ? level == 1 : level == spec.arity(); }

bool ConvexSubgroup::contains(const GroupElement& x) const {
  if (level == 0) return true;
  if (spec.archimedean()) return x == zero(spec);
  for (int i = 0; i < level; ++i)
    if (x.coords[static_cast<std::size_t>(i)].num() != 0) return false;
  return true;
}

std::string ConvexSubgroup::to_string() const {
  if (is_whole()) return "M";
  if (is_zero()) return "{0}";
  std::string base = spec.kind() == GroupKind::LexInt ? "Z" : "Q";
  return "{0}^" + std::to_string(level) + "x" + base + "^" + std::to_string(spec.arity() - level);
}

}  // namespace cnckit
