#include "cnckit/padic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cnckit {

namespace {

std::int64_t pow_checked(std::int64_t p, std::int64_t e) {
  i128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = mul_checked(r, p);
  return narrow(r);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<i128>(a) * b) % m);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a = mod_floor(a, m);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod_floor(a, m);
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::invalid_argument("not invertible");
  return mod_floor(x, m);
}

// Residue of a p-adic unit modulo m = p^e.
std::int64_t unit_residue(const Rational& u, std::int64_t m) {
  return mul_mod(mod_floor(u.num(), m), inv_mod(u.den(), m), m);
}

Rational times_power(const Rational& x, std::int64_t p, std::int64_t e) {
  if (e >= 0) return x * Rational(pow_checked(p, e));
  return x / Rational(pow_checked(p, -e));
}

// x - a as (valuation, unit residue mod p^m); valuation nullopt when zero.
struct Diff {
  std::optional<std::int64_t> v;
  std::int64_t residue = 0;
};

Diff difference(const PAdicContext& ctx, const PAdicPoint& x, const Rational& a, std::int64_t m) {
  std::int64_t p = ctx.p();
  std::int64_t pm = pow_checked(p, m);
  if (x.is_zero) {
    auto va = valuation(ctx, a);
    if (!va) return Diff{};
    return Diff{va, unit_residue(-times_power(a, p, -*va), pm)};
  }
  auto va = valuation(ctx, a);
  std::int64_t j = x.level;
  if (!va || j < *va) {
    std::int64_t r = unit_residue(x.unit, pm);
    if (va && *va - j < m) r = mod_floor(r - unit_residue(times_power(a, p, -*va), pm) * pow_checked(p, *va - j), pm);
    return Diff{j, r};
  }
  Rational a_unit = times_power(a, p, -*va);
  if (j > *va) {
    std::int64_t r = mod_floor(-unit_residue(a_unit, pm), pm);
    if (j - *va < m) r = mod_floor(r + unit_residue(x.unit, pm) * pow_checked(p, j - *va), pm);
    return Diff{*va, r};
  }
  Rational inner = x.unit - a_unit;
  auto vi = valuation(ctx, inner);
  if (!vi) return Diff{};
  return Diff{*va + *vi, unit_residue(times_power(inner, p, -*vi), pm)};
}

bool unit_is_power(std::int64_t residue, std::int64_t n, std::int64_t p, std::int64_t pm) {
  for (std::int64_t y = 1; y < pm; ++y) {
    if (y % p == 0) continue;
    if (pow_mod(y, n, pm) == residue) return true;
  }
  return false;
}

bool piece_member(const PAdicContext& ctx, const PAdicPoint& x, const PAdicPiece& piece) {
  std::int64_t p = ctx.p();
  if (piece.ball) {
    Diff d = difference(ctx, x, piece.ball->center, 1);
    if (d.v && *d.v < piece.ball->radius) return false;
  }
  std::int64_t m = power_precision(p, piece.n);
  std::int64_t pm = pow_checked(p, m);
  Diff d = difference(ctx, x, piece.a, m);
  if (!d.v) return false;
  std::int64_t vb = *valuation(ctx, piece.b);
  std::int64_t v = *d.v - vb;
  if (mod_floor(v, piece.n) != 0) return false;
  std::int64_t r = mul_mod(d.residue, inv_mod(unit_residue(times_power(piece.b, p, -vb), pm), pm), pm);
  return unit_is_power(r, piece.n, p, pm);
}

}  // namespace

PAdicContext::PAdicContext(std::int64_t p) : p_(p) {
  bool prime = p >= 2;
  for (std::int64_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t valuation_int(std::int64_t p, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("valuation of 0");
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::optional<std::int64_t> valuation(const PAdicContext& ctx, const Rational& x) {
  if (x.num() == 0) return std::nullopt;
  return valuation_int(ctx.p(), x.num()) - valuation_int(ctx.p(), x.den());
}

bool in_ball(const PAdicContext& ctx, const Rational& x, const Rational& c, std::int64_t k) {
  auto v = valuation(ctx, x - c);
  return !v || *v >= k;
}

std::int64_t power_precision(std::int64_t p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("exponent must be >= 1");
  return 2 * valuation_int(p, n) + 1;
}

bool is_nth_power(const PAdicContext& ctx, const Rational& x, std::int64_t n) {
  if (x.num() == 0) throw std::invalid_argument("0 is not in the multiplicative group");
  if (n < 1) throw std::invalid_argument("exponent must be >= 1");
  std::int64_t v = *valuation(ctx, x);
  if (mod_floor(v, n) != 0) return false;
  std::int64_t pm = pow_checked(ctx.p(), power_precision(ctx.p(), n));
  return unit_is_power(unit_residue(times_power(x, ctx.p(), -v), pm), n, ctx.p(), pm);
}

void check_piece(const PAdicPiece& piece) {
  if (piece.b.num() == 0) throw std::invalid_argument("piece multiplier b must be non-zero");
  if (piece.n < 1) throw std::invalid_argument("piece exponent must be >= 1");
}

PAdicPoint to_point(const PAdicContext& ctx, const Rational& x) {
  auto v = valuation(ctx, x);
  if (!v) return PAdicPoint{true, Rational(1), 0};
  return PAdicPoint{false, times_power(x, ctx.p(), -*v), *v};
}

bool pset_member_point(const PAdicContext& ctx, const PAdicPoint& x, const PAdicSet& s) {
  if (s.p != ctx.p()) throw std::invalid_argument("prime mismatch");
  return std::any_of(s.pieces.begin(), s.pieces.end(), [&](const PAdicPiece& piece) {
    check_piece(piece);
    return piece_member(ctx, x, piece);
  });
}

bool pset_member(const PAdicContext& ctx, const Rational& x, const PAdicSet& s) {
  return pset_member_point(ctx, to_point(ctx, x), s);
}

GermResult germ_compare(const PAdicContext& ctx, const PAdicSet& a, const PAdicSet& b, std::int64_t depth) {
  std::int64_t p = ctx.p();
  std::int64_t m = 1, period = 1;
  std::optional<std::int64_t> threshold;
  auto raise = [&](std::int64_t t) { threshold = threshold ? std::max(*threshold, t) : t; };
  for (const PAdicSet* s : {&a, &b}) {
    if (s->p != p) throw std::invalid_argument("prime mismatch");
    for (const auto& piece : s->pieces) {
      check_piece(piece);
      std::int64_t mp = power_precision(p, piece.n);
      m = std::max(m, mp);
      period = std::lcm(period, piece.n);
      if (auto va = valuation(ctx, piece.a)) raise(*va + mp);
      if (piece.ball) {
        raise(piece.ball->radius);
        if (auto vc = valuation(ctx, piece.ball->center)) raise(*vc + 1);
      }
    }
  }
  std::int64_t start = threshold.value_or(depth - period + 1);
  GermResult out;
  out.first_level = std::min(start, depth);
  out.conclusive = start <= depth && depth - start + 1 >= period;
  std::int64_t pm = pow_checked(p, m);
  for (std::int64_t j = out.first_level; j <= depth; ++j) {
    for (std::int64_t u = 1; u < pm; ++u) {
      if (u % p == 0) continue;
      PAdicPoint x{false, Rational(u), j};
      if (pset_member_point(ctx, x, a) != pset_member_point(ctx, x, b)) {
        out.equal = false;
        out.conclusive = true;
        out.discrepancy_level = j;
        out.discrepancy_unit = Rational(u);
        return out;
      }
    }
  }
  return out;
}

bool germ_equal_at_zero(const PAdicContext& ctx, const PAdicSet& a, const PAdicSet& b, std::int64_t depth) {
  return germ_compare(ctx, a, b, depth).equal;
}

std::int64_t power_index(const PAdicContext& ctx, std::int64_t n) {
  std::int64_t p = ctx.p();
  std::int64_t pm = pow_checked(p, power_precision(p, n));
  std::vector<std::pair<std::int64_t, std::int64_t>> reps;  // (j, u)
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t u = 1; u < pm; ++u) {
      if (u % p == 0) continue;
      bool fresh = std::none_of(reps.begin(), reps.end(), [&](const auto& r) {
        if (r.first != j) return false;
        return unit_is_power(mul_mod(u, inv_mod(r.second, pm), pm), n, p, pm);
      });
      if (fresh) reps.emplace_back(j, u);
    }
  }
  return static_cast<std::int64_t>(reps.size());
}

std::string format_valuation(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "+inf"; }

}  // namespace cnckit
