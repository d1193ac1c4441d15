#include "cnckit/quadirr.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnckit {

std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("radicand must be positive");
  std::int64_t core = d, root = 1;
  for (std::int64_t p = 2; p * p <= core; ++p) {
    while (core % (p * p) == 0) {
      core /= p * p;
      root *= p;
    }
  }
  return {core, root};
}

QuadIrr::QuadIrr(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (c == 0) throw std::domain_error("QuadIrr denominator is zero");
  auto [core, root] = squarefree_decompose(d);
  i128 A = a, B = mul_checked(b, root), C = c;
  if (core == 1) {
    A = add_checked(A, B);
    B = 0;
  }
  if (B == 0) core = 1;
  if (C < 0) {
    A = -A;
    B = -B;
    C = -C;
  }
  i128 g = gcd64(narrow(A), narrow(C));
  if (B != 0) g = gcd64(narrow(g), narrow(B));
  if (g > 1) {
    A /= g;
    B /= g;
    C /= g;
  }
  a_ = narrow(A);
  b_ = narrow(B);
  c_ = narrow(C);
  d_ = core;
}

Rational QuadIrr::rational_value() const {
  if (b_ != 0) throw std::logic_error("QuadIrr is irrational");
  return Rational(a_, c_);
}

static std::int64_t common_radicand(const QuadIrr& x, const QuadIrr& y) {
  if (x.b() == 0) return y.d();
  if (y.b() == 0) return x.d();
  if (x.d() != y.d()) throw std::invalid_argument("QuadIrr operands use different radicands");
  return x.d();
}

QuadIrr operator+(const QuadIrr& x, const QuadIrr& y) {
  std::int64_t d = common_radicand(x, y);
  i128 a = add_checked(mul_checked(x.a_, y.c_), mul_checked(y.a_, x.c_));
  i128 b = add_checked(mul_checked(x.b_, y.c_), mul_checked(y.b_, x.c_));
  i128 c = mul_checked(x.c_, y.c_);
  // Reduce in 128 bits first so intermediate products do not overflow the constructor.
  i128 g = c;
  for (i128 v : {a, b}) {
    i128 p = g, q = v < 0 ? -v : v;
    while (q != 0) {
      i128 t = p % q;
      p = q;
      q = t;
    }
    g = p;
  }
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadIrr(narrow(a), narrow(b), narrow(c), d);
}

QuadIrr operator*(const QuadIrr& x, const Rational& r) {
  i128 a = mul_checked(x.a_, r.num());
  i128 b = mul_checked(x.b_, r.num());
  i128 c = mul_checked(x.c_, r.den());
  i128 g = c;
  for (i128 v : {a, b}) {
    i128 p = g, q = v < 0 ? -v : v;
    while (q != 0) {
      i128 t = p % q;
      p = q;
      q = t;
    }
    g = p;
  }
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadIrr(narrow(a), narrow(b), narrow(c), x.d_);
}

namespace {

using Big = boost::multiprecision::cpp_int;

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sgn(const Big& v) { return v.sign(); }

Big big(i128 v) {
  bool negative = v < 0;
  auto u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Big r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? Big(-r) : r;
}

// Sign of A + B*sqrt(d).
int sign_of(const Big& A, const Big& B, const Big& d) {
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Big lhs = A * A, rhs = B * B * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int sign_of(i128 A, i128 B, std::int64_t d) {
  int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  i128 lhs, bb, rhs;
  if (__builtin_mul_overflow(A, A, &lhs) || __builtin_mul_overflow(B, B, &bb) ||
      __builtin_mul_overflow(bb, static_cast<i128>(d), &rhs))
    return sign_of(big(A), big(B), Big(d));
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

}  // namespace

int quad_sign(const QuadIrr& q) { return sign_of(q.a(), q.b(), q.d()); }

int quad_compare(const QuadIrr& x, const QuadIrr& y) {
  // c1, c2 > 0, so sign(x - y) = sign((a1 c2 - a2 c1) + b1 c2 sqrt(d1) - b2 c1 sqrt(d2)).
  i128 A = static_cast<i128>(x.a()) * y.c() - static_cast<i128>(y.a()) * x.c();
  if (x.b() == 0 || y.b() == 0 || x.d() == y.d()) {
    i128 B = static_cast<i128>(x.b()) * y.c() - static_cast<i128>(y.b()) * x.c();
    return sign_of(A, B, x.b() == 0 ? y.d() : x.d());
  }
  Big a = big(A), b = Big(x.b()) * y.c(), c = Big(y.b()) * x.c();
  int s1 = sign_of(a, b, Big(x.d()));
  int t = sgn(c);
  if (s1 != t || s1 == 0) {
    if (s1 == t) return 0;
    return s1 > t ? 1 : -1;
  }
  // s1 and c sqrt(d2) share a sign; compare squares.
  Big rat = a * a + b * b * x.d() - c * c * y.d();
  Big irr = 2 * a * b;
  int sq = sign_of(rat, irr, Big(x.d()));
  return s1 > 0 ? sq : -sq;
}

std::int64_t QuadIrr::floor() const {
  long double v = approx();
  auto f = static_cast<std::int64_t>(std::floor(v));
  auto minus = [&](std::int64_t k) { return sign_of(add_checked(a_, -mul_checked(k, c_)), b_, d_); };
  while (minus(f) < 0) --f;
  while (minus(f + 1) >= 0) ++f;
  return f;
}

long double QuadIrr::approx() const {
  return (static_cast<long double>(a_) + static_cast<long double>(b_) * std::sqrt(static_cast<long double>(d_))) /
         static_cast<long double>(c_);
}

std::string QuadIrr::to_string() const {
  if (b_ == 0) return Rational(a_, c_).to_string();
  std::string s = "(" + std::to_string(a_);
  s += b_ < 0 ? "-" : "+";
  s += std::to_string(b_ < 0 ? -b_ : b_) + "*sqrt(" + std::to_string(d_) + "))/" + std::to_string(c_);
  return s;
}

namespace {

std::string strip(std::string_view t) {
  std::string s;
  for (char ch : t)
    if (ch != ' ') s += ch;
  return s;
}

// Parses a numerator: sum of integer terms and [k*]sqrt(d) terms.
void parse_numerator(const std::string& s, std::int64_t& a, std::int64_t& b, std::int64_t& d) {
  a = 0;
  b = 0;
  d = 1;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw std::invalid_argument("malformed quadratic irrational: " + s);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') {
      if (s[j] == '(') {
        auto close = s.find(')', j);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + s);
        j = close;
      }
      ++j;
    }
    std::string term = s.substr(i, j - i);
    auto sq = term.find("sqrt(");
    if (sq == std::string::npos) {
      a += sign * Rational::parse(term).num();
      if (!Rational::parse(term).is_integer()) throw std::invalid_argument("non-integer term: " + term);
    } else {
      std::int64_t coeff = 1;
      if (sq > 0) {
        std::string k = term.substr(0, sq);
        if (k.back() != '*') throw std::invalid_argument("expected '*' before sqrt: " + term);
        coeff = Rational::parse(k.substr(0, k.size() - 1)).num();
      }
      auto close = term.find(')', sq);
      std::int64_t rad = Rational::parse(term.substr(sq + 5, close - sq - 5)).num();
      if (b != 0 && rad != d) throw std::invalid_argument("two radicands in one value: " + s);
      b += sign * coeff;
      d = rad;
    }
    any = true;
    i = j;
  }
}

}  // namespace

QuadIrr QuadIrr::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty quadratic irrational");
  if (s.find("sqrt") == std::string::npos) return QuadIrr(Rational::parse(s));
  std::string num = s;
  std::int64_t den = 1;
  if (s.front() == '(') {
    // Find the parenthesis matching the leading '('.
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + s);
    num = s.substr(1, close - 1);
    std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '/') throw std::invalid_argument("expected '/' after numerator: " + s);
      den = Rational::parse(rest.substr(1)).num();
    }
  }
  std::int64_t a, b, d;
  parse_numerator(num, a, b, d);
  return QuadIrr(a, b, den, d);
}

}  // namespace cnckit
