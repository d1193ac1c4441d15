#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cnckit/rational.hpp"

namespace cnckit {

/// An exact real number (a + b*sqrt(d)) / c.
///
/// Normal form: c > 0, d square-free, gcd(a, b, c) = 1, and a rational value
/// is stored with b = 0 and d = 1. Two values are equal iff they are
/// structurally equal. Arithmetic is closed as long as the operands share the
/// same radicand (or one of them is rational); mixing two different radicands
/// throws.
class QuadIrr {
 public:
  QuadIrr() = default;
  QuadIrr(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  explicit QuadIrr(const Rational& r) : QuadIrr(r.num(), 0, r.den(), 1) {}

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational rational_value() const;  // requires is_rational()

  QuadIrr operator-() const { return QuadIrr(-a_, -b_, c_, d_); }
  friend QuadIrr operator+(const QuadIrr& x, const QuadIrr& y);
  friend QuadIrr operator-(const QuadIrr& x, const QuadIrr& y) { return x + (-y); }
  friend QuadIrr operator*(const QuadIrr& x, const Rational& r);
  friend bool operator==(const QuadIrr&, const QuadIrr&) = default;

  std::int64_t floor() const;
  long double approx() const;

  std::string to_string() const;
  /// Accepts `(a+b*sqrt(d))/c`, `(a-b*sqrt(d))/c`, `sqrt(d)`, `p/q`, `p`.
  static QuadIrr parse(std::string_view text);

 private:
  std::int64_t a_ = 0, b_ = 0, c_ = 1, d_ = 1;
};

/// Exact sign of (a + b*sqrt(d))/c: -1, 0 or +1.
int quad_sign(const QuadIrr& q);

/// Exact three-way comparison, also valid across different radicands.
int quad_compare(const QuadIrr& x, const QuadIrr& y);

/// Square-free part and the square root of the removed square: d = core * s^2.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t d);

}  // namespace cnckit
