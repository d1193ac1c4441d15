#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnckit/rational.hpp"

namespace cnckit {

class PAdicContext {
 public:
  /// Throws std::invalid_argument unless p is prime.
  explicit PAdicContext(std::int64_t p);
  std::int64_t p() const { return p_; }

 private:
  std::int64_t p_;
};

/// v_p(x); std::nullopt stands for +inf (x = 0).
std::optional<std::int64_t> valuation(const PAdicContext& ctx, const Rational& x);
/// v_p of an integer n >= 1.
std::int64_t valuation_int(std::int64_t p, std::int64_t n);
/// v(x - c) >= k.
bool in_ball(const PAdicContext& ctx, const Rational& x, const Rational& c, std::int64_t k);

/// x in (Q_p^x)^n. Throws std::invalid_argument for x = 0 or n < 1.
bool is_nth_power(const PAdicContext& ctx, const Rational& x, std::int64_t n);
/// Precision 2*v_p(n) + 1 at which nth powers of units are decided.
std::int64_t power_precision(std::int64_t p, std::int64_t n);

struct PAdicBall {
  Rational center;
  std::int64_t radius = 0;

  friend bool operator==(const PAdicBall&, const PAdicBall&) = default;
};

/// (a + b*P_n) ∩ ball.
struct PAdicPiece {
  Rational a;
  Rational b{1};
  std::int64_t n = 1;
  std::optional<PAdicBall> ball;

  friend bool operator==(const PAdicPiece&, const PAdicPiece&) = default;
};

struct PAdicSet {
  std::int64_t p = 2;
  std::vector<PAdicPiece> pieces;
};

void check_piece(const PAdicPiece& piece);

/// u * p^j with v(u) = 0, or zero. Lets membership be evaluated at levels j
/// whose powers p^j leave the 64-bit range.
struct PAdicPoint {
  bool is_zero = false;
  Rational unit{1};
  std::int64_t level = 0;
};
PAdicPoint to_point(const PAdicContext& ctx, const Rational& x);

bool pset_member(const PAdicContext& ctx, const Rational& x, const PAdicSet& s);
bool pset_member_point(const PAdicContext& ctx, const PAdicPoint& x, const PAdicSet& s);

/// Bounded-depth comparison of germs at 0.
///
/// Both sets are evaluated on u * p^j for u over the unit residues modulo
/// p^m (m the largest power precision among the pieces) and k0 <= j <= depth.
/// k0 is the level from which every piece is periodic in j, clamped to depth.
/// `conclusive` is set when k0 was not clamped and a full period was scanned;
/// only then is `equal` a proof rather than a semi-decision.
struct GermResult {
  bool equal = true;
  bool conclusive = false;
  std::int64_t first_level = 0;
  std::optional<std::int64_t> discrepancy_level;
  std::optional<Rational> discrepancy_unit;
};
GermResult germ_compare(const PAdicContext& ctx, const PAdicSet& a, const PAdicSet& b, std::int64_t depth);
bool germ_equal_at_zero(const PAdicContext& ctx, const PAdicSet& a, const PAdicSet& b, std::int64_t depth);

/// |Q_p^x / P_n|.
std::int64_t power_index(const PAdicContext& ctx, std::int64_t n);

std::string format_valuation(const std::optional<std::int64_t>& v);

}  // namespace cnckit
