#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnckit/cnc.hpp"
#include "cnckit/cyclic.hpp"
#include "cnckit/equiv.hpp"
#include "cnckit/expr.hpp"
#include "cnckit/padic.hpp"

namespace cnckit {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::int64_t count, std::int64_t cap)
      : std::runtime_error("window holds " + std::to_string(count) + " elements, cap is " + std::to_string(cap)),
        count_(count) {}
  std::int64_t count() const { return count_; }

 private:
  std::int64_t count_;
};

/// A finite grid of group elements: every coordinate is a rational in
/// [lo, hi] whose denominator is at most `den` (a power of two for Dyadic,
/// 1 for Int, LexInt and Z + alpha Z, where the box bounds the coefficients).
/// Optional element bounds further restrict to lower <= x <= upper.
struct GroupWindow {
  GroupSpec spec;
  std::int64_t lo = -10, hi = 10;
  std::int64_t den = 1;
  std::optional<GroupElement> lower, upper;
  std::int64_t cap = 1 << 20;
};

/// Sorted by the group order. Throws CapExceeded.
std::vector<GroupElement> enum_window(const GroupWindow& w);

/// ZWithSAlpha: integers in [lo, hi]. DyadicCircle: k / den in [0, 1).
struct CircleWindow {
  CyclicSpec spec;
  std::int64_t lo = -200, hi = 200;
  std::int64_t den = 64;
};
std::vector<CircleElement> enum_circle_window(const CircleWindow& w);

/// Rationals num/den with |num| <= bound and 1 <= den <= max_den, sorted, distinct.
std::vector<Rational> enum_rational_window(std::int64_t bound, std::int64_t max_den);

template <class T>
struct Bitmap {
  std::vector<T> elements;
  std::vector<std::uint8_t> bits;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;
};

/// Serial reference kernel.
template <class T, class Pred>
Bitmap<T> bitmap_serial(const std::vector<T>& elements, const Pred& pred) {
  Bitmap<T> out{elements, std::vector<std::uint8_t>(elements.size(), 0)};
  for (std::size_t i = 0; i < elements.size(); ++i) out.bits[i] = pred(elements[i]) ? 1 : 0;
  return out;
}

/// OpenMP kernel; same result as bitmap_serial. The predicate must be pure.
template <class T, class Pred>
Bitmap<T> bitmap_parallel(const std::vector<T>& elements, const Pred& pred) {
  Bitmap<T> out{elements, std::vector<std::uint8_t>(elements.size(), 0)};
  std::exception_ptr error;
  std::mutex error_lock;
  const auto n = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out.bits[static_cast<std::size_t>(i)] = pred(elements[static_cast<std::size_t>(i)]) ? 1 : 0;
    } catch (...) {
      std::lock_guard<std::mutex> g(error_lock);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Pointwise membership for a set expression over an ordered group, computed
/// from the atoms' definitions only (no cuts, no canonical forms).
class GroupOracle {
 public:
  GroupOracle(const SetExpr& e, const GroupSpec& spec);
  bool operator()(const GroupElement& x) const;

 private:
  struct Node {
    SetExpr::Op op;
    GroupAtom atom;
    std::vector<Node> children;
  };
  static Node compile(const SetExpr& e, const GroupSpec& spec);
  bool eval(const Node& n, const GroupElement& x) const;
  GroupSpec spec_;
  Node root_;
};

class CircleOracle {
 public:
  CircleOracle(const SetExpr& e, const CyclicSpec& spec);
  bool operator()(const CircleElement& x) const;

 private:
  struct Node {
    SetExpr::Op op;
    CircleAtom atom;
    std::vector<Node> children;
  };
  static Node compile(const SetExpr& e, const CyclicSpec& spec);
  bool eval(const Node& n, const CircleElement& x) const;
  CyclicSpec spec_;
  Node root_;
};

class PAdicOracle {
 public:
  PAdicOracle(const SetExpr& e, const PAdicContext& ctx);
  bool operator()(const Rational& x) const;

 private:
  struct Node {
    SetExpr::Op op;
    PAdicAtom atom;
    std::vector<Node> children;
  };
  static Node compile(const SetExpr& e, const PAdicContext& ctx);
  bool eval(const Node& n, const Rational& x) const;
  PAdicContext ctx_;
  Node root_;
};

/// x in a + nM on the circle, by search for a preimage.
bool circle_coset_member(const CyclicSpec& spec, const CircleElement& x, std::int64_t n, const CircleElement& a);

Bitmap<GroupElement> oracle_eval(const SetExpr& e, const GroupWindow& w, bool parallel = false);
Bitmap<GroupElement> symbolic_eval(const CncSet& s, const std::vector<GroupElement>& elements, bool parallel = false);

// Random instances ------------------------------------------------------------------

/// Draws are `lo + engine() % (hi - lo + 1)` on std::mt19937_64, so fixtures
/// can be reproduced in any language with the same generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RandomParams {
  int max_pieces = 3;
  std::int64_t max_modulus = 6;
  std::int64_t range = 20;   // endpoint coordinates in [-range, range]
  std::int64_t den = 4;      // endpoint denominators for dense kinds
  bool allow_points = true;
  bool allow_reals = true;   // irrational / half-integer gap endpoints
};

/// A union of up to max_pieces terms of the form coset & interval, coset,
/// interval or point, printed and parsed through the expression language.
SetExpr random_group_expr(Rng& rng, const GroupSpec& spec, const RandomParams& p);
GroupElement random_element(Rng& rng, const GroupSpec& spec, std::int64_t range, std::int64_t den);
/// Union of arc pieces over a circle.
SetExpr random_circle_expr(Rng& rng, const CyclicSpec& spec, const RandomParams& p);
/// Union of power-coset pieces, some restricted to balls.
SetExpr random_padic_expr(Rng& rng, const PAdicContext& ctx, const RandomParams& p);
/// random_group_expr with a fresh generator seeded by `seed`.
SetExpr random_instance(std::uint64_t seed, const GroupSpec& spec, const RandomParams& p);

// Definitional audits ------------------------------------------------------------------

/// Evaluates the definition of R_n on the window (every run of at least n
/// consecutive elements, resp. every open interval between window neighbours,
/// inside [0, |a|] meets nM) and compares with regular_subgroup.
struct RnAudit {
  bool agrees = true;
  std::int64_t checked = 0;
  std::optional<GroupElement> counterexample;
};
RnAudit rn_window_audit(const GroupSpec& spec, std::int64_t n, const GroupWindow& w);

/// Some element of nM strictly between x and y (x < y), found by search.
std::optional<GroupElement> divisible_between(const GroupSpec& spec, std::int64_t n, const GroupElement& x,
                                              const GroupElement& y);

/// Direct scan of the three clauses of E for Int and LexInt (exact) and Rat
/// (on a fine grid), using only pointwise membership in X. std::nullopt when
/// the scan is infinite (LexInt with a and b on different lines and R_n = M).
std::optional<bool> oracle_related(const GroupElement& a, const GroupElement& b,
                                   const std::function<bool(const GroupElement&)>& in_x, const GroupSpec& spec,
                                   std::int64_t n);

/// gcd of the differences of the members of a subgroup of Z inside [-bound, bound].
std::int64_t gcd_of_differences(const std::function<bool(std::int64_t)>& member, std::int64_t bound);

}  // namespace cnckit
