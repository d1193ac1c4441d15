#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnckit/cnc.hpp"
#include "cnckit/group.hpp"

namespace cnckit {

/// A cyclically ordered abelian group.
///
/// ZWithSAlpha: the integers, k placed on the circle R/Z at frac(k*alpha).
/// DyadicCircle: Z[1/2]/Z, elements stored as dyadic rationals in [0, 1).
class CyclicSpec {
 public:
  enum class Kind { ZWithSAlpha, DyadicCircle };

  static CyclicSpec z_with_alpha(const QuadIrr& alpha);
  static CyclicSpec dyadic_circle() { return CyclicSpec(Kind::DyadicCircle, {}); }

  Kind kind() const { return kind_; }
  const QuadIrr& alpha() const { return alpha_; }

  /// The ordered group isomorphic to the universal cover: Z + alpha Z with
  /// u = 1, resp. Z[1/2] with u = 1.
  GroupSpec cover_group() const;

  std::string to_string() const;
  /// `alpha:(1+sqrt(5))/2` or `dyadic`.
  static CyclicSpec parse(std::string_view text);

  friend bool operator==(const CyclicSpec&, const CyclicSpec&) = default;

 private:
  CyclicSpec(Kind kind, QuadIrr alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_ = Kind::DyadicCircle;
  QuadIrr alpha_;
};

/// Circle elements are integers (ZWithSAlpha) or dyadics in [0, 1).
using CircleElement = Rational;

void check_circle(const CyclicSpec& spec, const CircleElement& a);
CircleElement circle_add(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b);
CircleElement circle_neg(const CyclicSpec& spec, const CircleElement& a);
CircleElement circle_sub(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b);
CircleElement circle_scale(const CyclicSpec& spec, const CircleElement& a, std::int64_t n);

/// Position of `a` on R/Z as a number in [0, 1).
QuadIrr position(const CyclicSpec& spec, const CircleElement& a);

/// C(a, b, c).
bool cyclic_check(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b, const CircleElement& c);
/// a ≺ b: C(0, a, b), or a = 0 and b != 0.
bool circle_precedes(const CyclicSpec& spec, const CircleElement& a, const CircleElement& b);

std::string format_circle(const CyclicSpec& spec, const CircleElement& a);
CircleElement parse_circle(const CyclicSpec& spec, std::string_view text);

// Universal cover --------------------------------------------------------------

/// (k, a) in Z x M.
struct CoverElement {
  std::int64_t winding = 0;
  CircleElement base;

  friend bool operator==(const CoverElement&, const CoverElement&) = default;
};

CoverElement cover_unit();  // u = (1, 0)
CoverElement cover_add(const CyclicSpec& spec, const CoverElement& x, const CoverElement& y);
CoverElement cover_neg(const CyclicSpec& spec, const CoverElement& x);
/// Lexicographic in (winding, ≺).
int cover_cmp(const CyclicSpec& spec, const CoverElement& x, const CoverElement& y);

CircleElement project(const CoverElement& x);
/// Unique preimage in [0, u).
CoverElement lift(const CircleElement& a);

/// Isomorphism onto cover_group(): (k, a) -> k + frac(a*alpha), resp. k + a.
GroupElement cover_to_group(const CyclicSpec& spec, const CoverElement& x);
CoverElement group_to_cover(const CyclicSpec& spec, const GroupElement& g);

std::string format_cover(const CyclicSpec& spec, const CoverElement& x);

// Local group (-u, u) ------------------------------------------------------------

/// An element of M^>= (negative == false) or M^- (negative == true, magnitude != 0).
struct LocalElement {
  bool negative = false;
  CircleElement magnitude;

  friend bool operator==(const LocalElement&, const LocalElement&) = default;
};

LocalElement local_nonneg(const CircleElement& a);
/// Throws std::invalid_argument for a = 0.
LocalElement local_neg(const CircleElement& a);
LocalElement local_minus(const LocalElement& x);

/// The partial sum; std::nullopt when the sum leaves (-u, u).
std::optional<LocalElement> local_add(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y);
/// The order on M^- ∪ M^>=.
int local_cmp(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y);

CoverElement iota(const CyclicSpec& spec, const LocalElement& x);
/// Inverse of iota on (-u, u); std::nullopt outside.
std::optional<LocalElement> iota_inverse(const CyclicSpec& spec, const CoverElement& x);

std::string format_local(const CyclicSpec& spec, const LocalElement& x);
/// `a` or `-a` with a a circle element.
LocalElement parse_local(const CyclicSpec& spec, std::string_view text);

/// iota(x) - iota(y) in nH, computed in the cover.
bool equiv_mod_n_direct(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y, std::int64_t n);
/// The same relation decided inside (I, +_u, <): only local_add, local_cmp and
/// quantifiers over the finite witness domain below are used.
bool equiv_mod_n_definable(const CyclicSpec& spec, const LocalElement& x, const LocalElement& y, std::int64_t n);

/// A finite subset of I that contains every witness needed by the definable
/// procedure for the given arguments: all local elements whose magnitude has
/// integer size (ZWithSAlpha) or denominator (DyadicCircle) bounded by the inputs.
std::vector<LocalElement> witness_domain(const CyclicSpec& spec, const std::vector<LocalElement>& args, std::int64_t n);

/// n*y via repeated local_add; std::nullopt when a partial sum leaves I.
std::optional<LocalElement> local_multiple(const CyclicSpec& spec, const LocalElement& y, std::int64_t n);

/// |H / nH| and |M / nM| by enumerating coset representatives.
std::int64_t cover_index(const CyclicSpec& spec, std::int64_t n);
std::int64_t circle_index(const CyclicSpec& spec, std::int64_t n);

// Arc sets -----------------------------------------------------------------------

/// The arc from `from` to `to` in the positive direction. Endpoints are
/// excluded unless the matching flag is set; from == to gives the empty arc
/// (or the single point when a flag is set).
struct Arc {
  CircleElement from, to;
  bool closed_from = false;
  bool closed_to = false;
};

/// base + modulus * arc.
struct ArcPiece {
  CircleElement base;
  std::int64_t modulus = 1;
  Arc arc;
};

/// Canonical form: the preimage in [0, u) of the cover, as a canonical CncSet
/// over cover_group().
struct ArcSet {
  CyclicSpec spec;
  CncSet cover;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

ArcSet arc_empty(const CyclicSpec& spec);
ArcSet arc_whole(const CyclicSpec& spec);
ArcSet arc_set(const CyclicSpec& spec, const std::vector<ArcPiece>& pieces);
/// a + nM.
ArcSet arc_coset(const CyclicSpec& spec, std::int64_t n, const CircleElement& a);
ArcSet arc_boolean(BoolOp op, const ArcSet& a, const ArcSet& b);
bool arc_member(const CircleElement& x, const ArcSet& a);
/// Pointwise definition of membership, independent of the cover.
bool arc_piece_member_pointwise(const CyclicSpec& spec, const CircleElement& x, const ArcPiece& p);

/// One canonical component: the arc (or the whole circle) intersected with
/// base + modulus*M. Canonical sets are unions of such components.
struct ArcComponent {
  CircleElement base;
  std::int64_t modulus = 1;
  Arc arc;
  bool whole = false;
};
std::vector<ArcComponent> arc_components(const ArcSet& a);

std::string format_arc_set(const ArcSet& a);

}  // namespace cnckit
