#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnckit/quadirr.hpp"
#include "cnckit/rational.hpp"

namespace cnckit {

/// The concrete ordered abelian groups the engine knows about.
///
/// `Dyadic` (Z[1/2] with the order from R) is not a user-facing kind in its own
/// right; it is the universal cover of the dyadic circle and is kept here so
/// that arc sets on that circle reuse the ordered-group machinery.
enum class GroupKind { Int, Rat, LexInt, LexRat, ZPlusAlphaZ, Dyadic };

class GroupSpec {
 public:
  static GroupSpec integers() { return GroupSpec(GroupKind::Int, 1, {}); }
  static GroupSpec rationals() { return GroupSpec(GroupKind::Rat, 1, {}); }
  static GroupSpec lex_int(int k);
  static GroupSpec lex_rat(int k);
  static GroupSpec z_plus_alpha_z(const QuadIrr& alpha);
  static GroupSpec dyadic() { return GroupSpec(GroupKind::Dyadic, 1, {}); }

  GroupKind kind() const { return kind_; }
  /// Number of stored coordinates (2 for Z + alpha Z, which stores (p, q)).
  int arity() const { return arity_; }
  const QuadIrr& alpha() const { return alpha_; }

  bool discrete() const { return kind_ == GroupKind::Int || kind_ == GroupKind::LexInt; }
  bool divisible() const { return kind_ == GroupKind::Rat || kind_ == GroupKind::LexRat; }
  /// Ordered lexicographically on coordinates (all kinds except Z + alpha Z).
  bool lex_ordered() const { return kind_ != GroupKind::ZPlusAlphaZ; }
  /// Has no non-trivial convex subgroup.
  bool archimedean() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  std::string to_string() const;
  /// `int`, `rat`, `lexint:K`, `lexrat:K`, `z+alpha:(a+b*sqrt(d))/c`, `dyadic`.
  static GroupSpec parse(std::string_view text);

 private:
  GroupSpec(GroupKind kind, int arity, QuadIrr alpha) : kind_(kind), arity_(arity), alpha_(alpha) {}
  GroupKind kind_ = GroupKind::Int;
  int arity_ = 1;
  QuadIrr alpha_;
};

/// An element of a concrete group. Coordinates are integers for Int/LexInt,
/// rationals for Rat/LexRat/Dyadic, and the pair (p, q) meaning p + q*alpha
/// for Z + alpha Z.
struct GroupElement {
  GroupKind kind = GroupKind::Int;
  std::vector<Rational> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

enum class Ordering { lt, eq, gt };
Ordering to_ordering(int c);
int to_int(Ordering o);

// Construction and validation ------------------------------------------------

GroupElement make_element(const GroupSpec& spec, std::vector<Rational> coords);
GroupElement zero(const GroupSpec& spec);
/// Throws std::invalid_argument when `x` does not belong to `spec`.
void check_element(const GroupSpec& spec, const GroupElement& x);

// Group operations -----------------------------------------------------------

GroupElement add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupSpec& spec, const GroupElement& x);
GroupElement sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement scale(const GroupSpec& spec, const GroupElement& x, std::int64_t k);

/// Exact total order, translation invariant.
Ordering compare(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
int cmp(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);

/// Real value of an element of an archimedean kind (Int, Rat, Dyadic, Z + alpha Z).
QuadIrr real_value(const GroupSpec& spec, const GroupElement& x);

/// x in nM, i.e. x = n*y for some y in the group.
bool in_nM(const GroupSpec& spec, const GroupElement& x, std::int64_t n);

/// Minimal positive element for discrete kinds.
std::optional<GroupElement> unit_element(const GroupSpec& spec);

/// Effective modulus: divisible groups have nM = M, so every modulus collapses to 1.
std::int64_t effective_modulus(const GroupSpec& spec, std::int64_t n);

/// Canonical representative of x + nM.
GroupElement residue(const GroupSpec& spec, const GroupElement& x, std::int64_t n);

/// All canonical coset representatives of M/nM, sorted.
std::vector<GroupElement> residues(const GroupSpec& spec, std::int64_t n);

/// Lexicographic order on canonical residues (used only for stable output).
bool residue_less(const GroupElement& a, const GroupElement& b);

// Text encoding --------------------------------------------------------------

std::string format_element(const GroupSpec& spec, const GroupElement& x);
/// Integers `5`, rationals `p/q`, tuples `(a,b,...)`, and `p+q*alpha`.
GroupElement parse_element(const GroupSpec& spec, std::string_view text);

/// A convex subgroup. `level` counts leading coordinates forced to zero for
/// lexicographic kinds (0 = whole group, arity = {0}); archimedean kinds only
/// have level 0 (whole) and level 1 ({0}).
struct ConvexSubgroup {
  GroupSpec spec;
  int level = 0;

  bool is_zero() const;
  bool is_whole() const { return level == 0; }
  bool contains(const GroupElement& x) const;
  friend bool operator==(const ConvexSubgroup&, const ConvexSubgroup&) = default;
  std::string to_string() const;
};

}  // namespace cnckit
