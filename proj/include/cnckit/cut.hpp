#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnckit/group.hpp"

namespace cnckit {

/// A downward closed subset of the group.
///
/// Closed/Open carry a coordinate prefix t of length j:
///   Closed(t) = { x : x[0..j) <= t },  Open(t) = { x : x[0..j) < t }
/// compared lexicographically. With j equal to the arity this is the
/// principal cut (-inf, t] resp. the cut (-inf, t). A shorter prefix only
/// occurs for lexicographic kinds and denotes the cut just above (Closed) or
/// just below (Open) the whole slab of elements starting with t.
///
/// Gap(r) = { x : x < r } for a real r outside the group (Rat, Z + alpha Z,
/// Dyadic). For Z + alpha Z, r is rational or uses the radicand of alpha.
///
/// Cuts built through the factories below are normalized: discrete kinds never
/// hold Open cuts, so structural equality is set equality.
struct Cut {
  enum class Kind { NegInf, Closed, Open, Gap, PosInf };
  Kind kind = Kind::NegInf;
  std::vector<Rational> prefix;
  QuadIrr gap;

  static Cut neg_inf() { return Cut{}; }
  static Cut pos_inf() { return Cut{Kind::PosInf, {}, {}}; }
  bool is_point() const { return kind == Kind::Closed || kind == Kind::Open; }
  bool is_infinite() const { return kind == Kind::NegInf || kind == Kind::PosInf; }

  friend bool operator==(const Cut&, const Cut&) = default;
};

Cut closed_at(const GroupSpec& spec, const GroupElement& e);
Cut open_at(const GroupSpec& spec, const GroupElement& e);
Cut closed_prefix(const GroupSpec& spec, std::vector<Rational> prefix);
Cut open_prefix(const GroupSpec& spec, std::vector<Rational> prefix);
/// Throws std::invalid_argument when r lies in the group or the kind has no real gaps.
Cut gap_at(const GroupSpec& spec, const QuadIrr& r);

/// The element with real value r, if r lies in the group (archimedean kinds).
std::optional<GroupElement> element_of_real(const GroupSpec& spec, const QuadIrr& r);
/// Cut just above (closed) or just below r; a gap cut when r is not in the group.
Cut real_cut(const GroupSpec& spec, const QuadIrr& r, bool closed);

/// Validates and normalizes an arbitrary cut value.
Cut normalize_cut(const GroupSpec& spec, Cut c);

/// True when the prefix covers every coordinate, i.e. the cut is (-inf, e] or (-inf, e).
bool full_prefix(const GroupSpec& spec, const Cut& c);
GroupElement prefix_element(const GroupSpec& spec, const Cut& c);  // requires full_prefix

/// Order by inclusion.
int cut_cmp(const GroupSpec& spec, const Cut& a, const Cut& b);
Ordering cut_compare(const GroupSpec& spec, const Cut& a, const Cut& b);
const Cut& cut_min(const GroupSpec& spec, const Cut& a, const Cut& b);
const Cut& cut_max(const GroupSpec& spec, const Cut& a, const Cut& b);

bool cut_contains(const GroupSpec& spec, const Cut& c, const GroupElement& x);

/// { y : -y not in c }, so that -(U \ L) = negate(L) \ negate(U).
Cut negate_cut(const GroupSpec& spec, const Cut& c);
/// c + g.
Cut translate_cut(const GroupSpec& spec, const Cut& c, const GroupElement& g);

/// C + a = C for some positive a. The infinite cuts are reported as
/// non-valuational by convention.
bool is_valuational(const GroupSpec& spec, const Cut& c);
/// { a : c + a = c }. The infinite cuts are fixed by the whole group.
ConvexSubgroup stabilizer(const GroupSpec& spec, const Cut& c);

/// upper \ lower.
struct ConvexSet {
  Cut lower;
  Cut upper = Cut::pos_inf();

  friend bool operator==(const ConvexSet&, const ConvexSet&) = default;
};

inline ConvexSet whole_line() { return ConvexSet{}; }
ConvexSet point_set(const GroupSpec& spec, const GroupElement& e);
bool convex_empty(const GroupSpec& spec, const ConvexSet& c);
bool convex_member(const GroupSpec& spec, const GroupElement& x, const ConvexSet& c);
ConvexSet convex_intersect(const GroupSpec& spec, const ConvexSet& a, const ConvexSet& b);
ConvexSet convex_negate(const GroupSpec& spec, const ConvexSet& c);
ConvexSet convex_translate(const GroupSpec& spec, const ConvexSet& c, const GroupElement& g);
/// Bounded below and above.
bool convex_bounded(const ConvexSet& c);

/// Interval notation: `[a, b)`, `(-inf, +inf)`, lower prefix endpoints as `[[1], ...`.
std::string format_cut_value(const GroupSpec& spec, const Cut& c);
std::string format_convex(const GroupSpec& spec, const ConvexSet& c);

}  // namespace cnckit
