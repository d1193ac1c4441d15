#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnckit/cut.hpp"
#include "cnckit/group.hpp"

namespace cnckit {

/// convex ∩ (residue + modulus·M).
struct CncPiece {
  ConvexSet convex;
  GroupElement residue;
  std::int64_t modulus = 1;
};

/// Canonical finite union of cnc pieces.
///
/// All pieces share `modulus`, which is the least modulus admitting such a
/// presentation. `classes` lists, for every residue that meets the set, the
/// sorted maximal convex components of the set inside that coset. Each convex
/// set is "tight": its lower cut is the largest and its upper cut the smallest
/// cut cutting the same elements out of the coset. Hence two canonical sets
/// are equal as sets iff they are structurally equal.
struct CncSet {
  GroupSpec spec;
  std::int64_t modulus = 1;
  std::vector<std::pair<GroupElement, std::vector<ConvexSet>>> classes;

  bool empty() const { return classes.empty(); }
  friend bool operator==(const CncSet&, const CncSet&) = default;
};

CncSet empty_set(const GroupSpec& spec);
CncSet whole_set(const GroupSpec& spec);
CncSet coset_set(const GroupSpec& spec, std::int64_t n, const GroupElement& a);
CncSet convex_cnc(const GroupSpec& spec, const ConvexSet& c);

/// Smallest representative of `c` with the same intersection with r + nM;
/// std::nullopt when that intersection is empty.
std::optional<ConvexSet> tighten(const GroupSpec& spec, const ConvexSet& c, const GroupElement& r, std::int64_t n);

CncSet canonicalize(const GroupSpec& spec, const std::vector<CncPiece>& pieces);
/// Same set at modulus `n` (a multiple of A.modulus), otherwise in canonical shape.
CncSet refine(const CncSet& a, std::int64_t n);
std::vector<CncPiece> pieces_of(const CncSet& a);

enum class BoolOp { Union, Intersect, Complement, Difference };
CncSet cnc_union(const CncSet& a, const CncSet& b);
CncSet cnc_intersect(const CncSet& a, const CncSet& b);
CncSet cnc_complement(const CncSet& a);
CncSet cnc_difference(const CncSet& a, const CncSet& b);
/// `b` is ignored for Complement.
CncSet boolean(BoolOp op, const CncSet& a, const CncSet& b);

bool cnc_member(const GroupElement& x, const CncSet& a);
CncSet cnc_translate(const CncSet& a, const GroupElement& g);
/// { -x : x in A }.
CncSet cnc_negate(const CncSet& a);

struct Classification {
  enum class Kind { Empty, Finite, Infinite };
  Kind kind = Kind::Empty;
  std::vector<GroupElement> elements;  // sorted, only for Finite
};
Classification classify(const CncSet& a);

/// Checks that `a` is a subgroup and returns it at its minimal modulus.
/// Throws std::invalid_argument otherwise.
CncSet subgroup_reduce(const CncSet& a);

/// Discrete kinds only. A box is { x : x[0..j) = prefix, lo <= x_j <= hi }
/// with j = prefix.size(); unset bounds are infinite.
struct LexBox {
  std::vector<std::int64_t> prefix;
  std::optional<std::int64_t> lo, hi;
};
std::vector<LexBox> box_decompose(const GroupSpec& spec, const ConvexSet& c);
ConvexSet box_to_convex(const GroupSpec& spec, const LexBox& b);

std::string format_cnc(const CncSet& a);

}  // namespace cnckit
