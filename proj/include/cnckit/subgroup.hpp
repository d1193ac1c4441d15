#pragma once

#include <cstdint>
#include <vector>

#include "cnckit/cnc.hpp"
#include "cnckit/group.hpp"

namespace cnckit {

/// All convex subgroups, smallest ({0}) first, the whole group last.
std::vector<ConvexSubgroup> convex_subgroups(const GroupSpec& spec);

/// R_n: the largest convex subgroup in which every interval with at least n
/// elements meets nM. Closed form per kind; see rn_window_audit for the check
/// against the definition.
ConvexSubgroup regular_subgroup(const GroupSpec& spec, std::int64_t n);

/// The ordered quotient M -> M/H for a lexicographic group (or the identity
/// when H = {0}). H = M is rejected because the quotient is trivial.
struct QuotientMap {
  GroupSpec domain;
  ConvexSubgroup kernel;
  GroupSpec codomain;
};

QuotientMap quotient_map(const GroupSpec& spec, const ConvexSubgroup& h);
GroupElement quotient(const QuotientMap& map, const GroupElement& x);
/// π⁻¹(Y) in canonical form.
CncSet pullback(const QuotientMap& map, const CncSet& y);

}  // namespace cnckit
