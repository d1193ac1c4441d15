#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cnckit/cnc.hpp"
#include "cnckit/subgroup.hpp"

namespace cnckit {

/// One coset t + nM split into maximal convex parts on which membership in X is constant.
struct CosetParts {
  GroupElement residue;
  std::vector<ConvexSet> parts;  // sorted, cover the group exactly
  std::vector<bool> in_x;
};

/// X at modulus n together with R_n. n must be a multiple of X.modulus.
struct EquivContext {
  CncSet x;
  std::int64_t n = 1;
  ConvexSubgroup rn;
  std::vector<CosetParts> cosets;
  std::shared_ptr<const EquivContext> reflected;  // context of -X
};

EquivContext make_context(const CncSet& x, std::optional<std::int64_t> n = std::nullopt);

/// a E b: reflexive, and for a < b there are a' < a < b < b' with a', b' in
/// one coset of R_n, (a', a) and (b, b') holding at least n elements each, and
/// X agreeing with a union of cosets of nM on (a', b').
bool related(const GroupElement& a, const GroupElement& b, const EquivContext& ctx);
ConvexSet eclass(const GroupElement& a, const EquivContext& ctx);
/// Every finite E-class, sorted.
std::vector<ConvexSet> finite_classes(const EquivContext& ctx);

/// A union of adjacent E-classes, none of them a singleton, on which X is the
/// union of the listed cosets of nM.
struct DecompositionBlock {
  ConvexSet block;
  std::vector<GroupElement> residues;
};

/// `finite_part` lists the members of X whose E-class is a singleton.
struct Decomposition {
  GroupSpec spec;
  std::int64_t n = 1;
  std::vector<GroupElement> finite_part;
  std::vector<DecompositionBlock> classes;
};

Decomposition decompose(const CncSet& x, std::optional<std::int64_t> n = std::nullopt);
CncSet reassemble(const Decomposition& d);

}  // namespace cnckit
