#include "cnckit/subgroup.hpp"

#include <stdexcept>

namespace cnckit {

std::vector<ConvexSubgroup> convex_subgroups(const GroupSpec& spec) {
  std::vector<ConvexSubgroup> out;
  int top = spec.archimedean() ? 1 : spec.arity();
  for (int level = top; level >= 0; --level) out.push_back(ConvexSubgroup{spec, level});
  return out;
}

ConvexSubgroup regular_subgroup(const GroupSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  // Only LexInt has a discrete non-archimedean order: the last coordinate
  // line is the largest convex subgroup where nM has bounded gaps.
  if (spec.kind() == GroupKind::LexInt && n >= 2) return ConvexSubgroup{spec, spec.arity() - 1};
  return ConvexSubgroup{spec, 0};
}

QuotientMap quotient_map(const GroupSpec& spec, const ConvexSubgroup& h) {
  if (!(h.spec == spec)) throw std::invalid_argument("subgroup belongs to another group");
  if (h.is_whole()) throw std::invalid_argument("quotient by the whole group is trivial");
  if (h.is_zero()) return QuotientMap{spec, h, spec};
  int j = h.level;
  GroupSpec codomain = spec.kind() == GroupKind::LexInt ? GroupSpec::lex_int(j) : GroupSpec::lex_rat(j);
  return QuotientMap{spec, h, codomain};
}

GroupElement quotient(const QuotientMap& map, const GroupElement& x) {
  check_element(map.domain, x);
  if (map.kernel.is_zero()) return x;
  std::vector<Rational> head(x.coords.begin(), x.coords.begin() + map.codomain.arity());
  return make_element(map.codomain, std::move(head));
}

namespace {

Cut lift_cut(const QuotientMap& map, const Cut& c) {
  if (c.is_infinite()) return c;
  if (c.kind == Cut::Kind::Gap) throw std::invalid_argument("gap cuts cannot be pulled back to a lexicographic group");
  Cut r = c;
  return normalize_cut(map.domain, std::move(r));
}

}  // namespace

CncSet pullback(const QuotientMap& map, const CncSet& y) {
  if (!(y.spec == map.codomain)) throw std::invalid_argument("set does not live in the codomain");
  if (map.kernel.is_zero()) return y;
  const GroupSpec& m = map.domain;
  const std::size_t j = static_cast<std::size_t>(map.codomain.arity());
  std::vector<CncPiece> pieces;
  auto tails = residues(m, y.modulus);
  for (const auto& [rho, list] : y.classes) {
    for (const auto& c : list) {
      ConvexSet lifted{lift_cut(map, c.lower), lift_cut(map, c.upper)};
      for (const auto& tail : tails) {
        // Keep one representative per choice of the trailing coordinates.
        bool head_zero = true;
        for (std::size_t i = 0; i < j; ++i) head_zero = head_zero && tail.coords[i].num() == 0;
        if (!head_zero) continue;
        GroupElement r = tail;
        for (std::size_t i = 0; i < j; ++i) r.coords[i] = rho.coords[i];
        pieces.push_back(CncPiece{lifted, r, y.modulus});
      }
    }
  }
  return canonicalize(m, pieces);
}

}  // namespace cnckit
