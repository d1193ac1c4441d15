#pragma once

#include <vector>

#include "cnckit/expr.hpp"
#include "cnckit/oracle.hpp"

namespace cnckit::testing {

inline GroupWindow window(const GroupSpec& spec, std::int64_t lo, std::int64_t hi, std::int64_t den = 1) {
  return GroupWindow{spec, lo, hi, den, std::nullopt, std::nullopt, 1 << 20};
}

inline GroupElement el(const GroupSpec& spec, std::vector<Rational> coords) { return make_element(spec, std::move(coords)); }

inline QuadIrr phi() { return QuadIrr(1, 1, 2, 5); }

/// One spec per kind, the lexicographic ones at arity 2.
inline std::vector<GroupSpec> all_kinds() {
  return {GroupSpec::integers(), GroupSpec::rationals(), GroupSpec::lex_int(2), GroupSpec::lex_rat(2),
          GroupSpec::z_plus_alpha_z(phi()), GroupSpec::dyadic()};
}

inline std::int64_t den_for(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::Rat:
    case GroupKind::LexRat:
      return 6;
    case GroupKind::Dyadic:
      return 8;
    default:
      return 1;
  }
}

inline GroupElement sample(Rng& rng, const GroupSpec& spec, std::int64_t range = 20) {
  return random_element(rng, spec, range, den_for(spec));
}

inline CncSet random_set(Rng& rng, const GroupSpec& spec, RandomParams p = {}) {
  p.den = den_for(spec) > 1 ? 4 : 1;
  return eval_cnc(random_group_expr(rng, spec, p), spec);
}

}  // namespace cnckit::testing
