#include "cnckit/equiv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cnckit {

namespace {

using Kind = Cut::Kind;

EquivContext build(const CncSet& x, std::int64_t n) {
  const GroupSpec& spec = x.spec;
  EquivContext ctx{x, n, n >= 2 ? regular_subgroup(spec, n) : ConvexSubgroup{spec, 0}, {}, nullptr};
  CncSet xn = refine(x, n);
  auto it = xn.classes.begin();
  for (const auto& r : residues(spec, n)) {
    CosetParts cp{r, {}, {}};
    Cut prev = Cut::neg_inf();
    auto push = [&](ConvexSet c, bool in) {
      cp.parts.push_back(std::move(c));
      cp.in_x.push_back(in);
    };
    if (it != xn.classes.end() && it->first == r) {
      for (const auto& d : it->second) {
        if (cut_cmp(spec, prev, d.lower) < 0) push(ConvexSet{prev, d.lower}, false);
        push(d, true);
        prev = d.upper;
      }
      ++it;
    }
    if (!(prev == Cut::pos_inf())) push(ConvexSet{prev, Cut::pos_inf()}, false);
    ctx.cosets.push_back(std::move(cp));
  }
  return ctx;
}

bool contains_cell(const GroupSpec& spec, const ConvexSet& outer, const ConvexSet& inner) {
  return cut_cmp(spec, outer.lower, inner.lower) <= 0 && cut_cmp(spec, inner.upper, outer.upper) <= 0;
}

// Cut of the R_n coset of a from above.
Cut rn_coset_upper(const GroupElement& a, const EquivContext& ctx) {
  const int j = ctx.rn.level;
  if (j == 0) return Cut::pos_inf();
  return closed_prefix(ctx.x.spec, std::vector<Rational>(a.coords.begin(), a.coords.begin() + j));
}

// Upper cut of the E-class of a, discrete kinds.
Cut class_upper(const GroupElement& a, const EquivContext& ctx) {
  const GroupSpec& spec = ctx.x.spec;
  const std::int64_t n = ctx.n;
  const std::size_t k = static_cast<std::size_t>(spec.arity());
  const GroupElement u = *unit_element(spec);
  GroupElement ap = sub(spec, a, scale(spec, u, n + 1));
  Cut best = rn_coset_upper(a, ctx);
  for (const auto& cp : ctx.cosets) {
    bool meets = true;
    for (std::size_t i = 0; i + 1 < k && meets; ++i)
      meets = mod_floor(ap.coords[i].num() - cp.residue.coords[i].num(), n) == 0;
    if (!meets) continue;
    GroupElement p = ap;
    std::int64_t last = ap.coords.back().num();
    p.coords.back() = Rational(last + 1 + mod_floor(cp.residue.coords.back().num() - last - 1, n));
    for (const auto& part : cp.parts) {
      if (!convex_member(spec, p, part)) continue;
      Cut up = tighten(spec, part, cp.residue, n)->upper;
      if (full_prefix(spec, up)) up = closed_at(spec, sub(spec, prefix_element(spec, up), u));
      best = cut_min(spec, best, up);
      break;
    }
  }
  return cut_max(spec, closed_at(spec, a), best);
}

ConvexSet dense_class(const GroupElement& a, const EquivContext& ctx) {
  const GroupSpec& spec = ctx.x.spec;
  Cut below = open_at(spec, a), at = closed_at(spec, a);
  ConvexSet cls = whole_line();
  for (const auto& cp : ctx.cosets) {
    const ConvexSet* found = nullptr;
    for (const auto& part : cp.parts) {
      if (cut_cmp(spec, part.lower, below) < 0 && cut_cmp(spec, part.upper, at) > 0) {
        found = &part;
        break;
      }
    }
    if (!found) return point_set(spec, a);
    ConvexSet inner = *found;
    if (inner.lower.kind == Kind::Open && full_prefix(spec, inner.lower)) inner.lower.kind = Kind::Closed;
    if (inner.upper.kind == Kind::Closed && full_prefix(spec, inner.upper)) inner.upper.kind = Kind::Open;
    cls = convex_intersect(spec, cls, inner);
  }
  return cls;
}

std::vector<Rational> slab_key(const GroupElement& e) {
  return std::vector<Rational>(e.coords.begin(), e.coords.end() - 1);
}

}  // namespace

EquivContext make_context(const CncSet& x, std::optional<std::int64_t> n) {
  std::int64_t m = effective_modulus(x.spec, n.value_or(x.modulus));
  if (m % x.modulus != 0)
    throw std::invalid_argument("n must be a multiple of the set's modulus " + std::to_string(x.modulus));
  EquivContext ctx = build(x, m);
  ctx.reflected = std::make_shared<EquivContext>(build(cnc_negate(x), m));
  return ctx;
}

bool related(const GroupElement& a0, const GroupElement& b0, const EquivContext& ctx) {
  const GroupSpec& spec = ctx.x.spec;
  int c = cmp(spec, a0, b0);
  if (c == 0) return true;
  const GroupElement& a = c < 0 ? a0 : b0;
  const GroupElement& b = c < 0 ? b0 : a0;
  if (!ctx.rn.contains(sub(spec, b, a))) return false;
  if (spec.discrete()) {
    const GroupElement u = *unit_element(spec);
    ConvexSet window{closed_at(spec, sub(spec, a, scale(spec, u, ctx.n + 1))),
                     open_at(spec, add(spec, b, scale(spec, u, ctx.n + 1)))};
    for (const auto& cp : ctx.cosets) {
      int meets = 0;
      for (const auto& part : cp.parts)
        if (tighten(spec, convex_intersect(spec, window, part), cp.residue, ctx.n)) ++meets;
      if (meets > 1) return false;
    }
    return true;
  }
  Cut below = open_at(spec, a), at = closed_at(spec, b);
  for (const auto& cp : ctx.cosets) {
    bool ok = std::any_of(cp.parts.begin(), cp.parts.end(), [&](const ConvexSet& part) {
      return cut_cmp(spec, part.lower, below) < 0 && cut_cmp(spec, part.upper, at) > 0;
    });
    if (!ok) return false;
  }
  return true;
}

ConvexSet eclass(const GroupElement& a, const EquivContext& ctx) {
  const GroupSpec& spec = ctx.x.spec;
  check_element(spec, a);
  if (!spec.discrete()) return dense_class(a, ctx);
  Cut upper = class_upper(a, ctx);
  Cut lower = negate_cut(spec, class_upper(neg(spec, a), *ctx.reflected));
  return ConvexSet{lower, upper};
}

std::vector<ConvexSet> finite_classes(const EquivContext& ctx) {
  const GroupSpec& spec = ctx.x.spec;
  std::vector<ConvexSet> out;
  if (!spec.discrete()) {
    std::vector<GroupElement> cands;
    for (const auto& cp : ctx.cosets)
      for (const auto& part : cp.parts)
        for (const Cut* c : {&part.lower, &part.upper})
          if (full_prefix(spec, *c)) cands.push_back(prefix_element(spec, *c));
    for (const auto& e : cands) {
      ConvexSet p = point_set(spec, e);
      if (eclass(e, ctx) == p) out.push_back(p);
    }
  } else {
    const GroupElement u = *unit_element(spec);
    std::map<std::vector<Rational>, std::pair<GroupElement, GroupElement>> slabs;
    for (const auto& cp : ctx.cosets) {
      for (const auto& part : cp.parts) {
        for (const Cut* c : {&part.lower, &part.upper}) {
          if (!full_prefix(spec, *c)) continue;
          GroupElement e = prefix_element(spec, *c);
          auto [it, fresh] = slabs.try_emplace(slab_key(e), e, e);
          if (!fresh) {
            if (cmp(spec, e, it->second.first) < 0) it->second.first = e;
            if (cmp(spec, e, it->second.second) > 0) it->second.second = e;
          }
        }
      }
    }
    const std::int64_t w = 2 * (ctx.n + 1) + 2;
    for (const auto& [key, range] : slabs) {
      GroupElement x = sub(spec, range.first, scale(spec, u, w));
      GroupElement hi = add(spec, range.second, scale(spec, u, w));
      while (cmp(spec, x, hi) <= 0) {
        ConvexSet cls = eclass(x, ctx);
        if (!full_prefix(spec, cls.upper)) break;
        GroupElement top = prefix_element(spec, cls.upper);
        if (full_prefix(spec, cls.lower) && slab_key(prefix_element(spec, cls.lower)) == key && slab_key(top) == key)
          out.push_back(cls);
        x = add(spec, top, u);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const ConvexSet& a, const ConvexSet& b) { return cut_cmp(spec, a.lower, b.lower) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decomposition decompose(const CncSet& x, std::optional<std::int64_t> n) {
  const GroupSpec& spec = x.spec;
  EquivContext ctx = make_context(x, n);
  // Singleton classes go to the finite part; every other class is uniform
  // with respect to the cosets of nM and is reported through its residues.
  std::vector<ConvexSet> finite;
  for (const auto& f : finite_classes(ctx))
    if (full_prefix(spec, f.upper) && f == point_set(spec, prefix_element(spec, f.upper))) finite.push_back(f);
  std::vector<Cut> cuts{Cut::neg_inf(), Cut::pos_inf()};
  for (const auto& cp : ctx.cosets)
    for (const auto& part : cp.parts) {
      cuts.push_back(part.lower);
      cuts.push_back(part.upper);
    }
  for (const auto& f : finite) {
    cuts.push_back(f.lower);
    cuts.push_back(f.upper);
  }
  std::sort(cuts.begin(), cuts.end(), [&](const Cut& a, const Cut& b) { return cut_cmp(spec, a, b) < 0; });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Decomposition out{spec, ctx.n, {}, {}};
  std::vector<std::pair<ConvexSet, std::vector<bool>>> blocks;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    ConvexSet cell{cuts[i], cuts[i + 1]};
    bool in_finite = std::any_of(finite.begin(), finite.end(),
                                 [&](const ConvexSet& f) { return contains_cell(spec, f, cell); });
    if (in_finite) continue;
    std::vector<bool> active;
    for (const auto& cp : ctx.cosets) {
      bool on = true;
      if (tighten(spec, cell, cp.residue, ctx.n)) {
        for (std::size_t p = 0; p < cp.parts.size(); ++p)
          if (contains_cell(spec, cp.parts[p], cell)) on = cp.in_x[p];
      }
      active.push_back(on);
    }
    if (!blocks.empty() && blocks.back().first.upper == cell.lower && blocks.back().second == active) {
      blocks.back().first.upper = cell.upper;
    } else {
      blocks.emplace_back(cell, std::move(active));
    }
  }
  for (const auto& [block, active] : blocks) {
    DecompositionBlock b{block, {}};
    for (std::size_t t = 0; t < ctx.cosets.size(); ++t)
      if (active[t] && tighten(spec, block, ctx.cosets[t].residue, ctx.n)) b.residues.push_back(ctx.cosets[t].residue);
    if (!b.residues.empty()) out.classes.push_back(std::move(b));
  }
  for (const auto& f : finite) {
    auto part = classify(cnc_intersect(x, convex_cnc(spec, f)));
    out.finite_part.insert(out.finite_part.end(), part.elements.begin(), part.elements.end());
  }
  std::sort(out.finite_part.begin(), out.finite_part.end(),
            [&](const GroupElement& a, const GroupElement& b) { return cmp(spec, a, b) < 0; });
  return out;
}

CncSet reassemble(const Decomposition& d) {
  std::vector<CncPiece> pieces;
  for (const auto& b : d.classes)
    for (const auto& r : b.residues) pieces.push_back(CncPiece{b.block, r, d.n});
  for (const auto& e : d.finite_part) pieces.push_back(CncPiece{point_set(d.spec, e), zero(d.spec), 1});
  return canonicalize(d.spec, pieces);
}

}  // namespace cnckit
