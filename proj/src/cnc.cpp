#include "cnckit/cnc.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

namespace cnckit {

namespace {

using Kind = Cut::Kind;
using Key = std::vector<Rational>;
using Item = std::pair<GroupElement, ConvexSet>;

constexpr std::int64_t kEnumerationCap = 1 << 20;

// Smallest cut containing u ∩ (r + nM); discrete kinds.
Cut discrete_floor(const Cut& u, const GroupElement& r, std::int64_t n) {
  if (u.kind != Kind::Closed) return u;
  std::vector<Rational> p = u.prefix;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t t = p[i].num();
    std::int64_t d = mod_floor(t - r.coords[i].num(), n);
    if (d != 0) {
      p[i] = Rational(t - d);
      p.resize(i + 1);
      return Cut{Kind::Closed, std::move(p), {}};
    }
  }
  return u;
}

bool is_point_cell(const GroupSpec& spec, const ConvexSet& c) {
  return c.lower.kind == Kind::Open && c.upper.kind == Kind::Closed && full_prefix(spec, c.lower) &&
         c.lower.prefix == c.upper.prefix;
}

std::int64_t working_modulus(const GroupSpec& spec, const std::vector<CncPiece>& pieces) {
  std::int64_t l = 1;
  for (const auto& p : pieces) l = lcm64(l, effective_modulus(spec, p.modulus));
  return effective_modulus(spec, l);
}

std::vector<Item> expand(const GroupSpec& spec, const std::vector<CncPiece>& pieces, std::int64_t l) {
  std::vector<Item> items;
  if (spec.kind() == GroupKind::Dyadic) {
    auto all = residues(spec, l);
    for (const auto& p : pieces) {
      std::int64_t n = effective_modulus(spec, p.modulus);
      GroupElement base = residue(spec, p.residue, n);
      for (const auto& r : all)
        if (residue(spec, r, n) == base) items.emplace_back(r, p.convex);
    }
    return items;
  }
  // Coordinatewise residues: the lifts of base mod n are base + n*t, 0 <= t_i < l/n.
  const std::size_t dims = static_cast<std::size_t>(spec.arity());
  for (const auto& p : pieces) {
    std::int64_t n = effective_modulus(spec, p.modulus);
    GroupElement base = residue(spec, p.residue, n);
    std::int64_t k = l / n;
    if (l == 1) {
      items.emplace_back(base, p.convex);
      continue;
    }
    std::vector<std::int64_t> t(dims, 0);
    while (true) {
      GroupElement r = base;
      for (std::size_t i = 0; i < dims; ++i) r.coords[i] = Rational(base.coords[i].num() + n * t[i]);
      items.emplace_back(std::move(r), p.convex);
      std::size_t i = dims;
      while (i > 0 && ++t[i - 1] == k) t[--i] = 0;
      if (i == 0) break;
    }
  }
  return items;
}

// Tightens, sorts and merges per residue at modulus l.
CncSet build_at(const GroupSpec& spec, std::int64_t l, const std::vector<Item>& items) {
  std::map<Key, std::vector<ConvexSet>> by_residue;
  for (const auto& [r, c] : items)
    if (auto t = tighten(spec, c, r, l)) by_residue[r.coords].push_back(*t);
  CncSet out{spec, l, {}};
  for (auto& [key, list] : by_residue) {
    GroupElement r{spec.kind(), key};
    std::sort(list.begin(), list.end(),
              [&](const ConvexSet& a, const ConvexSet& b) { return cut_cmp(spec, a.lower, b.lower) < 0; });
    std::vector<ConvexSet> merged;
    for (const auto& c : list) {
      if (!merged.empty() && !tighten(spec, ConvexSet{merged.back().upper, c.lower}, r, l)) {
        merged.back().upper = cut_max(spec, merged.back().upper, c.upper);
      } else {
        merged.push_back(c);
      }
    }
    out.classes.emplace_back(std::move(r), std::move(merged));
  }
  return out;
}

const std::vector<ConvexSet>* find_class(const CncSet& a, const GroupElement& r) {
  auto it = std::lower_bound(a.classes.begin(), a.classes.end(), r,
                             [](const auto& cls, const GroupElement& key) { return residue_less(cls.first, key); });
  if (it == a.classes.end() || it->first != r) return nullptr;
  return &it->second;
}

bool covered_by(const GroupSpec& spec, const ConvexSet& cell, const std::vector<ConvexSet>* pieces) {
  if (!pieces) return false;
  for (const auto& p : *pieces)
    if (cut_cmp(spec, p.lower, cell.lower) <= 0 && cut_cmp(spec, cell.upper, p.upper) <= 0) return true;
  return false;
}

bool structural_less(const Cut& a, const Cut& b) {
  auto key = [](const Cut& c) { return std::make_tuple(c.kind, c.gap.a(), c.gap.b(), c.gap.c(), c.gap.d()); };
  if (key(a) != key(b)) return key(a) < key(b);
  return a.prefix < b.prefix;
}

struct Sub {
  GroupElement r;
  bool in;
};

// Emits pieces of (rho + mM) ∩ X inside one box, or returns false when X is
// not a union of (rho + mM)-pieces there.
bool handle_box(const GroupSpec& spec, const LexBox& box, const std::vector<Sub>& subs, const GroupElement& rho,
                std::int64_t m, std::int64_t l, std::vector<Item>& items) {
  const std::size_t j = box.prefix.size();
  const std::size_t k = static_cast<std::size_t>(spec.arity());
  int ins = 0, outs = 0;
  for (const auto& s : subs) {
    bool meets = true;
    for (std::size_t i = 0; i < j && meets; ++i) meets = mod_floor(box.prefix[i] - s.r.coords[i].num(), l) == 0;
    if (meets && box.lo && box.hi && *box.hi - *box.lo + 1 < l) {
      std::int64_t first = *box.lo + mod_floor(s.r.coords[j].num() - *box.lo, l);
      meets = first <= *box.hi;
    }
    if (meets) (s.in ? ins : outs)++;
  }
  if (ins == 0) return true;
  if (outs == 0) {
    items.emplace_back(rho, box_to_convex(spec, box));
    return true;
  }
  if (!box.lo || !box.hi) return false;
  if (*box.hi - *box.lo > kEnumerationCap) return false;
  auto status = [&](const GroupElement& x) {
    GroupElement r = residue(spec, x, l);
    for (const auto& s : subs)
      if (s.r == r) return s.in;
    return false;
  };
  if (j + 1 < k) {
    for (std::int64_t v = *box.lo; v <= *box.hi; ++v) {
      LexBox slab{box.prefix, std::nullopt, std::nullopt};
      slab.prefix.push_back(v);
      std::vector<Sub> narrowed;
      for (const auto& s : subs)
        if (mod_floor(v - s.r.coords[j].num(), l) == 0) narrowed.push_back(s);
      if (!handle_box(spec, slab, narrowed, rho, m, l, items)) return false;
    }
    return true;
  }
  std::vector<Rational> coords(box.prefix.begin(), box.prefix.end());
  coords.push_back(Rational(0));
  std::optional<std::int64_t> run_lo, run_hi;
  auto flush = [&] {
    if (run_lo) items.emplace_back(rho, box_to_convex(spec, LexBox{box.prefix, run_lo, run_hi}));
    run_lo.reset();
  };
  for (std::int64_t v = *box.lo + mod_floor(rho.coords[j].num() - *box.lo, m); v <= *box.hi; v += m) {
    coords.back() = Rational(v);
    if (status(GroupElement{spec.kind(), coords})) {
      if (!run_lo) run_lo = v;
      run_hi = v;
    } else {
      flush();
    }
  }
  flush();
  return true;
}

// Re-expresses a canonical set at modulus l as pieces modulo m | l, if possible.
std::optional<CncSet> try_modulus(const CncSet& x, std::int64_t m,
                                  const std::map<Key, std::vector<GroupElement>>& lifts) {
  const GroupSpec& spec = x.spec;
  const std::int64_t l = x.modulus;
  std::vector<Item> items;
  for (const auto& [rho_key, subclasses] : lifts) {
    GroupElement rho{spec.kind(), rho_key};
    std::vector<const std::vector<ConvexSet>*> lists;
    std::vector<Cut> cuts{Cut::neg_inf(), Cut::pos_inf()};
    bool any = false;
    for (const auto& r : subclasses) {
      const auto* list = find_class(x, r);
      lists.push_back(list);
      if (!list) continue;
      any = true;
      for (const auto& c : *list) {
        cuts.push_back(c.lower);
        cuts.push_back(c.upper);
      }
    }
    if (!any) continue;
    // Normalized cuts are equal as sets iff structurally equal: dedupe cheaply first.
    std::sort(cuts.begin(), cuts.end(), structural_less);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::sort(cuts.begin(), cuts.end(), [&](const Cut& a, const Cut& b) { return cut_cmp(spec, a, b) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [&](const Cut& a, const Cut& b) { return cut_cmp(spec, a, b) == 0; }),
               cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      ConvexSet cell{cuts[i], cuts[i + 1]};
      std::vector<Sub> subs;
      for (std::size_t s = 0; s < subclasses.size(); ++s) subs.push_back({subclasses[s], covered_by(spec, cell, lists[s])});
      if (spec.discrete()) {
        for (const auto& box : box_decompose(spec, cell))
          if (!handle_box(spec, box, subs, rho, m, l, items)) return std::nullopt;
        continue;
      }
      if (is_point_cell(spec, cell)) {
        GroupElement r = residue(spec, prefix_element(spec, cell.upper), l);
        for (const auto& s : subs)
          if (s.r == r && s.in) items.emplace_back(rho, cell);
        continue;
      }
      bool all_in = std::all_of(subs.begin(), subs.end(), [](const Sub& s) { return s.in; });
      bool all_out = std::none_of(subs.begin(), subs.end(), [](const Sub& s) { return s.in; });
      if (!all_in && !all_out) return std::nullopt;
      if (all_in) items.emplace_back(rho, cell);
    }
  }
  CncSet cand = build_at(spec, m, items);
  if (refine(cand, l) != x) return std::nullopt;
  return cand;
}

// Assumes the moduli admitting a presentation are closed under gcd, so the
// first divisor that works is the least one.
CncSet reduce_modulus(const CncSet& x) {
  const GroupSpec& spec = x.spec;
  const std::int64_t l = x.modulus;
  if (l == 1) return x;
  auto all = residues(spec, l);
  for (std::int64_t m = 1; m < l; ++m) {
    if (l % m != 0) continue;
    std::map<Key, std::vector<GroupElement>> lifts;
    for (const auto& r : all) lifts[residue(spec, r, m).coords].push_back(r);
    if (auto c = try_modulus(x, m, lifts)) return *c;
  }
  return x;
}

void boxes_rec(std::vector<std::int64_t> t, std::optional<std::vector<std::int64_t>> a,
               std::optional<std::vector<std::int64_t>> b, std::vector<LexBox>& out) {
  if (!a && !b) {
    out.push_back(LexBox{std::move(t), std::nullopt, std::nullopt});
    return;
  }
  auto tail = [](const std::vector<std::int64_t>& v) { return std::vector<std::int64_t>(v.begin() + 1, v.end()); };
  auto with = [&](std::int64_t v) {
    auto u = t;
    u.push_back(v);
    return u;
  };
  bool lower_partial = a && a->size() > 1;
  bool upper_partial = b && b->size() > 1;
  if (lower_partial && upper_partial && (*a)[0] == (*b)[0]) {
    boxes_rec(with((*a)[0]), tail(*a), tail(*b), out);
    return;
  }
  std::optional<std::int64_t> lo, hi;
  if (a) lo = (*a)[0] + 1;
  if (b) hi = b->size() == 1 ? (*b)[0] : (*b)[0] - 1;
  if (lower_partial && (!b || (*a)[0] < (*b)[0] || ((*a)[0] == (*b)[0] && b->size() == 1)))
    boxes_rec(with((*a)[0]), tail(*a), std::nullopt, out);
  if (!lo || !hi || *lo <= *hi) out.push_back(LexBox{t, lo, hi});
  if (upper_partial && (!a || (*b)[0] > (*a)[0])) boxes_rec(with((*b)[0]), std::nullopt, tail(*b), out);
}

std::vector<std::int64_t> int_prefix(const Cut& c) {
  std::vector<std::int64_t> v;
  for (const auto& r : c.prefix) v.push_back(r.num());
  return v;
}

bool box_meets(const LexBox& box, const GroupElement& r, std::int64_t n) {
  const std::size_t j = box.prefix.size();
  for (std::size_t i = 0; i < j; ++i)
    if (mod_floor(box.prefix[i] - r.coords[i].num(), n) != 0) return false;
  if (!box.lo || !box.hi) return true;
  return *box.lo + mod_floor(r.coords[j].num() - *box.lo, n) <= *box.hi;
}

}  // namespace

std::optional<ConvexSet> tighten(const GroupSpec& spec, const ConvexSet& c, const GroupElement& r, std::int64_t n) {
  n = effective_modulus(spec, n);
  ConvexSet t = c;
  if (n > 1) {
    if (spec.discrete()) {
      t.upper = discrete_floor(c.upper, r, n);
      t.lower = negate_cut(spec, discrete_floor(negate_cut(spec, c.lower), neg(spec, r), n));
    } else {
      auto fix = [&](Cut& k) {
        if (k.kind == Kind::Open && !in_nM(spec, sub(spec, prefix_element(spec, k), r), n)) k.kind = Kind::Closed;
      };
      fix(t.lower);
      fix(t.upper);
    }
  }
  if (convex_empty(spec, t)) return std::nullopt;
  return t;
}

std::vector<LexBox> box_decompose(const GroupSpec& spec, const ConvexSet& c) {
  if (!spec.discrete()) throw std::invalid_argument("box decomposition needs a discrete group");
  std::vector<LexBox> out;
  if (convex_empty(spec, c)) return out;
  std::optional<std::vector<std::int64_t>> a, b;
  if (c.lower.kind == Kind::Closed) a = int_prefix(c.lower);
  if (c.upper.kind == Kind::Closed) b = int_prefix(c.upper);
  boxes_rec({}, a, b, out);
  return out;
}

ConvexSet box_to_convex(const GroupSpec& spec, const LexBox& box) {
  std::vector<Rational> t(box.prefix.begin(), box.prefix.end());
  auto extended = [&](std::int64_t v) {
    auto u = t;
    u.push_back(Rational(v));
    return u;
  };
  ConvexSet c;
  if (box.lo) c.lower = open_prefix(spec, extended(*box.lo));
  else if (!t.empty()) c.lower = open_prefix(spec, t);
  if (box.hi) c.upper = closed_prefix(spec, extended(*box.hi));
  else if (!t.empty()) c.upper = closed_prefix(spec, t);
  return c;
}

CncSet empty_set(const GroupSpec& spec) { return CncSet{spec, 1, {}}; }

CncSet whole_set(const GroupSpec& spec) { return CncSet{spec, 1, {{zero(spec), {whole_line()}}}}; }

CncSet coset_set(const GroupSpec& spec, std::int64_t n, const GroupElement& a) {
  return canonicalize(spec, {CncPiece{whole_line(), a, n}});
}

CncSet convex_cnc(const GroupSpec& spec, const ConvexSet& c) {
  return canonicalize(spec, {CncPiece{c, zero(spec), 1}});
}

CncSet canonicalize(const GroupSpec& spec, const std::vector<CncPiece>& pieces) {
  std::vector<CncPiece> checked;
  for (const auto& p : pieces) {
    if (p.modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    check_element(spec, p.residue);
    checked.push_back(CncPiece{ConvexSet{normalize_cut(spec, p.convex.lower), normalize_cut(spec, p.convex.upper)},
                               p.residue, p.modulus});
  }
  std::int64_t l = working_modulus(spec, checked);
  return reduce_modulus(build_at(spec, l, expand(spec, checked, l)));
}

CncSet refine(const CncSet& a, std::int64_t n) {
  n = effective_modulus(a.spec, n);
  if (n % a.modulus != 0) throw std::invalid_argument("refinement modulus must be a multiple of the set's modulus");
  if (n == a.modulus) return a;
  return build_at(a.spec, n, expand(a.spec, pieces_of(a), n));
}

std::vector<CncPiece> pieces_of(const CncSet& a) {
  std::vector<CncPiece> out;
  for (const auto& [r, list] : a.classes)
    for (const auto& c : list) out.push_back(CncPiece{c, r, a.modulus});
  return out;
}

static void require_same_spec(const CncSet& a, const CncSet& b) {
  if (!(a.spec == b.spec))
    throw std::invalid_argument("group mismatch: " + a.spec.to_string() + " vs " + b.spec.to_string());
}

CncSet cnc_union(const CncSet& a, const CncSet& b) {
  require_same_spec(a, b);
  auto pieces = pieces_of(a);
  auto more = pieces_of(b);
  pieces.insert(pieces.end(), more.begin(), more.end());
  return canonicalize(a.spec, pieces);
}

CncSet cnc_intersect(const CncSet& a, const CncSet& b) {
  require_same_spec(a, b);
  const GroupSpec& spec = a.spec;
  std::int64_t l = effective_modulus(spec, lcm64(a.modulus, b.modulus));
  CncSet ra = refine(a, l), rb = refine(b, l);
  std::vector<Item> items;
  for (const auto& [r, list] : ra.classes) {
    const auto* other = find_class(rb, r);
    if (!other) continue;
    for (const auto& c1 : list)
      for (const auto& c2 : *other) items.emplace_back(r, convex_intersect(spec, c1, c2));
  }
  return reduce_modulus(build_at(spec, l, items));
}

CncSet cnc_complement(const CncSet& a) {
  const GroupSpec& spec = a.spec;
  std::vector<Item> items;
  for (const auto& r : residues(spec, a.modulus)) {
    Cut prev = Cut::neg_inf();
    if (const auto* list = find_class(a, r)) {
      for (const auto& c : *list) {
        items.emplace_back(r, ConvexSet{prev, c.lower});
        prev = c.upper;
      }
    }
    items.emplace_back(r, ConvexSet{prev, Cut::pos_inf()});
  }
  return reduce_modulus(build_at(spec, a.modulus, items));
}

CncSet cnc_difference(const CncSet& a, const CncSet& b) { return cnc_intersect(a, cnc_complement(b)); }

CncSet boolean(BoolOp op, const CncSet& a, const CncSet& b) {
  switch (op) {
    case BoolOp::Union: return cnc_union(a, b);
    case BoolOp::Intersect: return cnc_intersect(a, b);
    case BoolOp::Complement: return cnc_complement(a);
    case BoolOp::Difference: return cnc_difference(a, b);
  }
  throw std::invalid_argument("unknown boolean operation");
}

bool cnc_member(const GroupElement& x, const CncSet& a) {
  check_element(a.spec, x);
  const auto* list = find_class(a, residue(a.spec, x, a.modulus));
  if (!list) return false;
  for (const auto& c : *list)
    if (convex_member(a.spec, x, c)) return true;
  return false;
}

CncSet cnc_translate(const CncSet& a, const GroupElement& g) {
  std::vector<CncPiece> pieces;
  for (const auto& p : pieces_of(a))
    pieces.push_back(CncPiece{convex_translate(a.spec, p.convex, g), add(a.spec, p.residue, g), p.modulus});
  return canonicalize(a.spec, pieces);
}

CncSet cnc_negate(const CncSet& a) {
  std::vector<CncPiece> pieces;
  for (const auto& p : pieces_of(a))
    pieces.push_back(CncPiece{convex_negate(a.spec, p.convex), neg(a.spec, p.residue), p.modulus});
  return canonicalize(a.spec, pieces);
}

Classification classify(const CncSet& a) {
  const GroupSpec& spec = a.spec;
  Classification out;
  if (a.empty()) return out;
  out.kind = Classification::Kind::Finite;
  const std::size_t k = static_cast<std::size_t>(spec.arity());
  for (const auto& [r, list] : a.classes) {
    for (const auto& c : list) {
      if (!spec.discrete()) {
        if (!is_point_cell(spec, c)) {
          out.kind = Classification::Kind::Infinite;
          out.elements.clear();
          return out;
        }
        out.elements.push_back(prefix_element(spec, c.upper));
        continue;
      }
      for (const auto& box : box_decompose(spec, c)) {
        if (!box_meets(box, r, a.modulus)) continue;
        if (box.prefix.size() + 1 < k || !box.lo || !box.hi) {
          out.kind = Classification::Kind::Infinite;
          out.elements.clear();
          return out;
        }
        std::vector<Rational> coords(box.prefix.begin(), box.prefix.end());
        coords.push_back(Rational(0));
        std::int64_t n = a.modulus;
        for (std::int64_t v = *box.lo + mod_floor(r.coords.back().num() - *box.lo, n); v <= *box.hi; v += n) {
          coords.back() = Rational(v);
          out.elements.push_back(GroupElement{spec.kind(), coords});
        }
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const GroupElement& x, const GroupElement& y) { return cmp(spec, x, y) < 0; });
  return out;
}

CncSet subgroup_reduce(const CncSet& a) {
  const GroupSpec& spec = a.spec;
  if (!cnc_member(zero(spec), a)) throw std::invalid_argument("not a subgroup: 0 is not a member");
  std::vector<GroupElement> reps;
  for (const auto& [r, list] : a.classes) {
    if (list.size() != 1 || !(list.front() == whole_line()))
      throw std::invalid_argument("not a subgroup: not a union of cosets of nM");
    reps.push_back(r);
  }
  for (const auto& x : reps)
    for (const auto& y : reps)
      if (!find_class(a, residue(spec, sub(spec, x, y), a.modulus)))
        throw std::invalid_argument("not a subgroup: not closed under subtraction");
  return a;
}

std::string format_cnc(const CncSet& a) {
  std::string s = "group " + a.spec.to_string() + ", modulus " + std::to_string(a.modulus);
  if (a.empty()) return s + ": empty";
  for (const auto& [r, list] : a.classes) {
    s += "\n  " + format_element(a.spec, r) + " + " + std::to_string(a.modulus) + "M:";
    for (std::size_t i = 0; i < list.size(); ++i) s += (i ? " u " : " ") + format_convex(a.spec, list[i]);
  }
  return s;
}

}  // namespace cnckit
