#include <algorithm>
#include <atomic>
#include <numeric>

#include "cnckit/subgroup.hpp"
#include "cnckit/suites.hpp"

namespace cnckit {

namespace {

using Op = SetExpr::Op;

const QuadIrr kPhi(1, 1, 2, 5);

std::string op_name(BoolOp op) {
  switch (op) {
    case BoolOp::Union: return "union";
    case BoolOp::Intersect: return "intersect";
    case BoolOp::Complement: return "complement";
    case BoolOp::Difference: return "difference";
  }
  return "?";
}

bool apply_op(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::Union: return a || b;
    case BoolOp::Intersect: return a && b;
    case BoolOp::Complement: return !a;
    case BoolOp::Difference: return a && !b;
  }
  return false;
}

RandomParams params(int pieces, std::int64_t modulus, std::int64_t range, std::int64_t den, bool reals = true) {
  RandomParams p;
  p.max_pieces = pieces;
  p.max_modulus = modulus;
  p.range = range;
  p.den = den;
  p.allow_reals = reals;
  return p;
}

GroupWindow window(const GroupSpec& spec, std::int64_t lo, std::int64_t hi, std::int64_t den = 1) {
  return GroupWindow{spec, lo, hi, den, std::nullopt, std::nullopt, 1 << 20};
}

GroupElement element(const GroupSpec& spec, std::vector<Rational> coords) { return make_element(spec, std::move(coords)); }

// Divisibility by n read off the coordinates, without in_nM.
bool divisible_by_coords(const GroupSpec& spec, const GroupElement& x, std::int64_t n) {
  for (const auto& c : x.coords) {
    switch (spec.kind()) {
      case GroupKind::Rat:
      case GroupKind::LexRat: break;
      case GroupKind::Dyadic: {
        std::int64_t d = (c / Rational(n)).den();
        if ((d & (d - 1)) != 0) return false;
        break;
      }
      default:
        if (c.num() % n != 0) return false;
    }
  }
  return true;
}

std::string describe(const GroupSpec& spec, const SetExpr& a, const SetExpr* b = nullptr) {
  std::string s = spec.to_string() + ": A = " + print_expr(a);
  if (b) s += "; B = " + print_expr(*b);
  return s;
}

// -------------------------------------------------------------------------------------

struct BooleanConfig {
  GroupWindow window;
  RandomParams params;
};

}  // namespace

SuiteReport suite_boolean(const SuiteOptions& opt) {
  const std::vector<BooleanConfig> configs = {
      {window(GroupSpec::integers(), -120, 120), params(3, 6, 100, 1)},
      {window(GroupSpec::rationals(), -6, 6, 8), params(3, 1, 5, 4)},
      {window(GroupSpec::lex_int(2), -8, 8), params(3, 6, 7, 1)},
      {window(GroupSpec::lex_rat(2), -3, 3, 3), params(3, 1, 3, 3)},
      {window(GroupSpec::z_plus_alpha_z(kPhi), -10, 10), params(3, 6, 10, 1)},
  };
  SuiteReport total;
  total.suite = "boolean";
  for (const auto& cfg : configs) {
    const GroupSpec& spec = cfg.window.spec;
    const auto elements = enum_window(cfg.window);
    auto part = run_cases("boolean/" + spec.to_string(), 1000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      SetExpr a = random_group_expr(rng, spec, cfg.params);
      SetExpr b = random_group_expr(rng, spec, cfg.params);
      CncSet ca = eval_cnc(a, spec), cb = eval_cnc(b, spec);
      auto oa = bitmap_serial(elements, GroupOracle(a, spec));
      auto ob = bitmap_serial(elements, GroupOracle(b, spec));
      for (BoolOp op : {BoolOp::Union, BoolOp::Intersect, BoolOp::Complement, BoolOp::Difference}) {
        CncSet r = boolean(op, ca, cb);
        auto got = symbolic_eval(r, elements);
        for (std::size_t i = 0; i < elements.size(); ++i) {
          bool want = apply_op(op, oa.bits[i] != 0, ob.bits[i] != 0);
          if ((got.bits[i] != 0) != want) {
            out.push_back(Failure{op_name(op) + " " + describe(spec, a, &b) + " at " + format_element(spec, elements[i]),
                                  want ? "member" : "not a member", format_cnc(r)});
            break;
          }
        }
      }
    });
    part.notes.push_back(spec.to_string() + ": window of " + std::to_string(elements.size()) + " elements");
    merge_report(total, part, opt.max_failures);
  }
  return total;
}

// -------------------------------------------------------------------------------------

namespace {

struct CanonicalConfig {
  GroupWindow box;
  GroupElement split1, split2;
  RandomParams params;
};

std::string audit_shape(const CncSet& a) {
  if (a.modulus != effective_modulus(a.spec, a.modulus)) return "modulus not effective";
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const auto& [r, list] = a.classes[i];
    if (!(r == residue(a.spec, r, a.modulus))) return "residue " + format_element(a.spec, r) + " not canonical";
    if (list.empty()) return "empty residue class";
    if (i > 0 && !residue_less(a.classes[i - 1].first, r)) return "residues out of order";
    for (const auto& c : list)
      if (convex_empty(a.spec, c)) return "empty convex piece";
  }
  return "";
}

}  // namespace

SuiteReport suite_canonical(const SuiteOptions& opt) {
  const GroupSpec z = GroupSpec::integers(), q = GroupSpec::rationals(), l2 = GroupSpec::lex_int(2),
                  q2 = GroupSpec::lex_rat(2), zp = GroupSpec::z_plus_alpha_z(kPhi);
  const std::vector<CanonicalConfig> configs = {
      {window(z, -200, 200), element(z, {-61}), element(z, {60}), params(3, 6, 20, 1)},
      {window(q, -8, 8, 24), element(q, {-2}), element(q, {2}), params(3, 1, 5, 4)},
      {window(l2, -16, 16), element(l2, {-6, 16}), element(l2, {5, 16}), params(3, 4, 3, 1)},
      {window(q2, -4, 4, 4), element(q2, {-1, 0}), element(q2, {1, 0}), params(3, 1, 3, 2)},
      {window(zp, -30, 30), element(zp, {-3, 0}), element(zp, {3, 0}), params(3, 2, 2, 1)},
  };
  SuiteReport total;
  total.suite = "canonical";
  for (const auto& cfg : configs) {
    const GroupSpec& spec = cfg.box.spec;
    std::vector<std::vector<GroupElement>> windows(3);
    for (auto& x : enum_window(cfg.box)) {
      std::size_t k = cmp(spec, x, cfg.split1) < 0 ? 0 : (cmp(spec, x, cfg.split2) < 0 ? 1 : 2);
      windows[k].push_back(std::move(x));
    }
    std::atomic<std::int64_t> equal_pairs{0};
    auto part = run_cases("canonical/" + spec.to_string(), 500, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      SetExpr ea = random_group_expr(rng, spec, cfg.params);
      CncSet a = eval_cnc(ea, spec), b = empty_set(spec);
      std::string how = "independent";
      if (rng.chance(1, 3)) {
        switch (rng.uniform(0, 4)) {
          case 0: {
            SetExpr c = random_group_expr(rng, spec, cfg.params);
            b = eval_cnc(binary_expr(Op::Union, binary_expr(Op::Difference, ea, c), binary_expr(Op::Intersect, ea, c)), spec);
            how = "(A \\ C) | (A & C), C = " + print_expr(c);
            break;
          }
          case 1:
            b = cnc_complement(cnc_complement(a));
            how = "!!A";
            break;
          case 2: {
            SetExpr c = random_group_expr(rng, spec, cfg.params);
            b = cnc_union(a, cnc_intersect(a, eval_cnc(c, spec)));
            how = "A | (A & C), C = " + print_expr(c);
            break;
          }
          case 3: {
            std::int64_t n = a.modulus * rng.uniform(2, 3);
            b = canonicalize(spec, pieces_of(refine(a, n)));
            how = "pieces of A refined to modulus " + std::to_string(n);
            break;
          }
          default:
            b = cnc_from_json(Json::parse(cnc_to_json(a).dump()));
            how = "JSON round trip of A";
        }
      } else {
        b = eval_cnc(random_group_expr(rng, spec, cfg.params), spec);
      }
      const std::string input = describe(spec, ea) + "; B = " + how + " = " + format_cnc(b);
      for (const CncSet* s : {&a, &b}) {
        CncSet again = canonicalize(spec, pieces_of(*s));
        if (!(again == *s)) out.push_back(Failure{input, format_cnc(*s), format_cnc(again)});
        std::string shape = audit_shape(*s);
        if (!shape.empty()) out.push_back(Failure{input, "canonical shape", shape});
      }
      bool bits_equal = true;
      for (const auto& w : windows) bits_equal = bits_equal && symbolic_eval(a, w) == symbolic_eval(b, w);
      bool structural = a == b;
      if (structural) ++equal_pairs;
      if (structural != bits_equal)
        out.push_back(Failure{input, bits_equal ? "equal on all windows" : "different on some window",
                              structural ? "structurally equal" : "structurally different"});
      if (how != "independent" && !structural) out.push_back(Failure{input, format_cnc(a), format_cnc(b)});
    });
    part.notes.push_back(spec.to_string() + ": windows of " + std::to_string(windows[0].size()) + "/" +
                         std::to_string(windows[1].size()) + "/" + std::to_string(windows[2].size()) +
                         " elements, " + std::to_string(equal_pairs.load()) + " equal pairs");
    merge_report(total, part, opt.max_failures);
  }
  return total;
}

// -------------------------------------------------------------------------------------

SuiteReport suite_subgroup_reduce(const SuiteOptions& opt) {
  const GroupSpec spec = GroupSpec::integers();
  auto r = run_cases("subgroup-reduce", 200, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
    std::int64_t g = rng.uniform(1, 36);
    std::int64_t modulus = g * rng.uniform(1, 36 / g);
    std::vector<std::int64_t> reps;
    for (std::int64_t k = 0; k < modulus; k += g) reps.push_back(k + modulus * rng.uniform(-3, 3));
    std::shuffle(reps.begin(), reps.end(), rng.engine());
    std::vector<CncPiece> pieces;
    std::string input = "Z:";
    for (auto k : reps) {
      pieces.push_back(CncPiece{whole_line(), element(spec, {k}), modulus});
      input += " " + std::to_string(k) + "+" + std::to_string(modulus) + "Z";
    }
    auto member = [&](std::int64_t x) {
      return std::any_of(reps.begin(), reps.end(), [&](std::int64_t k) { return (x - k) % modulus == 0; });
    };
    std::int64_t want = gcd_of_differences(member, 200);
    CncSet reduced = subgroup_reduce(canonicalize(spec, pieces));
    if (reduced.modulus != want)
      out.push_back(Failure{input, "modulus " + std::to_string(want), "modulus " + std::to_string(reduced.modulus)});
    if (!(reduced == coset_set(spec, want, zero(spec))))
      out.push_back(Failure{input, std::to_string(want) + "Z", format_cnc(reduced)});
    if (g > 1) {
      // A proper coset of the same subgroup is rejected.
      std::vector<CncPiece> shifted = pieces;
      for (auto& p : shifted) p.residue = add(spec, p.residue, element(spec, {1}));
      try {
        subgroup_reduce(canonicalize(spec, shifted));
        out.push_back(Failure{input + " shifted by 1", "not a subgroup", "accepted"});
      } catch (const std::invalid_argument&) {
      }
    }
  });
  return r;
}

// -------------------------------------------------------------------------------------

namespace {

GroupElement into_subgroup(const GroupElement& x, const ConvexSubgroup& h) {
  GroupElement y = x;
  for (int i = 0; i < h.level && i < static_cast<int>(y.coords.size()); ++i) y.coords[static_cast<std::size_t>(i)] = Rational(0);
  return y;
}

}  // namespace

SuiteReport suite_regular(const SuiteOptions& opt) {
  const std::vector<GroupWindow> windows = {
      window(GroupSpec::integers(), -60, 60),
      window(GroupSpec::rationals(), -3, 3, 6),
      window(GroupSpec::lex_int(2), -14, 14),
      window(GroupSpec::lex_int(3), -7, 7),
      window(GroupSpec::lex_rat(2), -2, 2, 3),
      window(GroupSpec::lex_rat(3), -1, 1, 2),
      window(GroupSpec::z_plus_alpha_z(kPhi), -4, 4),
      window(GroupSpec::z_plus_alpha_z(QuadIrr(0, 1, 1, 2)), -4, 4),
      window(GroupSpec::dyadic(), -3, 3, 16),
  };
  SuiteReport total;
  total.suite = "regular";
  for (const auto& w : windows) {
    const GroupSpec& spec = w.spec;
    auto audit = run_cases("regular/audit/" + spec.to_string(), 12, opt, [&](Rng&, std::int64_t i, std::vector<Failure>& out) {
      std::int64_t n = i + 1;
      RnAudit a = rn_window_audit(spec, n, w);
      if (!a.agrees)
        out.push_back(Failure{spec.to_string() + ", n = " + std::to_string(n),
                              regular_subgroup(spec, n).to_string() + " is the largest convex subgroup satisfying the definition",
                              a.counterexample ? "fails at " + format_element(spec, *a.counterexample)
                                               : "a larger convex subgroup satisfies it"});
    });
    merge_report(total, audit, opt.max_failures);

    const bool discrete = spec.discrete();
    auto index = run_cases("regular/index/" + spec.to_string(), 1000, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      std::int64_t n = rng.uniform(1, 12);
      ConvexSubgroup rn = n >= 2 ? regular_subgroup(spec, n) : ConvexSubgroup{spec, 0};
      GroupElement a = into_subgroup(random_element(rng, spec, 30, 8), rn);
      std::string input = spec.to_string() + ", n = " + std::to_string(n) + ", a = " + format_element(spec, a);
      if (discrete) {
        GroupElement u = *unit_element(spec);
        GroupElement x = into_subgroup(random_element(rng, spec, 30, 1), rn);
        bool hit = false;
        for (std::int64_t k = 0; k < n && !hit; ++k) {
          GroupElement y = add(spec, x, scale(spec, u, k));
          hit = rn.contains(y) && divisible_by_coords(spec, sub(spec, y, a), n);
        }
        if (!hit)
          out.push_back(Failure{input + ", I = " + std::to_string(n) + " elements from " + format_element(spec, x),
                                "meets a + nR_n", "misses"});
        return;
      }
      GroupElement x = into_subgroup(random_element(rng, spec, 30, 8), rn);
      GroupElement y = into_subgroup(random_element(rng, spec, 30, 8), rn);
      if (cmp(spec, x, y) == 0) return;
      if (cmp(spec, x, y) > 0) std::swap(x, y);
      input += ", I = (" + format_element(spec, x) + ", " + format_element(spec, y) + ")";
      auto z = divisible_between(spec, n, sub(spec, x, a), sub(spec, y, a));
      if (!z) {
        out.push_back(Failure{input, "meets a + nR_n", "no element found"});
        return;
      }
      GroupElement p = add(spec, a, *z);
      if (!(cmp(spec, x, p) < 0 && cmp(spec, p, y) < 0 && divisible_by_coords(spec, *z, n) && rn.contains(p)))
        out.push_back(Failure{input, "element of a + nR_n inside I", format_element(spec, p)});
    });
    merge_report(total, index, opt.max_failures);
  }
  return total;
}

// -------------------------------------------------------------------------------------

namespace {

struct DecomposeConfig {
  GroupSpec spec;
  RandomParams params;
  GroupWindow window;
};

std::vector<GroupElement> finite_elements(const GroupSpec& spec, const ConvexSet& c) {
  Classification k = classify(convex_cnc(spec, c));
  if (k.kind != Classification::Kind::Finite) return {};
  return k.elements;
}

bool is_finite(const GroupSpec& spec, const ConvexSet& c) {
  return classify(convex_cnc(spec, c)).kind != Classification::Kind::Infinite;
}

GroupElement near(Rng& rng, const GroupSpec& spec, const GroupElement& a, std::int64_t n) {
  switch (spec.kind()) {
    case GroupKind::Int:
    case GroupKind::LexInt: {
      GroupElement b = a;
      b.coords.back() += Rational(rng.uniform(-2 * n - 2, 2 * n + 2));
      if (spec.arity() > 1 && rng.chance(1, 4)) b.coords.front() += Rational(rng.uniform(-1, 1));
      return make_element(spec, b.coords);
    }
    case GroupKind::ZPlusAlphaZ: return make_element(spec, {a.coords[0] + Rational(rng.uniform(-3, 3)), a.coords[1]});
    default: {
      GroupElement b = a;
      b.coords.back() += Rational(rng.uniform(-8, 8), 8);
      return make_element(spec, b.coords);
    }
  }
}

}  // namespace

SuiteReport suite_decompose(const SuiteOptions& opt) {
  const std::vector<DecomposeConfig> configs = {
      {GroupSpec::integers(), params(3, 6, 30, 1), window(GroupSpec::integers(), -40, 40)},
      {GroupSpec::rationals(), params(3, 1, 5, 4), window(GroupSpec::rationals(), -6, 6, 4)},
      {GroupSpec::lex_int(2), params(3, 4, 5, 1), window(GroupSpec::lex_int(2), -6, 6)},
      {GroupSpec::lex_rat(2), params(3, 1, 3, 2), window(GroupSpec::lex_rat(2), -3, 3, 2)},
      {GroupSpec::z_plus_alpha_z(kPhi), params(3, 4, 6, 1), window(GroupSpec::z_plus_alpha_z(kPhi), -6, 6)},
  };
  SuiteReport total;
  total.suite = "decompose";
  for (const auto& cfg : configs) {
    const GroupSpec& spec = cfg.spec;
    const auto elements = enum_window(cfg.window);
    const bool scan = spec.kind() == GroupKind::Int || spec.kind() == GroupKind::LexInt || spec.kind() == GroupKind::Rat;
    std::atomic<std::int64_t> related_pairs{0}, scanned{0};
    auto part = run_cases("decompose/" + spec.to_string(), 300, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      SetExpr e = random_group_expr(rng, spec, cfg.params);
      CncSet x = eval_cnc(e, spec);
      const std::string input = describe(spec, e);
      auto fail = [&](const std::string& what, const std::string& want, const std::string& got) {
        out.push_back(Failure{input + "; " + what, want, got});
      };
      Decomposition d = decompose(x);
      CncSet back = reassemble(d);
      if (!(back == x)) fail("reassemble", format_cnc(x), format_cnc(back));

      EquivContext ctx = make_context(x);
      GroupElement g = random_element(rng, spec, cfg.params.range, cfg.params.den);
      EquivContext moved = make_context(cnc_translate(x, g), ctx.n);
      EquivContext mirrored = make_context(cnc_negate(x), ctx.n);
      const std::int64_t range = cfg.params.range + 3;
      for (int k = 0; k < 20; ++k) {
        GroupElement t[3];
        for (auto& v : t) v = random_element(rng, spec, range, cfg.params.den);
        if (rng.chance(1, 2)) t[1] = near(rng, spec, t[0], ctx.n);
        const GroupElement &a = t[0], &b = t[1], &c = t[2];
        auto pair = [&](const GroupElement& u, const GroupElement& v) {
          return "(" + format_element(spec, u) + ", " + format_element(spec, v) + ")";
        };
        bool ab = related(a, b, ctx), ba = related(b, a, ctx), bc = related(b, c, ctx), ac = related(a, c, ctx);
        if (ab) ++related_pairs;
        if (!related(a, a, ctx)) fail("reflexive at " + format_element(spec, a), "true", "false");
        if (ab != ba) fail("symmetric " + pair(a, b), std::to_string(ab), std::to_string(ba));
        if (ab && bc && !ac) fail("transitive " + pair(a, b) + " " + pair(b, c), "related", "unrelated");
        std::vector<GroupElement> s(t, t + 3);
        std::sort(s.begin(), s.end(), [&](const auto& u, const auto& v) { return cmp(spec, u, v) < 0; });
        if (related(s[0], s[2], ctx) && !(related(s[0], s[1], ctx) && related(s[1], s[2], ctx)))
          fail("convex " + pair(s[0], s[2]) + " around " + format_element(spec, s[1]), "related", "unrelated");
        bool shifted = related(add(spec, a, g), add(spec, b, g), moved);
        if (shifted != ab) fail("translation by " + format_element(spec, g) + " of " + pair(a, b), std::to_string(ab), std::to_string(shifted));
        bool reflected = related(neg(spec, b), neg(spec, a), mirrored);
        if (reflected != ab) fail("reflection of " + pair(a, b), std::to_string(ab), std::to_string(reflected));
        bool in_class = convex_member(spec, b, eclass(a, ctx));
        if (in_class != ab) fail("eclass of " + format_element(spec, a) + " at " + format_element(spec, b), std::to_string(ab), std::to_string(in_class));
        if (scan) {
          GroupOracle in_x(e, spec);
          auto direct = oracle_related(a, b, [&](const GroupElement& y) { return in_x(y); }, spec, ctx.n);
          if (direct) {
            ++scanned;
            if (*direct != ab) fail("clause scan of " + pair(a, b), std::to_string(*direct), std::to_string(ab));
          }
        }
      }

      auto listed = finite_classes(ctx);
      for (const auto& fc : listed) {
        auto members = finite_elements(spec, fc);
        if (members.empty()) {
          fail("listed class " + format_convex(spec, fc), "finite and non-empty", "infinite or empty");
          continue;
        }
        for (const auto& m : members) {
          auto again = finite_elements(spec, eclass(m, ctx));
          if (again != members) fail("class of " + format_element(spec, m), format_convex(spec, fc), format_convex(spec, eclass(m, ctx)));
        }
      }
      for (const auto& a : elements) {
        ConvexSet cls = eclass(a, ctx);
        if (!is_finite(spec, cls)) continue;
        bool found = std::any_of(listed.begin(), listed.end(), [&](const ConvexSet& fc) { return convex_member(spec, a, fc); });
        if (!found) fail("finite class of " + format_element(spec, a) + " not listed", format_convex(spec, cls), "missing");
      }
    });
    part.notes.push_back(spec.to_string() + ": " + std::to_string(related_pairs.load()) + " related sampled pairs, " +
                         std::to_string(scanned.load()) + " pairs checked by clause scan");
    merge_report(total, part, opt.max_failures);
  }
  return total;
}

// -------------------------------------------------------------------------------------

namespace {

struct PullbackConfig {
  GroupWindow box;
  int level;
  RandomParams params;
};

}  // namespace

SuiteReport suite_pullback(const SuiteOptions& opt) {
  const std::vector<PullbackConfig> configs = {
      {window(GroupSpec::lex_int(2), -10, 10), 1, params(3, 6, 8, 1, false)},
      {window(GroupSpec::lex_rat(3), -2, 2, 2), 2, params(3, 1, 2, 2, false)},
      {window(GroupSpec::lex_rat(3), -2, 2, 2), 1, params(3, 1, 2, 2, false)},
  };
  SuiteReport total;
  total.suite = "pullback";
  for (const auto& cfg : configs) {
    const GroupSpec& spec = cfg.box.spec;
    const QuotientMap map = quotient_map(spec, ConvexSubgroup{spec, cfg.level});
    const GroupSpec& target = map.codomain;
    const auto elements = enum_window(cfg.box);
    const std::string name = "pullback/" + spec.to_string() + "->" + target.to_string();
    auto head = [&](const GroupElement& x) {
      return make_element(target, std::vector<Rational>(x.coords.begin(), x.coords.begin() + cfg.level));
    };
    auto part = run_cases(name, 200, opt, [&](Rng& rng, std::int64_t, std::vector<Failure>& out) {
      SetExpr ey = random_group_expr(rng, target, cfg.params);
      SetExpr ez = random_group_expr(rng, target, cfg.params);
      CncSet y = eval_cnc(ey, target), z = eval_cnc(ez, target);
      CncSet py = pullback(map, y);
      const std::string input = name + ": Y = " + print_expr(ey);
      GroupOracle oracle(ey, target);
      auto want = bitmap_serial(elements, [&](const GroupElement& x) { return oracle(head(x)); });
      auto got = symbolic_eval(py, elements);
      for (std::size_t i = 0; i < elements.size(); ++i)
        if (want.bits[i] != got.bits[i]) {
          out.push_back(Failure{input + " at " + format_element(spec, elements[i]), want.bits[i] ? "member" : "not a member",
                                format_cnc(py)});
          break;
        }
      CncSet pz = pullback(map, z);
      if (!(pullback(map, cnc_union(y, z)) == cnc_union(py, pz)))
        out.push_back(Failure{input + "; Z = " + print_expr(ez), "pullback commutes with union", "differs"});
      if (!(pullback(map, cnc_intersect(y, z)) == cnc_intersect(py, pz)))
        out.push_back(Failure{input + "; Z = " + print_expr(ez), "pullback commutes with intersection", "differs"});
      if (!(pullback(map, cnc_complement(y)) == cnc_complement(py)))
        out.push_back(Failure{input, "pullback commutes with complement", "differs"});

      GroupElement u = random_element(rng, spec, 10, 2), v = random_element(rng, spec, 10, 2);
      if (!(quotient(map, add(spec, u, v)) == add(target, quotient(map, u), quotient(map, v))))
        out.push_back(Failure{name + " at " + format_element(spec, u) + ", " + format_element(spec, v), "homomorphism", "not additive"});
      if (cmp(spec, u, v) <= 0 && cmp(target, quotient(map, u), quotient(map, v)) > 0)
        out.push_back(Failure{name + " at " + format_element(spec, u) + ", " + format_element(spec, v), "monotone", "order reversed"});
      if ((quotient(map, u) == zero(target)) != map.kernel.contains(u))
        out.push_back(Failure{name + " at " + format_element(spec, u), "kernel is H", "differs"});
    });
    part.notes.push_back(name + ": box of " + std::to_string(elements.size()) + " elements");
    merge_report(total, part, opt.max_failures);
  }
  return total;
}

}  // namespace cnckit
