#include <array>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cnckit/equiv.hpp"
#include "cnckit/expr.hpp"
#include "cnckit/subgroup.hpp"
#include "cnckit/suites.hpp"

using namespace cnckit;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string group = "int";
  std::string alpha = "(1+1*sqrt(5))/2";
  std::int64_t prime = 3;
  std::string window = "-10,10";
  std::int64_t cap = 1 << 20;
  std::string format = "json";
  std::uint64_t seed = 0;
};

GroupSpec group_of(const Flags& f) {
  try {
    return GroupSpec::parse(f.group);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

CyclicSpec circle_of(const Flags& f) {
  try {
    return CyclicSpec::parse(f.alpha);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

PAdicContext padic_of(const Flags& f) {
  try {
    return PAdicContext(f.prime);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

SetExpr expr_of(const std::string& text) {
  try {
    return parse_expr(text);
  } catch (const SyntaxError& e) {
    throw Usage(e.what());
  }
}

// "lo,hi" or "lo,hi,den"
std::array<std::int64_t, 3> window_bounds(const Flags& f) {
  std::array<std::int64_t, 3> b{0, 0, 1};
  std::size_t i = 0, start = 0;
  std::string s = f.window + ",";
  for (std::size_t pos; (pos = s.find(',', start)) != std::string::npos && i < 3; start = pos + 1) {
    try {
      b[i++] = std::stoll(s.substr(start, pos - start));
    } catch (const std::exception&) {
      throw Usage("bad --window '" + f.window + "'");
    }
  }
  if (i < 2 || start != s.size() || b[0] > b[1] || b[2] < 1) throw Usage("bad --window '" + f.window + "'");
  return b;
}

GroupWindow window_of(const Flags& f, const GroupSpec& spec) {
  auto b = window_bounds(f);
  return GroupWindow{spec, b[0], b[1], b[2], std::nullopt, std::nullopt, f.cap};
}

// Top-level keys padded to a column; arrays one entry per line.
std::string to_text(const Json& j) {
  if (!j.is_object()) return (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key() + std::string(width - it.key().size() + 2, ' ');
    const Json& v = it.value();
    if (v.is_array() && !v.empty()) {
      bool first = true;
      for (const auto& e : v) {
        out += (first ? key : std::string(key.size(), ' ')) + (e.is_string() ? e.get<std::string>() : e.dump()) + "\n";
        first = false;
      }
    } else {
      out += key + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  return out;
}

void emit(const Flags& f, const Json& j) {
  if (f.format == "text") std::cout << to_text(j);
  else std::cout << j.dump(2) << "\n";
}

Json element_list(const GroupSpec& spec, const std::vector<GroupElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(format_element(spec, x));
  return a;
}

GroupElement element_of(const GroupSpec& spec, const std::string& text) {
  try {
    return parse_element(spec, text);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

Rational rational_of(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact definable-set algebra over ordered groups, cyclic orders and Q_p"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--group", f.group, "int | rat | dyadic | lexint:k | lexrat:k | z+alpha:QUAD");
  app.add_option("--alpha", f.alpha, "rotation number QUAD, or dyadic, for arc commands");
  app.add_option("--prime", f.prime, "p for padic commands");
  app.add_option("--window", f.window, "lo,hi[,den]");
  app.add_option("--cap", f.cap, "maximum window size");
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", f.seed, "seed for check (CNCKIT_SEED overrides)");

  std::string expr, elem, expr2;
  std::optional<std::int64_t> n;
  std::int64_t level = 1, depth = 60, k = 0;
  double scale = 1.0;
  bool serial = false;
  std::function<int()> action;

  auto* normalize = app.add_subcommand("normalize", "canonical form of an expression");
  normalize->add_option("expr", expr)->required();
  normalize->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      CncSet s = eval_cnc(expr_of(expr), spec);
      if (f.format == "text") std::cout << format_cnc(s) << "\n";
      else emit(f, cnc_to_json(s));
      return 0;
    };
  });

  auto* member = app.add_subcommand("member", "membership of an element");
  member->add_option("expr", expr)->required();
  member->add_option("element", elem)->required();
  member->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      CncSet s = eval_cnc(expr_of(expr), spec);
      auto x = element_of(spec, elem);
      emit(f, Json{{"element", format_element(spec, x)}, {"member", cnc_member(x, s)}});
      return 0;
    };
  });

  auto* window = app.add_subcommand("window", "members of an expression inside the window");
  window->add_option("expr", expr)->required();
  window->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      CncSet s = eval_cnc(expr_of(expr), spec);
      auto w = enum_window(window_of(f, spec));
      std::string bitmap;
      std::vector<GroupElement> in;
      for (const auto& x : w) {
        bool m = cnc_member(x, s);
        bitmap += m ? '#' : '.';
        if (m) in.push_back(x);
      }
      emit(f, Json{{"size", w.size()}, {"count", in.size()}, {"bitmap", bitmap}, {"members", element_list(spec, in)}});
      return 0;
    };
  });

  auto* decomp = app.add_subcommand("decompose", "decomposition into E-classes");
  decomp->add_option("expr", expr)->required();
  decomp->add_option("-n", n, "modulus (a multiple of the set's modulus)");
  decomp->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      CncSet s = eval_cnc(expr_of(expr), spec);
      Decomposition d = decompose(s, n);
      if (!(reassemble(d) == s)) throw std::runtime_error("decomposition does not reassemble");
      emit(f, decomposition_to_json(d));
      return 0;
    };
  });

  auto* ecls = app.add_subcommand("eclass", "E-class of an element");
  ecls->add_option("expr", expr)->required();
  ecls->add_option("element", elem)->required();
  ecls->add_option("-n", n, "modulus");
  ecls->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      auto ctx = make_context(eval_cnc(expr_of(expr), spec), n);
      auto x = element_of(spec, elem);
      ConvexSet c = eclass(x, ctx);
      emit(f, Json{{"element", format_element(spec, x)}, {"class", convex_to_json(spec, c)}, {"text", format_convex(spec, c)}});
      return 0;
    };
  });

  auto* subs = app.add_subcommand("subgroups", "convex subgroups of the group");
  subs->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      Json a = Json::array();
      for (const auto& h : convex_subgroups(spec)) a.push_back(h.to_string());
      emit(f, Json{{"group", spec.to_string()}, {"subgroups", a}});
      return 0;
    };
  });

  std::int64_t rn_n = 1;
  auto* rn = app.add_subcommand("rn", "regular subgroup R_n");
  rn->add_option("n", rn_n)->required()->check(CLI::PositiveNumber);
  rn->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      ConvexSubgroup h = regular_subgroup(spec, rn_n);
      emit(f, Json{{"group", spec.to_string()}, {"n", rn_n}, {"level", h.level}, {"subgroup", h.to_string()}});
      return 0;
    };
  });

  auto* pull = app.add_subcommand("pullback", "preimage under the quotient by a convex subgroup");
  pull->add_option("expr", expr, "set in the quotient group")->required();
  pull->add_option("--level", level, "kernel level");
  pull->callback([&] {
    action = [&] {
      auto spec = group_of(f);
      QuotientMap map = quotient_map(spec, ConvexSubgroup{spec, static_cast<int>(level)});
      CncSet y = eval_cnc(expr_of(expr), map.codomain);
      emit(f, Json{{"codomain", map.codomain.to_string()}, {"pullback", cnc_to_json(pullback(map, y))}});
      return 0;
    };
  });

  auto* arc = app.add_subcommand("arc", "arc set of an expression, with optional membership");
  arc->add_option("expr", expr)->required();
  arc->add_option("element", elem);
  arc->callback([&] {
    action = [&] {
      auto spec = circle_of(f);
      ArcSet a = eval_arc(expr_of(expr), spec);
      Json j = arc_set_to_json(a);
      if (!elem.empty()) {
        CircleElement x = [&] {
          try {
            return parse_circle(spec, elem);
          } catch (const std::invalid_argument& e) {
            throw Usage(e.what());
          }
        }();
        j["element"] = format_circle(spec, x);
        j["member"] = arc_member(x, a);
      }
      emit(f, j);
      return 0;
    };
  });

  auto* padic = app.add_subcommand("padic", "p-adic valuations, balls, powers and germs");
  padic->require_subcommand(1);
  auto* pval = padic->add_subcommand("val", "valuation");
  pval->add_option("x", elem)->required();
  pval->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      emit(f, Json{{"p", ctx.p()}, {"x", rational_of(elem).to_string()}, {"valuation", format_valuation(valuation(ctx, rational_of(elem)))}});
      return 0;
    };
  });
  auto* pball = padic->add_subcommand("ball", "x in B(c, k)");
  pball->add_option("x", elem)->required();
  pball->add_option("c", expr2)->required();
  pball->add_option("k", k)->required();
  pball->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      emit(f, Json{{"p", ctx.p()}, {"in_ball", in_ball(ctx, rational_of(elem), rational_of(expr2), k)}});
      return 0;
    };
  });
  std::int64_t pn = 2;
  auto* ppow = padic->add_subcommand("pow", "x in P_n");
  ppow->add_option("x", elem)->required();
  ppow->add_option("n", pn)->required()->check(CLI::PositiveNumber);
  ppow->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      emit(f, Json{{"p", ctx.p()}, {"n", pn}, {"nth_power", is_nth_power(ctx, rational_of(elem), pn)}});
      return 0;
    };
  });
  auto* pmem = padic->add_subcommand("member", "membership in a p-adic set");
  pmem->add_option("expr", expr)->required();
  pmem->add_option("x", elem)->required();
  pmem->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      PAdicSet s = padic_set_of(expr_of(expr), ctx);
      emit(f, Json{{"set", padic_set_to_json(s)}, {"member", pset_member(ctx, rational_of(elem), s)}});
      return 0;
    };
  });
  auto* pgerm = padic->add_subcommand("germ", "compare germs at 0 of two p-adic sets");
  pgerm->add_option("a", expr)->required();
  pgerm->add_option("b", expr2)->required();
  pgerm->add_option("--depth", depth, "deepest level examined");
  pgerm->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      GermResult g = germ_compare(ctx, padic_set_of(expr_of(expr), ctx), padic_set_of(expr_of(expr2), ctx), depth);
      Json j{{"equal", g.equal}, {"conclusive", g.conclusive}, {"first_level", g.first_level}};
      if (g.discrepancy_level) j["discrepancy_level"] = *g.discrepancy_level;
      if (g.discrepancy_unit) j["discrepancy_unit"] = g.discrepancy_unit->to_string();
      emit(f, j);
      return 0;
    };
  });
  auto* pidx = padic->add_subcommand("index", "|Q_p^x / P_n|");
  pidx->add_option("n", pn)->required()->check(CLI::PositiveNumber);
  pidx->callback([&] {
    action = [&] {
      auto ctx = padic_of(f);
      emit(f, Json{{"p", ctx.p()}, {"n", pn}, {"index", power_index(ctx, pn)}});
      return 0;
    };
  });

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("suite", suite, "suite name or all");
  check->add_option("--scale", scale, "case count multiplier")->check(CLI::PositiveNumber);
  check->add_flag("--serial", serial, "run cases on one thread");
  check->callback([&] {
    action = [&] {
      if (const char* env = std::getenv("CNCKIT_SEED")) {
        try {
          f.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw Usage("bad CNCKIT_SEED");
        }
      }
      std::vector<const SuiteInfo*> chosen;
      if (suite == "all")
        for (const auto& s : suites()) chosen.push_back(&s);
      else if (const SuiteInfo* s = find_suite(suite))
        chosen.push_back(s);
      else
        throw Usage("unknown suite '" + suite + "'");
      SuiteOptions opt;
      opt.seed = f.seed;
      opt.scale = scale;
      opt.parallel = !serial;
      bool ok = true;
      Json reports = Json::array();
      for (const auto* s : chosen) {
        SuiteReport r = s->run(opt);
        ok = ok && r.passed();
        if (f.format == "text")
          std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  cases " << r.cases << "  failures " << r.failure_count << "\n";
        reports.push_back(report_to_json(r));
      }
      if (f.format == "json") std::cout << (chosen.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Usage& e) {
    std::cerr << "cnckit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cnckit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cnckit: " << e.what() << "\n";
    return 1;
  }
}
