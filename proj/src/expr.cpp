#include "cnckit/expr.hpp"

#include <cctype>

namespace cnckit {

namespace {

using Op = SetExpr::Op;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SetExpr parse() {
    SetExpr e = chain();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static std::optional<Op> binary_op(char c) {
    switch (c) {
      case '|': return Op::Union;
      case '&': return Op::Intersect;
      case '\\': return Op::Difference;
      default: return std::nullopt;
    }
  }

  SetExpr chain() {
    SetExpr left = term();
    std::optional<Op> chain_op;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) return left;
      auto op = binary_op(s_[pos_]);
      if (!op) return left;
      if (chain_op && *op != *chain_op) throw SyntaxError(pos_, "mixed operators need parentheses");
      chain_op = op;
      ++pos_;
      SetExpr right = term();
      left = binary_expr(*op, std::move(left), std::move(right));
    }
  }

  SetExpr term() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "expected a term");
    char c = s_[pos_];
    if (c == '!') {
      ++pos_;
      return complement_expr(term());
    }
    if (c == '(') {
      ++pos_;
      SetExpr e = chain();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    return atom();
  }

  SetExpr atom() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, "expected a term");
    std::string name(s_.substr(start, pos_ - start));
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '(') throw SyntaxError(pos_, "expected '(' after " + name);
    ++pos_;
    std::vector<std::string> args;
    std::size_t arg_start = pos_;
    int depth = 0;
    for (;;) {
      if (pos_ >= s_.size()) throw SyntaxError(pos_, "unterminated argument list of " + name);
      char c = s_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if ((c == ')' || c == ']') && depth > 0) {
        --depth;
      } else if (c == ')' || (c == ',' && depth == 0)) {
        std::string arg = trim(s_.substr(arg_start, pos_ - arg_start));
        if (arg.empty() && !(c == ')' && args.empty())) throw SyntaxError(pos_, "empty argument");
        if (!arg.empty()) args.push_back(arg);
        ++pos_;
        if (c == ')') break;
        arg_start = pos_;
        continue;
      } else if (c == ']') {
        throw SyntaxError(pos_, "unbalanced ']'");
      }
      ++pos_;
    }
    return atom_expr(std::move(name), std::move(args));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

const char* op_text(Op op) {
  switch (op) {
    case Op::Union: return " | ";
    case Op::Intersect: return " & ";
    case Op::Difference: return " \\ ";
    default: return "";
  }
}

bool is_unary(const SetExpr& e) { return e.op == Op::Atom || e.op == Op::Complement; }

}  // namespace

SetExpr atom_expr(std::string name, std::vector<std::string> args) {
  SetExpr e;
  e.name = std::move(name);
  e.args = std::move(args);
  return e;
}

SetExpr binary_expr(Op op, SetExpr a, SetExpr b) {
  SetExpr e;
  e.op = op;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

SetExpr complement_expr(SetExpr a) {
  SetExpr e;
  e.op = Op::Complement;
  e.children.push_back(std::move(a));
  return e;
}

SetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const SetExpr& e) {
  switch (e.op) {
    case Op::Atom: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "," : "") + e.args[i];
      return s + ")";
    }
    case Op::Complement: {
      const SetExpr& c = e.children[0];
      return "!" + (is_unary(c) ? print_expr(c) : "(" + print_expr(c) + ")");
    }
    default: {
      const SetExpr& l = e.children[0];
      const SetExpr& r = e.children[1];
      std::string ls = is_unary(l) || l.op == e.op ? print_expr(l) : "(" + print_expr(l) + ")";
      std::string rs = is_unary(r) ? print_expr(r) : "(" + print_expr(r) + ")";
      return ls + op_text(e.op) + rs;
    }
  }
}

// Group atoms --------------------------------------------------------------------

namespace {

void need_args(const SetExpr& a, std::size_t lo, std::size_t hi) {
  if (a.args.size() < lo || a.args.size() > hi)
    throw TypeError("atom " + print_expr(a) + ": wrong number of arguments");
}

std::int64_t parse_modulus(const SetExpr& a, const std::string& text) {
  Rational r = Rational::parse(text);
  if (!r.is_integer() || r.num() < 1) throw TypeError("atom " + print_expr(a) + ": modulus must be a positive integer");
  return r.num();
}

template <class F>
auto typed(const SetExpr& a, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const TypeError&) {
    throw;
  } catch (const std::exception& ex) {
    throw TypeError("atom " + print_expr(a) + ": " + ex.what());
  }
}

void parse_flags(const SetExpr& a, const std::string& f, bool& lo, bool& hi) {
  if (f.size() != 2 || (f[0] != '[' && f[0] != '(') || (f[1] != ']' && f[1] != ')'))
    throw TypeError("atom " + print_expr(a) + ": flags must be one of [] [) (] ()");
  lo = f[0] == '[';
  hi = f[1] == ']';
}

std::vector<Rational> parse_tuple(std::string_view body) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    coords.push_back(Rational::parse(trim(body.substr(start, comma - start))));
    start = comma + 1;
  }
  return coords;
}

}  // namespace

Endpoint parse_endpoint(const GroupSpec& spec, std::string_view text) {
  std::string s = trim(text);
  Endpoint e;
  if (s == "-inf") return e;
  if (s == "+inf" || s == "inf") {
    e.kind = Endpoint::Kind::PosInf;
    return e;
  }
  if (spec.lex_ordered() && s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    auto coords = parse_tuple(std::string_view(s).substr(1, s.size() - 2));
    if (static_cast<int>(coords.size()) < spec.arity()) {
      GroupElement probe = zero(spec);
      for (std::size_t i = 0; i < coords.size(); ++i) probe.coords[i] = coords[i];
      check_element(spec, probe);
      e.kind = Endpoint::Kind::Prefix;
      e.prefix = std::move(coords);
      return e;
    }
    e.kind = Endpoint::Kind::Element;
    e.element = make_element(spec, std::move(coords));
    return e;
  }
  try {
    e.kind = Endpoint::Kind::Element;
    e.element = parse_element(spec, s);
    return e;
  } catch (const std::invalid_argument&) {
    if (!spec.archimedean() || spec.discrete()) throw;
  }
  QuadIrr r = QuadIrr::parse(s);
  if (auto el = element_of_real(spec, r)) {
    e.kind = Endpoint::Kind::Element;
    e.element = *el;
    return e;
  }
  gap_at(spec, r);  // validates
  e.kind = Endpoint::Kind::Real;
  e.real = r;
  return e;
}

std::string format_endpoint(const GroupSpec& spec, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return "-inf";
    case Endpoint::Kind::PosInf: return "+inf";
    case Endpoint::Kind::Element: return format_element(spec, e.element);
    case Endpoint::Kind::Real: return e.real.to_string();
    case Endpoint::Kind::Prefix: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.prefix.size(); ++i) s += (i ? "," : "") + e.prefix[i].to_string();
      return s + "]";
    }
  }
  return "";
}

GroupAtom type_group_atom(const SetExpr& a, const GroupSpec& spec) {
  if (a.op != Op::Atom) throw std::logic_error("not an atom");
  return typed(a, [&] {
    GroupAtom out;
    if (a.name == "coset") {
      need_args(a, 2, 2);
      out.kind = GroupAtom::Kind::Coset;
      out.modulus = parse_modulus(a, a.args[0]);
      out.element = parse_element(spec, a.args[1]);
    } else if (a.name == "interval") {
      need_args(a, 2, 3);
      out.kind = GroupAtom::Kind::Interval;
      out.lo = parse_endpoint(spec, a.args[0]);
      out.hi = parse_endpoint(spec, a.args[1]);
      if (a.args.size() == 3) parse_flags(a, a.args[2], out.lo_closed, out.hi_closed);
    } else if (a.name == "point") {
      need_args(a, 1, 1);
      out.kind = GroupAtom::Kind::Point;
      out.element = parse_element(spec, a.args[0]);
    } else if (a.name == "all" || a.name == "empty") {
      need_args(a, 0, 0);
      out.kind = a.name == "all" ? GroupAtom::Kind::All : GroupAtom::Kind::Empty;
    } else {
      throw TypeError("atom " + print_expr(a) + ": unknown for group " + spec.to_string());
    }
    return out;
  });
}

namespace {

// Lower cut of { x : x >= e } (closed) or { x : x > e } (open).
Cut lower_cut(const GroupSpec& spec, const Endpoint& e, bool closed) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return Cut::neg_inf();
    case Endpoint::Kind::PosInf: return Cut::pos_inf();
    case Endpoint::Kind::Element: return closed ? open_at(spec, e.element) : closed_at(spec, e.element);
    case Endpoint::Kind::Prefix: return closed ? open_prefix(spec, e.prefix) : closed_prefix(spec, e.prefix);
    case Endpoint::Kind::Real: return real_cut(spec, e.real, !closed);
  }
  return Cut::neg_inf();
}

Cut upper_cut(const GroupSpec& spec, const Endpoint& e, bool closed) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return Cut::neg_inf();
    case Endpoint::Kind::PosInf: return Cut::pos_inf();
    case Endpoint::Kind::Element: return closed ? closed_at(spec, e.element) : open_at(spec, e.element);
    case Endpoint::Kind::Prefix: return closed ? closed_prefix(spec, e.prefix) : open_prefix(spec, e.prefix);
    case Endpoint::Kind::Real: return real_cut(spec, e.real, closed);
  }
  return Cut::pos_inf();
}

}  // namespace

ConvexSet interval_convex(const GroupSpec& spec, const GroupAtom& a) {
  return ConvexSet{lower_cut(spec, a.lo, a.lo_closed), upper_cut(spec, a.hi, a.hi_closed)};
}

CncSet eval_cnc(const SetExpr& e, const GroupSpec& spec) {
  switch (e.op) {
    case Op::Atom: {
      GroupAtom a = type_group_atom(e, spec);
      switch (a.kind) {
        case GroupAtom::Kind::Coset: return coset_set(spec, a.modulus, a.element);
        case GroupAtom::Kind::Interval: return convex_cnc(spec, interval_convex(spec, a));
        case GroupAtom::Kind::Point: return convex_cnc(spec, point_set(spec, a.element));
        case GroupAtom::Kind::All: return whole_set(spec);
        case GroupAtom::Kind::Empty: return empty_set(spec);
      }
      break;
    }
    case Op::Complement: return cnc_complement(eval_cnc(e.children[0], spec));
    case Op::Union: return cnc_union(eval_cnc(e.children[0], spec), eval_cnc(e.children[1], spec));
    case Op::Intersect: return cnc_intersect(eval_cnc(e.children[0], spec), eval_cnc(e.children[1], spec));
    case Op::Difference: return cnc_difference(eval_cnc(e.children[0], spec), eval_cnc(e.children[1], spec));
  }
  throw std::logic_error("bad expression");
}

// Circle atoms -------------------------------------------------------------------

CircleAtom type_circle_atom(const SetExpr& a, const CyclicSpec& spec) {
  if (a.op != Op::Atom) throw std::logic_error("not an atom");
  return typed(a, [&] {
    CircleAtom out;
    if (a.name == "arc") {
      need_args(a, 2, 5);
      out.kind = CircleAtom::Kind::Arc;
      out.arc.arc.from = parse_circle(spec, a.args[0]);
      out.arc.arc.to = parse_circle(spec, a.args[1]);
      out.arc.base = Rational(0);
      if (a.args.size() >= 3) out.arc.modulus = parse_modulus(a, a.args[2]);
      if (a.args.size() >= 4) out.arc.base = parse_circle(spec, a.args[3]);
      if (a.args.size() >= 5) parse_flags(a, a.args[4], out.arc.arc.closed_from, out.arc.arc.closed_to);
    } else if (a.name == "coset") {
      need_args(a, 2, 2);
      out.kind = CircleAtom::Kind::Coset;
      out.modulus = parse_modulus(a, a.args[0]);
      out.element = parse_circle(spec, a.args[1]);
    } else if (a.name == "point") {
      need_args(a, 1, 1);
      out.kind = CircleAtom::Kind::Point;
      out.element = parse_circle(spec, a.args[0]);
    } else if (a.name == "all" || a.name == "empty") {
      need_args(a, 0, 0);
      out.kind = a.name == "all" ? CircleAtom::Kind::All : CircleAtom::Kind::Empty;
    } else {
      throw TypeError("atom " + print_expr(a) + ": unknown for circle " + spec.to_string());
    }
    return out;
  });
}

ArcSet eval_arc(const SetExpr& e, const CyclicSpec& spec) {
  switch (e.op) {
    case Op::Atom: {
      CircleAtom a = type_circle_atom(e, spec);
      switch (a.kind) {
        case CircleAtom::Kind::Arc: return arc_set(spec, {a.arc});
        case CircleAtom::Kind::Coset: return arc_coset(spec, a.modulus, a.element);
        case CircleAtom::Kind::Point:
          return arc_set(spec, {ArcPiece{Rational(0), 1, Arc{a.element, a.element, true, true}}});
        case CircleAtom::Kind::All: return arc_whole(spec);
        case CircleAtom::Kind::Empty: return arc_empty(spec);
      }
      break;
    }
    case Op::Complement: {
      ArcSet x = eval_arc(e.children[0], spec);
      return arc_boolean(BoolOp::Complement, x, x);
    }
    case Op::Union: return arc_boolean(BoolOp::Union, eval_arc(e.children[0], spec), eval_arc(e.children[1], spec));
    case Op::Intersect:
      return arc_boolean(BoolOp::Intersect, eval_arc(e.children[0], spec), eval_arc(e.children[1], spec));
    case Op::Difference:
      return arc_boolean(BoolOp::Difference, eval_arc(e.children[0], spec), eval_arc(e.children[1], spec));
  }
  throw std::logic_error("bad expression");
}

// p-adic atoms -------------------------------------------------------------------

PAdicAtom type_padic_atom(const SetExpr& a, const PAdicContext& ctx) {
  if (a.op != Op::Atom) throw std::logic_error("not an atom");
  return typed(a, [&] {
    PAdicAtom out;
    if (a.name == "pnpow") {
      need_args(a, 1, 3);
      out.kind = PAdicAtom::Kind::Power;
      out.piece.n = parse_modulus(a, a.args[0]);
      if (a.args.size() >= 2) out.piece.b = Rational::parse(a.args[1]);
      if (a.args.size() >= 3) out.piece.a = Rational::parse(a.args[2]);
      check_piece(out.piece);
    } else if (a.name == "ball") {
      need_args(a, 2, 2);
      out.kind = PAdicAtom::Kind::Ball;
      out.ball.center = Rational::parse(a.args[0]);
      Rational k = Rational::parse(a.args[1]);
      if (!k.is_integer()) throw TypeError("atom " + print_expr(a) + ": radius must be an integer");
      out.ball.radius = k.num();
    } else if (a.name == "point") {
      need_args(a, 1, 1);
      out.kind = PAdicAtom::Kind::Point;
      out.point = Rational::parse(a.args[0]);
    } else if (a.name == "all" || a.name == "empty") {
      need_args(a, 0, 0);
      out.kind = a.name == "all" ? PAdicAtom::Kind::All : PAdicAtom::Kind::Empty;
    } else {
      throw TypeError("atom " + print_expr(a) + ": unknown for p-adic context p=" + std::to_string(ctx.p()));
    }
    return out;
  });
}

namespace {

template <class F>
void for_each_atom(const SetExpr& e, F f) {
  if (e.op == Op::Atom) {
    f(e);
    return;
  }
  for (const auto& c : e.children) for_each_atom(c, f);
}

void collect_terms(const SetExpr& e, std::vector<const SetExpr*>& out) {
  if (e.op == Op::Union) {
    collect_terms(e.children[0], out);
    collect_terms(e.children[1], out);
  } else {
    out.push_back(&e);
  }
}

}  // namespace

void type_check_group(const SetExpr& e, const GroupSpec& spec) {
  for_each_atom(e, [&](const SetExpr& a) { type_group_atom(a, spec); });
}

void type_check_circle(const SetExpr& e, const CyclicSpec& spec) {
  for_each_atom(e, [&](const SetExpr& a) { type_circle_atom(a, spec); });
}

void type_check_padic(const SetExpr& e, const PAdicContext& ctx) {
  for_each_atom(e, [&](const SetExpr& a) { type_padic_atom(a, ctx); });
}

PAdicSet padic_set_of(const SetExpr& e, const PAdicContext& ctx) {
  PAdicSet out{ctx.p(), {}};
  std::vector<const SetExpr*> terms;
  collect_terms(e, terms);
  for (const SetExpr* t : terms) {
    if (t->op == Op::Atom) {
      PAdicAtom a = type_padic_atom(*t, ctx);
      if (a.kind == PAdicAtom::Kind::Empty) continue;
      if (a.kind != PAdicAtom::Kind::Power) throw TypeError("term " + print_expr(*t) + " is not a power-coset piece");
      out.pieces.push_back(a.piece);
      continue;
    }
    if (t->op == Op::Intersect && t->children[0].op == Op::Atom && t->children[1].op == Op::Atom) {
      PAdicAtom x = type_padic_atom(t->children[0], ctx);
      PAdicAtom y = type_padic_atom(t->children[1], ctx);
      if (x.kind == PAdicAtom::Kind::Ball) std::swap(x, y);
      if (x.kind == PAdicAtom::Kind::Power && y.kind == PAdicAtom::Kind::Ball) {
        x.piece.ball = y.ball;
        out.pieces.push_back(x.piece);
        continue;
      }
    }
    throw TypeError("term " + print_expr(*t) + " is not a power-coset piece");
  }
  return out;
}

}  // namespace cnckit
