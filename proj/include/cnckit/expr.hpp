#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnckit/cnc.hpp"
#include "cnckit/cyclic.hpp"
#include "cnckit/padic.hpp"

namespace cnckit {

/// expr := term { ("|" | "&" | "\") term }
/// term := "!" term | atom | "(" expr ")"
/// atom := name "(" [ arg { "," arg } ] ")"
///
/// Binary operators share one precedence and associate to the left; a chain
/// mixing different operators is rejected, so it has to be parenthesized.
struct SetExpr {
  enum class Op { Atom, Union, Intersect, Difference, Complement };
  Op op = Op::Atom;
  std::string name;               // Atom
  std::vector<std::string> args;  // Atom, trimmed
  std::vector<SetExpr> children;  // two for binary ops, one for Complement
};

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SetExpr parse_expr(std::string_view text);
/// Canonical spacing: `a | b`, `!a`, parentheses only where needed.
std::string print_expr(const SetExpr& e);

SetExpr atom_expr(std::string name, std::vector<std::string> args);
SetExpr binary_expr(SetExpr::Op op, SetExpr a, SetExpr b);
SetExpr complement_expr(SetExpr a);

// Typed atoms over an ordered group --------------------------------------------

struct Endpoint {
  enum class Kind { NegInf, PosInf, Element, Prefix, Real };
  Kind kind = Kind::NegInf;
  GroupElement element;
  std::vector<Rational> prefix;
  QuadIrr real;
};

struct GroupAtom {
  enum class Kind { Coset, Interval, Point, All, Empty };
  Kind kind = Kind::All;
  std::int64_t modulus = 1;
  GroupElement element;  // coset residue or point
  Endpoint lo, hi;
  bool lo_closed = true, hi_closed = true;
};

/// Atoms: coset(n,a), interval(lo,hi[,flags]) with flags one of [] [) (] (),
/// point(e), all(), empty(). Endpoints are elements, `[t1,...]` coordinate
/// prefixes (lexicographic kinds), quadratic irrationals (real kinds) or ±inf.
GroupAtom type_group_atom(const SetExpr& atom, const GroupSpec& spec);
Endpoint parse_endpoint(const GroupSpec& spec, std::string_view text);
std::string format_endpoint(const GroupSpec& spec, const Endpoint& e);
ConvexSet interval_convex(const GroupSpec& spec, const GroupAtom& a);

CncSet eval_cnc(const SetExpr& e, const GroupSpec& spec);

// Typed atoms over a cyclically ordered group ----------------------------------

struct CircleAtom {
  enum class Kind { Arc, Coset, Point, All, Empty };
  Kind kind = Kind::All;
  ArcPiece arc;
  std::int64_t modulus = 1;
  CircleElement element;
};

/// Atoms: arc(from,to[,n[,base[,flags]]]) (flags default "()"), coset(n,a),
/// point(e), all(), empty().
CircleAtom type_circle_atom(const SetExpr& atom, const CyclicSpec& spec);
ArcSet eval_arc(const SetExpr& e, const CyclicSpec& spec);

// Typed atoms over Q inside Q_p -------------------------------------------------

struct PAdicAtom {
  enum class Kind { Power, Ball, Point, All, Empty };
  Kind kind = Kind::All;
  PAdicPiece piece;  // Power
  PAdicBall ball;    // Ball
  Rational point;
};

/// Atoms: pnpow(n[,b[,a]]) = a + b*P_n, ball(c,k), point(x), all(), empty().
PAdicAtom type_padic_atom(const SetExpr& atom, const PAdicContext& ctx);

/// Checks every atom of `e` against the context; throws TypeError naming the atom.
void type_check_group(const SetExpr& e, const GroupSpec& spec);
void type_check_circle(const SetExpr& e, const CyclicSpec& spec);
void type_check_padic(const SetExpr& e, const PAdicContext& ctx);

/// Collects the atoms of a union of `pnpow(...)` or `pnpow(...) & ball(...)` terms.
PAdicSet padic_set_of(const SetExpr& e, const PAdicContext& ctx);

}  // namespace cnckit
