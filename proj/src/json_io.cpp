#include "cnckit/json_io.hpp"

#include <stdexcept>

namespace cnckit {

namespace {

using Kind = Cut::Kind;

Json prefix_json(const std::vector<Rational>& prefix) {
  Json arr = Json::array();
  for (const auto& r : prefix) arr.push_back(r.to_string());
  return arr;
}

}  // namespace

Json cut_to_json(const GroupSpec& spec, const Cut& c) {
  switch (c.kind) {
    case Kind::NegInf: return Json{{"kind", "-inf"}};
    case Kind::PosInf: return Json{{"kind", "+inf"}};
    case Kind::Gap: return Json{{"kind", "gap"}, {"at", c.gap.to_string()}};
    default: break;
  }
  if (full_prefix(spec, c))
    return Json{{"kind", c.kind == Kind::Closed ? "principal" : "open"},
                {"at", format_element(spec, prefix_element(spec, c))}};
  return Json{{"kind", "prefix"}, {"prefix", prefix_json(c.prefix)}, {"side", c.kind == Kind::Closed ? "above" : "below"}};
}

Cut cut_from_json(const GroupSpec& spec, const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "-inf") return Cut::neg_inf();
  if (kind == "+inf") return Cut::pos_inf();
  if (kind == "gap") return gap_at(spec, QuadIrr::parse(j.at("at").get<std::string>()));
  if (kind == "principal") return closed_at(spec, parse_element(spec, j.at("at").get<std::string>()));
  if (kind == "open") return open_at(spec, parse_element(spec, j.at("at").get<std::string>()));
  if (kind == "prefix") {
    std::vector<Rational> prefix;
    for (const auto& v : j.at("prefix")) prefix.push_back(Rational::parse(v.get<std::string>()));
    const std::string side = j.at("side").get<std::string>();
    if (side == "above") return closed_prefix(spec, std::move(prefix));
    if (side == "below") return open_prefix(spec, std::move(prefix));
    throw std::invalid_argument("prefix side must be above or below");
  }
  throw std::invalid_argument("unknown cut kind '" + kind + "'");
}

Json convex_to_json(const GroupSpec& spec, const ConvexSet& c) {
  return Json{{"lower", cut_to_json(spec, c.lower)}, {"upper", cut_to_json(spec, c.upper)}};
}

ConvexSet convex_from_json(const GroupSpec& spec, const Json& j) {
  return ConvexSet{cut_from_json(spec, j.at("lower")), cut_from_json(spec, j.at("upper"))};
}

Json cnc_to_json(const CncSet& a) {
  Json classes = Json::array();
  for (const auto& [r, list] : a.classes) {
    Json pieces = Json::array();
    for (const auto& c : list) pieces.push_back(convex_to_json(a.spec, c));
    classes.push_back(Json{{"residue", format_element(a.spec, r)}, {"pieces", pieces}});
  }
  return Json{{"group", a.spec.to_string()}, {"modulus", a.modulus}, {"classes", classes}};
}

CncSet cnc_from_json(const Json& j) {
  GroupSpec spec = GroupSpec::parse(j.at("group").get<std::string>());
  std::int64_t n = j.at("modulus").get<std::int64_t>();
  std::vector<CncPiece> pieces;
  for (const auto& cls : j.at("classes")) {
    GroupElement r = parse_element(spec, cls.at("residue").get<std::string>());
    for (const auto& p : cls.at("pieces")) pieces.push_back(CncPiece{convex_from_json(spec, p), r, n});
  }
  return canonicalize(spec, pieces);
}

Json arc_set_to_json(const ArcSet& a) {
  Json comps = Json::array();
  for (const auto& c : arc_components(a)) {
    Json j{{"base", format_circle(a.spec, c.base)}, {"modulus", c.modulus}};
    if (c.whole) {
      j["whole"] = true;
    } else {
      j["from"] = format_circle(a.spec, c.arc.from);
      j["to"] = format_circle(a.spec, c.arc.to);
      j["closed_from"] = c.arc.closed_from;
      j["closed_to"] = c.arc.closed_to;
    }
    comps.push_back(std::move(j));
  }
  return Json{{"circle", a.spec.to_string()}, {"components", comps}, {"cover", cnc_to_json(a.cover)}};
}

Json padic_set_to_json(const PAdicSet& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) {
    Json j{{"a", p.a.to_string()}, {"b", p.b.to_string()}, {"n", p.n}};
    j["ball"] = p.ball ? Json{{"center", p.ball->center.to_string()}, {"radius", p.ball->radius}} : Json(nullptr);
    pieces.push_back(std::move(j));
  }
  return Json{{"p", s.p}, {"pieces", pieces}};
}

PAdicSet padic_set_from_json(const Json& j) {
  PAdicSet s;
  s.p = j.at("p").get<std::int64_t>();
  for (const auto& pj : j.at("pieces")) {
    PAdicPiece p;
    p.a = Rational::parse(pj.at("a").get<std::string>());
    p.b = Rational::parse(pj.at("b").get<std::string>());
    p.n = pj.at("n").get<std::int64_t>();
    if (pj.contains("ball") && !pj.at("ball").is_null())
      p.ball = PAdicBall{Rational::parse(pj.at("ball").at("center").get<std::string>()),
                         pj.at("ball").at("radius").get<std::int64_t>()};
    check_piece(p);
    s.pieces.push_back(std::move(p));
  }
  return s;
}

Json decomposition_to_json(const Decomposition& d) {
  Json finite = Json::array();
  for (const auto& e : d.finite_part) finite.push_back(format_element(d.spec, e));
  Json classes = Json::array();
  for (const auto& b : d.classes) {
    Json residues = Json::array();
    for (const auto& r : b.residues) residues.push_back(format_element(d.spec, r));
    classes.push_back(Json{{"class", convex_to_json(d.spec, b.block)}, {"residues", residues}});
  }
  return Json{{"group", d.spec.to_string()}, {"n", d.n}, {"finite_part", finite}, {"classes", classes}};
}

}  // namespace cnckit
