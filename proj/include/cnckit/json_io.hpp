#pragma once

#include <json.hpp>

#include "cnckit/cnc.hpp"
#include "cnckit/cyclic.hpp"
#include "cnckit/equiv.hpp"
#include "cnckit/padic.hpp"

namespace cnckit {

using Json = nlohmann::ordered_json;

/// Cuts: {"kind": "-inf" | "+inf"}, {"kind": "principal", "at": e} for
/// (-inf, e], {"kind": "open", "at": e} for (-inf, e), {"kind": "gap", "at": r}
/// and, for lexicographic groups, {"kind": "prefix", "prefix": [...], "side":
/// "above" | "below"} for the cut just above or below a slab.
Json cut_to_json(const GroupSpec& spec, const Cut& c);
Cut cut_from_json(const GroupSpec& spec, const Json& j);

Json convex_to_json(const GroupSpec& spec, const ConvexSet& c);
ConvexSet convex_from_json(const GroupSpec& spec, const Json& j);

/// {"group", "modulus", "classes": [{"residue", "pieces": [{"lower", "upper"}]}]}
Json cnc_to_json(const CncSet& a);
/// Reads the encoding above and re-canonicalizes.
CncSet cnc_from_json(const Json& j);

/// {"circle", "components": [{"base", "modulus", "from", "to", ...}], "cover": cnc json}
Json arc_set_to_json(const ArcSet& a);

Json padic_set_to_json(const PAdicSet& s);
PAdicSet padic_set_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);

}  // namespace cnckit
