#pragma once

#include <json.hpp>

#include "hgc/formal.hpp"

namespace hgc {

// Wire formats. Graph objects carry (m, n, flavor) so files are
// self-describing; the listed order of hairs and edges is the orientation.
//
//   graph:      {"m":int,"n":int,"flavor":"A"|"Abar"|"Aprime","internal":int,
//                "hairs":[{"dec":"w"|"1"|"e"},...],
//                "edges":[["v1","h2"],...]}        endpoints 1-based
//   formal sum: {"m":..,"n":..,"flavor":..,
//                "terms":[{"coeff":"p/q","graph":{...}},...]}  canonical key order

nlohmann::ordered_json graph_to_json(const HairyGraph& g, const Parameters& p, Flavor f);
struct ParsedGraph {
    HairyGraph graph;
    Parameters params;
    Flavor flavor = Flavor::A;
};
ParsedGraph graph_from_json(const nlohmann::json& j);

nlohmann::ordered_json formal_to_json(const FormalSum& s);
FormalSum formal_from_json(const nlohmann::json& j);

}  // namespace hgc
