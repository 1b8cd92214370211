#pragma once

#include <nlohmann/json.hpp>

#include "matchlat/matching.hpp"
#include "matchlat/plane_graph.hpp"
#include "matchlat/poset.hpp"
#include "matchlat/screen.hpp"
#include "matchlat/z_transform.hpp"

namespace matchlat {

// insertion-ordered so reports serialize deterministically
using Json = nlohmann::ordered_json;

GraphInput graph_input_from_json(const Json& j);
Json graph_input_to_json(const GraphInput& in);

// {"vertices":[...],"edges":[[a,b],...]} with coordinates optional
SimpleGraph simple_graph_from_json(const Json& j);

// {"elements":[...],"covers":[["lower","upper"],...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

Json matching_to_json(const Matching& m);
Json classification_to_json(const std::vector<CellClassification>& cls);
Json lattice_to_json(const Lattice& l);
Json verdict_to_json(const ScreenVerdict& v);
Json face_report(const PlaneGraph& g);

}  // namespace matchlat
