#pragma once

#include <string>

#include "matchlat/graph.hpp"
#include "matchlat/poset.hpp"
#include "matchlat/z_transform.hpp"

namespace matchlat {

std::string dot_simple_graph(const SimpleGraph& g);
std::string dot_multigraph(const Multigraph& g);
// Z digraph with matchings as node labels and cell ids on arcs.
std::string dot_z_digraph(const ZDigraph& z);
// Hasse diagram, upper elements drawn above.
std::string dot_hasse(const Poset& p);

}  // namespace matchlat
