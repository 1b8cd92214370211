#pragma once

#include <string>

#include "matchlat/graph.hpp"
#include "matchlat/plane_graph.hpp"
#include "matchlat/poset.hpp"

namespace matchlat {
namespace fixtures {

PlaneGraph hexagon();
PlaneGraph grid(int rows, int cols);  // rows x cols vertex grid
PlaneGraph cube();                    // planar-embedded Q3
PlaneGraph k2();
PlaneGraph even_cycle(int n);
// catacondensed benzenoid chains drawn brick-style
PlaneGraph fused_hexagons(int count);

Poset delta();
Poset b4();

// Hasse diagram of the delta poset as an abstract graph; a subdivision
// of K5 with branch vertices f0*..f4*.
SimpleGraph sstar();

struct CorpusEntry {
  std::string name;
  PlaneGraph graph;
};
// Plane elementary bipartite graphs, each <= 16 vertices.
std::vector<CorpusEntry> corpus();

// Named graph fixture lookup for the CLI; throws ValidationError on
// unknown names.
PlaneGraph graph_by_name(const std::string& name);
Poset poset_by_name(const std::string& name);

}  // namespace fixtures
}  // namespace matchlat
