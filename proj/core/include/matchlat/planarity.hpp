#pragma once

#include "matchlat/graph.hpp"
#include "matchlat/poset.hpp"

namespace matchlat {

enum class WitnessKind { K5Subdivision, K33Subdivision };

struct WitnessSubgraph {
  std::vector<std::pair<int, int>> edges;  // subgraph of the input
  std::vector<int> branch_vertices;
  WitnessKind kind;
};

bool is_planar(const SimpleGraph& g);

// Minimal non-planar subgraph by greedy edge deletion, classified after
// suppressing degree-2 vertices.
WitnessSubgraph kuratowski_witness(const SimpleGraph& g);

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);

// The Hasse diagram of the given poset as an undirected graph (vertex i
// of the output is element i, labels preserved).
SimpleGraph hasse_graph(const Poset& p);

}  // namespace matchlat
