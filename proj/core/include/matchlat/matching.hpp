#pragma once

#include <vector>

#include "matchlat/plane_graph.hpp"

namespace matchlat {

// A perfect matching as a canonically sorted edge set.
using Matching = std::vector<EdgeId>;

enum class CellStatus { Proper, Improper, NotAlternating };

struct CellClassification {
  int face_id;
  CellStatus status;
};

// Complete, duplicate-free, lexicographically sorted.
std::vector<Matching> enumerate_perfect_matchings(const PlaneGraph& g);

bool has_perfect_matching(const PlaneGraph& g);

// Union of all perfect matchings.
std::vector<EdgeId> allowed_edges(const PlaneGraph& g);

bool is_elementary(const PlaneGraph& g);

// Every nice cycle together with its interior induces an elementary
// subgraph. Exhaustive over simple cycles; refuses graphs above the
// desk-scale bound.
bool is_weakly_elementary(const PlaneGraph& g, int max_vertices = 24);

bool is_perfect_matching(const PlaneGraph& g, const Matching& m);

std::vector<CellClassification> classify_cells(const PlaneGraph& g,
                                               const Matching& m);
CellStatus classify_cell(const PlaneGraph& g, const Matching& m, const Cell& c);

Matching flip(const Matching& m, const Cell& c);

}  // namespace matchlat
