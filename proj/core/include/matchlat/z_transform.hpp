#pragma once

#include <map>

#include "matchlat/lattice.hpp"
#include "matchlat/matching.hpp"

namespace matchlat {

// Z-transformation digraph: nodes are perfect matchings, an arc runs from
// M1 to M2 when M1 (+) M2 is a cell that is proper for M1.
struct ZDigraph {
  std::vector<Matching> nodes;  // sorted canonical order
  struct Arc {
    int tail, head;    // node indices
    int cell_face_id;  // the flipped cell
  };
  std::vector<Arc> arcs;

  int node_index(const Matching& m) const;
};

struct HypercubeSublattice {
  std::vector<int> generator_face_ids;          // pairwise disjoint cells
  std::map<std::uint64_t, Matching> corners;    // generator subset -> corner
  Matching anchor;
};

struct MictReport {
  Matching matching;
  int cell_face_id;
  bool cond_a;  // M (+) f is meet-irreducible in the matching lattice
  bool cond_b;  // f intersects every improper M-alternating cell
  bool cond_c;  // no other hypercube corner has f proper
  bool case1;   // no improper M-alternating cell exists
};

ZDigraph build_z_digraph(const PlaneGraph& g);

// Poset on matchings: M1 <= M2 iff Z has a directed path from M2 to M1.
// Element labels are canonical matching strings.
Poset matching_order(const ZDigraph& z);

// The order validated as a distributive lattice whose cover relation is
// exactly the arc set of the Z digraph.
Lattice matching_lattice(const PlaneGraph& g);

std::pair<Matching, Matching> extremal_matchings(const PlaneGraph& g);

HypercubeSublattice hypercube_of(const PlaneGraph& g, const Matching& m,
                                 const std::vector<Cell>& generator_cells);

std::vector<Cell> meet_irreducible_cells(const PlaneGraph& g,
                                         const Matching& m);

MictReport mict_check(const PlaneGraph& g, const Matching& m, const Cell& f);

std::vector<Matching> z_cut_vertices(const PlaneGraph& g);

std::string matching_label(const Matching& m);

}  // namespace matchlat
