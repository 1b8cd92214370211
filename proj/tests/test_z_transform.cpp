#include <algorithm>
#include <set>

#include "doctest.h"
#include "matchlat/errors.hpp"
#include "matchlat/fixtures.hpp"
#include "matchlat/z_transform.hpp"

using namespace matchlat;

namespace {

std::set<std::pair<int, int>> arc_pairs(const ZDigraph& z) {
  std::set<std::pair<int, int>> s;
  for (const auto& a : z.arcs) s.insert({a.tail, a.head});
  return s;
}

}  // namespace

TEST_CASE("K2 has a one-point Z digraph") {
  ZDigraph z = build_z_digraph(fixtures::k2());
  CHECK(z.nodes.size() == 1);
  CHECK(z.arcs.empty());
  Lattice l = matching_lattice(fixtures::k2());
  CHECK(l.size() == 1);
}

TEST_CASE("hexagon Z digraph is a single arc") {
  PlaneGraph g = fixtures::hexagon();
  ZDigraph z = build_z_digraph(g);
  CHECK(z.nodes.size() == 2);
  REQUIRE(z.arcs.size() == 1);
  CHECK(z.arcs[0].cell_face_id == g.cells()[0].face_id);
  Lattice l = matching_lattice(g);
  CHECK(iso(l.poset(), chain(2)).has_value());
}

TEST_CASE("2x3 grid Z digraph is a directed path through the verticals") {
  PlaneGraph g = fixtures::grid(2, 3);
  ZDigraph z = build_z_digraph(g);
  CHECK(z.nodes.size() == 3);
  CHECK(z.arcs.size() == 2);
  Lattice l = matching_lattice(g);
  CHECK(iso(l.poset(), chain(3)).has_value());
  // the all-verticals matching sits strictly between the other two
  Matching verticals = {{0, 3}, {1, 4}, {2, 5}};
  int mid = z.node_index(verticals);
  REQUIRE(mid >= 0);
  int in = 0, out = 0;
  for (const auto& a : z.arcs) {
    in += a.head == mid;
    out += a.tail == mid;
  }
  CHECK(in == 1);
  CHECK(out == 1);
}

TEST_CASE("cube lattice is distributive and matches the arc set") {
  PlaneGraph g = fixtures::cube();
  ZDigraph z = build_z_digraph(g);
  CHECK(z.nodes.size() == 9);
  Lattice l = matching_lattice(g);
  CHECK(l.size() == 9);
  CHECK(l.is_distributive());
  // Hasse covers == arcs, as (lower, upper) node pairs
  std::set<std::pair<int, int>> covers;
  for (auto [lo, hi] : l.poset().covers()) covers.insert({lo, hi});
  std::set<std::pair<int, int>> arcs;
  for (const auto& a : z.arcs) arcs.insert({a.head, a.tail});
  CHECK(covers == arcs);
}

TEST_CASE("matching order is the reachability order of the digraph") {
  PlaneGraph g = fixtures::fused_hexagons(3);
  ZDigraph z = build_z_digraph(g);
  Poset p = matching_order(z);
  CHECK(p.size() == (int)z.nodes.size());
  for (const auto& a : z.arcs) CHECK(p.lt(a.head, a.tail));
}

TEST_CASE("extremal matchings bound the lattice") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    auto [top, bottom] = extremal_matchings(g);
    for (const Cell& c : g.cells()) {
      CHECK(classify_cell(g, top, c) != CellStatus::Improper);
      CHECK(classify_cell(g, bottom, c) != CellStatus::Proper);
    }
    Lattice l = matching_lattice(g);
    CHECK(l.label(l.top()) == matching_label(top));
    CHECK(l.label(l.bottom()) == matching_label(bottom));
  }
}

TEST_CASE("matching lattices are distributive across the corpus") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    Lattice l = matching_lattice(g);
    CHECK(l.is_distributive());
    CHECK(l.size() == (int)enumerate_perfect_matchings(g).size());
    // color-anchor swap dualizes the lattice
    Lattice d = matching_lattice(g.with_swapped_colors());
    CHECK(iso(d.poset(), l.poset().dual()).has_value());
  }
}

TEST_CASE("hypercube over zero cells is a single corner") {
  PlaneGraph g = fixtures::hexagon();
  auto pms = enumerate_perfect_matchings(g);
  HypercubeSublattice h = hypercube_of(g, pms[0], {});
  CHECK(h.corners.size() == 1);
  CHECK(h.corners.at(0) == pms[0]);
}

TEST_CASE("hypercube over one hexagon cell is an edge") {
  PlaneGraph g = fixtures::hexagon();
  auto pms = enumerate_perfect_matchings(g);
  HypercubeSublattice h = hypercube_of(g, pms[0], {g.cells()[0]});
  CHECK(h.corners.size() == 2);
  CHECK(h.corners.at(0) == pms[0]);
  CHECK(h.corners.at(1) == pms[1]);
}

TEST_CASE("hypercube guards its preconditions") {
  PlaneGraph g = fixtures::grid(2, 3);
  Matching m = {{0, 1}, {2, 5}, {3, 4}};
  const Cell* bad = nullptr;
  for (const Cell& c : g.cells())
    if (classify_cell(g, m, c) == CellStatus::NotAlternating) bad = &c;
  REQUIRE(bad != nullptr);
  CHECK_THROWS_AS(hypercube_of(g, m, {*bad}), CellNotAlternating);
  // adjacent cells are not disjoint
  Matching verticals = {{0, 3}, {1, 4}, {2, 5}};
  CHECK_THROWS_AS(hypercube_of(g, verticals, {g.cells()[0], g.cells()[1]}),
                  CellsNotDisjoint);
}

TEST_CASE("improper-set hypercube has M at the bottom, proper-set at top") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    Lattice l = matching_lattice(g);
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      std::vector<Cell> proper, improper;
      for (const Cell& c : g.cells()) {
        CellStatus s = classify_cell(g, m, c);
        if (s == CellStatus::Proper) proper.push_back(c);
        if (s == CellStatus::Improper) improper.push_back(c);
      }
      int mi = l.poset().index(matching_label(m));
      REQUIRE(mi >= 0);

      HypercubeSublattice up = hypercube_of(g, m, improper);
      CHECK(up.corners.size() == (1ull << improper.size()));
      for (const auto& [mask, corner] : up.corners)
        CHECK(l.leq(mi, l.poset().index(matching_label(corner))));

      HypercubeSublattice down = hypercube_of(g, m, proper);
      CHECK(down.corners.size() == (1ull << proper.size()));
      for (const auto& [mask, corner] : down.corners)
        CHECK(l.leq(l.poset().index(matching_label(corner)), mi));
    }
  }
}

TEST_CASE("meet-irreducible cells flip to meet-irreducible matchings") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    Lattice l = matching_lattice(g);
    std::vector<int> mi_list = l.meet_irreducibles();
    std::set<int> mi(mi_list.begin(), mi_list.end());
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      std::set<int> picked;
      for (const Cell& c : meet_irreducible_cells(g, m)) {
        CHECK(classify_cell(g, m, c) == CellStatus::Proper);
        int idx = l.poset().index(matching_label(flip(m, c)));
        REQUIRE(idx >= 0);
        CHECK(mi.count(idx) == 1);
        picked.insert(idx);
      }
      // and conversely: proper flips not selected are not meet-irreducible
      for (const Cell& c : g.cells())
        if (classify_cell(g, m, c) == CellStatus::Proper) {
          int idx = l.poset().index(matching_label(flip(m, c)));
          if (!picked.count(idx)) CHECK(mi.count(idx) == 0);
        }
    }
  }
}

TEST_CASE("mict conditions agree for every proper cell in the corpus") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      bool any_improper = false;
      for (const Cell& c : g.cells())
        any_improper |= classify_cell(g, m, c) == CellStatus::Improper;
      for (const Cell& c : g.cells()) {
        if (classify_cell(g, m, c) != CellStatus::Proper) continue;
        MictReport r = mict_check(g, m, c);
        CHECK(r.cond_a == r.cond_b);
        CHECK(r.cond_b == r.cond_c);
        CHECK(r.case1 == !any_improper);
        if (r.case1) CHECK(r.cond_a);
      }
    }
  }
}

TEST_CASE("mict rejects a non-proper cell") {
  PlaneGraph g = fixtures::hexagon();
  auto pms = enumerate_perfect_matchings(g);
  const Cell& c = g.cells()[0];
  const Matching& improper_side =
      classify_cell(g, pms[0], c) == CellStatus::Improper ? pms[0] : pms[1];
  CHECK_THROWS_AS(mict_check(g, improper_side, c), NotProperCell);
}

TEST_CASE("cut vertices of Z(G)") {
  CHECK(z_cut_vertices(fixtures::k2()).empty());
  CHECK(z_cut_vertices(fixtures::hexagon()).empty());

  auto cuts = z_cut_vertices(fixtures::grid(2, 3));
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0] == Matching{{0, 3}, {1, 4}, {2, 5}});

  // chain(3)-shaped lattice: middle of any 3-chain lattice is a cut vertex
  auto naph = z_cut_vertices(fixtures::fused_hexagons(2));
  CHECK(naph.size() == 1);
}

TEST_CASE("matching_label formats canonically") {
  CHECK(matching_label({{0, 1}, {2, 3}}) == "(0-1)(2-3)");
  CHECK(matching_label({}).empty());
}
