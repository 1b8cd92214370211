#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "matchlat/errors.hpp"
#include "matchlat/fixtures.hpp"
#include "matchlat/plane_graph.hpp"

using namespace matchlat;

namespace {

GraphInput::V v(int id, int x, int y) { return {id, Rat(x), Rat(y)}; }

GraphInput path4() {
  GraphInput in;
  in.vertices = {v(0, 0, 0), v(1, 1, 0), v(2, 2, 0), v(3, 3, 0)};
  in.edges = {{0, 1}, {1, 2}, {2, 3}};
  return in;
}

}  // namespace

TEST_CASE("hexagon embeds with two faces and one cell") {
  PlaneGraph g = fixtures::hexagon();
  CHECK(g.n() == 6);
  CHECK(g.edge_list().size() == 6);
  CHECK(g.faces().size() == 2);
  CHECK(g.cells().size() == 1);
  CHECK(g.connected());
  const Cell& c = g.cells()[0];
  CHECK(c.cycle.size() == 6);
  CHECK(c.edge_set.size() == 6);
  // clockwise convention: negative shoelace
  std::vector<Point> poly;
  for (int id : c.cycle) poly.push_back(g.position(id));
  CHECK(signed_area2(poly) < 0);
  // proper 2-coloring
  for (auto [a, b] : g.edge_list()) CHECK(g.color(a) != g.color(b));
  CHECK(g.color(g.white_anchor()) == Color::White);
}

TEST_CASE("odd cycle is rejected") {
  GraphInput in;
  in.vertices = {v(0, 0, 0), v(1, 2, 0), v(2, 1, 2)};
  in.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_THROWS_AS(PlaneGraph::build(in), NotBipartite);
}

TEST_CASE("crossing edges are rejected") {
  GraphInput in;
  in.vertices = {v(0, 0, 0), v(1, 2, 2), v(2, 0, 2), v(3, 2, 0)};
  in.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(PlaneGraph::build(in), EdgeCrossing);
}

TEST_CASE("vertex in the interior of an edge is rejected") {
  GraphInput in;
  in.vertices = {v(0, 0, 0), v(1, 2, 0), v(2, 1, 0), v(3, 1, 1)};
  in.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(PlaneGraph::build(in), EdgeCrossing);
}

TEST_CASE("duplicate edges, loops, unknown endpoints are rejected") {
  GraphInput in = path4();
  in.edges.push_back({1, 0});
  CHECK_THROWS_AS(PlaneGraph::build(in), DuplicateEdge);

  in = path4();
  in.edges.push_back({2, 2});
  CHECK_THROWS_AS(PlaneGraph::build(in), ValidationError);

  in = path4();
  in.edges.push_back({0, 9});
  CHECK_THROWS_AS(PlaneGraph::build(in), DanglingEndpoint);

  in = path4();
  in.vertices.push_back(v(4, 3, 0));  // duplicate position
  CHECK_THROWS_AS(PlaneGraph::build(in), ValidationError);

  in = path4();
  in.vertices.push_back({0, Rat(9), Rat(9)});  // duplicate id
  CHECK_THROWS_AS(PlaneGraph::build(in), ValidationError);
}

TEST_CASE("path graph has one face and no cells") {
  PlaneGraph g = PlaneGraph::build(path4());
  CHECK(g.faces().size() == 1);
  CHECK(g.faces()[0].is_outer);
  CHECK(g.faces()[0].walk.size() == 6);  // each edge twice
  CHECK(g.cells().empty());
}

TEST_CASE("2x3 grid has two cells sharing one edge") {
  PlaneGraph g = fixtures::grid(2, 3);
  CHECK(g.n() == 6);
  CHECK(g.edge_list().size() == 7);
  CHECK(g.faces().size() == 3);
  CHECK(g.cells().size() == 2);
  const Cell& a = g.cells()[0];
  const Cell& b = g.cells()[1];
  CHECK(a.shares_vertex(b));
  CHECK(a.shares_edge(b));
  CHECK(a.cycle.size() == 4);
  CHECK(b.cycle.size() == 4);
}

TEST_CASE("cube fixture has five cells") {
  PlaneGraph g = fixtures::cube();
  CHECK(g.n() == 8);
  CHECK(g.edge_list().size() == 12);
  CHECK(g.faces().size() == 6);  // Euler: 8 - 12 + 6 = 2
  CHECK(g.cells().size() == 5);
}

TEST_CASE("fused hexagon fixtures are well formed") {
  PlaneGraph naph = fixtures::fused_hexagons(2);
  CHECK(naph.n() == 10);
  CHECK(naph.edge_list().size() == 11);
  CHECK(naph.cells().size() == 2);
  PlaneGraph anth = fixtures::fused_hexagons(3);
  CHECK(anth.n() == 14);
  CHECK(anth.edge_list().size() == 16);
  CHECK(anth.cells().size() == 3);
  for (const Cell& c : anth.cells()) CHECK(c.cycle.size() == 6);
}

TEST_CASE("face walks partition the darts") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    size_t total = 0;
    std::set<std::pair<int, int>> seen;
    for (const Face& f : g.faces()) {
      total += f.walk.size();
      for (const HalfEdge& h : f.walk) {
        CHECK(g.has_edge(h.from, h.to));
        CHECK(seen.insert({h.from, h.to}).second);  // each dart once
      }
      // walk is connected tail-to-head
      for (size_t i = 0; i < f.walk.size(); ++i)
        CHECK(f.walk[i].to == f.walk[(i + 1) % f.walk.size()].from);
    }
    CHECK(total == 2 * g.edge_list().size());
    // Euler for connected plane graphs
    CHECK(g.n() - (int)g.edge_list().size() + (int)g.faces().size() == 2);
    // exactly one outer face
    int outers = 0;
    for (const Face& f : g.faces()) outers += f.is_outer;
    CHECK(outers == 1);
    CHECK(g.faces()[g.outer_face_id()].is_outer);
  }
}

TEST_CASE("cells are the bounded faces for corpus graphs") {
  // every corpus graph is 2-connected or a single edge; all inner faces
  // should surface as cells with clockwise simple cycles
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    if (g.n() <= 2) {
      CHECK(g.cells().empty());
      continue;
    }
    CHECK(g.cells().size() == g.faces().size() - 1);
    for (const Cell& c : g.cells()) {
      std::set<int> uniq(c.cycle.begin(), c.cycle.end());
      CHECK(uniq.size() == c.cycle.size());
      std::vector<Point> poly;
      for (int id : c.cycle) poly.push_back(g.position(id));
      CHECK(signed_area2(poly) < 0);
      CHECK(&g.cell_by_face(c.face_id) == &c);
    }
  }
}

TEST_CASE("color swap flips every vertex color") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    PlaneGraph s = g.with_swapped_colors();
    REQUIRE(s.n() == g.n());
    for (int id : g.vertex_ids()) CHECK(s.color(id) != g.color(id));
    CHECK(s.edge_list() == g.edge_list());
    CHECK(s.cells().size() == g.cells().size());
  }
}

TEST_CASE("geometric dual of the hexagon is two vertices joined six times") {
  PlaneGraph g = fixtures::hexagon();
  Multigraph d = geometric_dual(g);
  CHECK(d.n == 2);
  CHECK(d.edges.size() == 6);  // one dual edge per primal edge
  auto deg = d.degrees();
  CHECK(deg[0] == 6);
  CHECK(deg[1] == 6);
}

TEST_CASE("geometric dual degree equals face walk length") {
  for (const auto& [name, g] : fixtures::corpus()) {
    CAPTURE(name);
    Multigraph d = geometric_dual(g);
    CHECK(d.n == (int)g.faces().size());
    CHECK(d.edges.size() == g.edge_list().size());
    auto deg = d.degrees();
    for (const Face& f : g.faces()) CHECK(deg[f.id] == (int)f.walk.size());
  }
}

TEST_CASE("dual of a disconnected graph is refused") {
  GraphInput in;
  in.vertices = {v(0, 0, 0), v(1, 1, 0), v(2, 5, 0), v(3, 6, 0)};
  in.edges = {{0, 1}, {2, 3}};
  PlaneGraph g = PlaneGraph::build(in);
  CHECK(!g.connected());
  CHECK(g.component_count() == 2);
  CHECK_THROWS_AS(geometric_dual(g), Disconnected);
}

TEST_CASE("cell intersection graph modes") {
  PlaneGraph g = fixtures::grid(3, 3);  // four unit cells in a block
  REQUIRE(g.cells().size() == 4);
  std::vector<int> ids;
  for (const Cell& c : g.cells()) ids.push_back(c.face_id);
  SimpleGraph sv = cell_intersection_graph(g, ids, IntersectMode::ShareVertex);
  SimpleGraph se = cell_intersection_graph(g, ids, IntersectMode::ShareEdge);
  CHECK(sv.n == 4);
  CHECK(sv.edges.size() == 6);  // all pairs meet at the center vertex
  CHECK(se.edges.size() == 4);  // diagonal pairs share no edge
  for (auto e : se.edges) CHECK(sv.has_edge(e.first, e.second));
  CHECK_THROWS_AS(
      cell_intersection_graph(g, {9999}, IntersectMode::ShareVertex),
      UnknownCell);
}
