#include <string>

#include "doctest.h"
#include "matchlat/dot.hpp"
#include "matchlat/errors.hpp"
#include "matchlat/fixtures.hpp"
#include "matchlat/json_io.hpp"
#include "matchlat/planarity.hpp"

using namespace matchlat;

namespace {
bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("graph JSON round trip") {
  Json j = Json::parse(R"({
    "vertices": [
      {"id": 0, "x": "0", "y": "0"},
      {"id": 1, "x": "1.5", "y": "0"},
      {"id": 2, "x": "1.5", "y": "2"},
      {"id": 3, "x": "0", "y": "2"}
    ],
    "edges": [[0,1],[1,2],[2,3],[3,0]],
    "white_anchor": 0
  })");
  GraphInput in = graph_input_from_json(j);
  CHECK(in.vertices.size() == 4);
  CHECK(in.vertices[1].x == Rat(3, 2));
  CHECK(in.edges.size() == 4);
  CHECK(in.white_anchor == 0);

  PlaneGraph g = PlaneGraph::build(in);
  CHECK(g.cells().size() == 1);

  Json j2 = graph_input_to_json(in);
  GraphInput in2 = graph_input_from_json(j2);
  CHECK(in2.vertices.size() == in.vertices.size());
  for (size_t i = 0; i < in.vertices.size(); ++i) {
    CHECK(in2.vertices[i].id == in.vertices[i].id);
    CHECK(in2.vertices[i].x == in.vertices[i].x);
    CHECK(in2.vertices[i].y == in.vertices[i].y);
  }
  CHECK(in2.edges == in.edges);
  CHECK(in2.white_anchor == in.white_anchor);
}

TEST_CASE("graph JSON accepts integer coordinates and omitted anchor") {
  Json j = Json::parse(
      R"({"vertices":[{"id":5,"x":0,"y":0},{"id":7,"x":1,"y":0}],
          "edges":[[5,7]]})");
  GraphInput in = graph_input_from_json(j);
  CHECK(!in.white_anchor.has_value());
  CHECK(in.vertices[0].id == 5);
  PlaneGraph g = PlaneGraph::build(in);
  CHECK(g.n() == 2);
}

TEST_CASE("malformed graph JSON is a parse error") {
  CHECK_THROWS_AS(graph_input_from_json(Json::parse("[]")), ParseError);
  CHECK_THROWS_AS(graph_input_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(
      graph_input_from_json(Json::parse(
          R"({"vertices":[{"id":0,"x":"a","y":"0"}],"edges":[]})")),
      ParseError);
  CHECK_THROWS_AS(
      graph_input_from_json(
          Json::parse(R"({"vertices":[{"id":0,"x":1,"y":2}],"edges":[[0]]})")),
      ParseError);
}

TEST_CASE("poset JSON round trip") {
  Json j = Json::parse(
      R"({"elements":["a","b","c"],"covers":[["a","b"],["a","c"]]})");
  Poset p = poset_from_json(j);
  CHECK(p.size() == 3);
  CHECK(p.leq(p.index("a"), p.index("c")));
  Json j2 = poset_to_json(p);
  Poset p2 = poset_from_json(j2);
  CHECK(p2 == p);
  // cyclic input surfaces as a validation failure
  CHECK_THROWS_AS(
      poset_from_json(Json::parse(
          R"({"elements":["a","b"],"covers":[["a","b"],["b","a"]]})")),
      ValidationError);
  CHECK_THROWS_AS(
      poset_from_json(Json::parse(
          R"({"elements":["a"],"covers":[["a","zzz"]]})")),
      ParseError);
}

TEST_CASE("simple graph JSON") {
  Json j = Json::parse(R"({"vertices":[0,1,2],"edges":[[0,1],[1,2]]})");
  SimpleGraph g = simple_graph_from_json(j);
  CHECK(g.n == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("matching and classification serialization") {
  PlaneGraph g = fixtures::hexagon();
  auto pms = enumerate_perfect_matchings(g);
  Json jm = matching_to_json(pms[0]);
  CHECK(jm.is_array());
  CHECK(jm.size() == 3);

  auto cls = classify_cells(g, pms[0]);
  Json jc = classification_to_json(cls);
  CHECK(jc.size() == 1);
  std::string status = jc.begin().value();
  CHECK((status == "proper" || status == "improper"));
}

TEST_CASE("lattice serialization carries order data") {
  Lattice l = filters(antichain(2));
  Json j = lattice_to_json(l);
  CHECK(j["elements"].size() == 4);
  CHECK(j["covers"].size() == 4);
  CHECK(j.contains("top"));
  CHECK(j.contains("bottom"));
}

TEST_CASE("verdict serialization for each reason") {
  ScreenVerdict v1 = screen(filters(delta_poset()));
  Json j1 = verdict_to_json(v1);
  CHECK(j1["status"] == "non-matchable");
  CHECK(j1["reason"] == "delta-convex");
  CHECK(j1.contains("embedding"));

  ScreenVerdict v2 = screen(chain_lattice(4));
  Json j2 = verdict_to_json(v2);
  CHECK(j2["status"] == "not-flagged");

  Lattice vb = vertical_sum(boolean_lattice(3), boolean_lattice(3));
  Json j3 = verdict_to_json(screen(vb));
  CHECK(j3["reason"] == "k33-criterion");
  CHECK(j3.contains("witness"));
}

TEST_CASE("face report shape") {
  PlaneGraph g = fixtures::grid(2, 3);
  Json j = face_report(g);
  CHECK(j["faces"].size() == 3);
  CHECK(j["cells"].size() == 2);
  CHECK(j["outer_face_id"] == g.outer_face_id());
}

TEST_CASE("DOT emission mentions what it draws") {
  SimpleGraph s = fixtures::sstar();
  std::string d = dot_simple_graph(s);
  CHECK(contains(d, "graph"));
  CHECK(contains(d, "--"));
  CHECK(contains(d, "f0*"));

  Multigraph mg = geometric_dual(fixtures::hexagon());
  std::string dm = dot_multigraph(mg);
  CHECK(contains(dm, "--"));

  ZDigraph z = build_z_digraph(fixtures::grid(2, 3));
  std::string dz = dot_z_digraph(z);
  CHECK(contains(dz, "digraph"));
  CHECK(contains(dz, "->"));
  CHECK(contains(dz, "(0-3)(1-4)(2-5)"));

  std::string dh = dot_hasse(delta_poset());
  CHECK(contains(dh, "rankdir"));
  CHECK(contains(dh, "--") == false);  // hasse drawn with invisible arrows
}
