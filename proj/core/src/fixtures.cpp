#include "matchlat/fixtures.hpp"

#include "matchlat/errors.hpp"
#include "matchlat/planarity.hpp"
#include "matchlat/screen.hpp"

namespace matchlat {
namespace fixtures {

namespace {

PlaneGraph from_parts(std::vector<std::tuple<int, int, int>> verts,
                      std::vector<std::pair<int, int>> edges) {
  GraphInput in;
  for (auto [id, x, y] : verts) in.vertices.push_back({id, Rat(x), Rat(y)});
  in.edges = std::move(edges);
  return PlaneGraph::build(in);
}

}  // namespace

PlaneGraph even_cycle(int n) {
  if (n < 4 || n % 2 != 0) throw ValidationError("even_cycle needs even n >= 4");
  // rectangle outline with k vertices per row
  int k = n / 2;
  std::vector<std::tuple<int, int, int>> verts;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) verts.push_back({i, i, 0});
  for (int i = 0; i < k; ++i) verts.push_back({k + i, k - 1 - i, 1});
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_parts(std::move(verts), std::move(edges));
}

PlaneGraph hexagon() { return even_cycle(6); }

PlaneGraph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ValidationError("empty grid");
  std::vector<std::tuple<int, int, int>> verts;
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      verts.push_back({id(r, c), c, r});
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return from_parts(std::move(verts), std::move(edges));
}

PlaneGraph cube() {
  return from_parts({{0, 0, 0}, {1, 3, 0}, {2, 3, 3}, {3, 0, 3},
                     {4, 1, 1}, {5, 2, 1}, {6, 2, 2}, {7, 1, 2}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                     {4, 5}, {5, 6}, {6, 7}, {7, 4},
                     {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

PlaneGraph k2() { return from_parts({{0, 0, 0}, {1, 1, 0}}, {{0, 1}}); }

PlaneGraph fused_hexagons(int count) {
  if (count < 1) throw ValidationError("need at least one hexagon");
  // brick-style drawing: two rows, vertical struts every second column
  int w = 2 * count + 1;
  std::vector<std::tuple<int, int, int>> verts;
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < w; ++x) {
      verts.push_back({id(x, y), x, y});
      if (x + 1 < w) edges.push_back({id(x, y), id(x + 1, y)});
    }
  for (int x = 0; x < w; x += 2) edges.push_back({id(x, 0), id(x, 1)});
  return from_parts(std::move(verts), std::move(edges));
}

Poset delta() { return delta_poset(); }

Poset b4() { return boolean_poset(4); }

SimpleGraph sstar() {
  SimpleGraph g = hasse_graph(delta_poset());
  for (auto& lab : g.labels) lab = "f" + lab + "*";
  return g;
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"k2", k2()});
  out.push_back({"c4", even_cycle(4)});
  out.push_back({"hexagon", hexagon()});
  out.push_back({"c8", even_cycle(8)});
  out.push_back({"grid2x3", grid(2, 3)});
  out.push_back({"grid2x4", grid(2, 4)});
  out.push_back({"grid2x5", grid(2, 5)});
  out.push_back({"grid3x4", grid(3, 4)});
  out.push_back({"cube", cube()});
  out.push_back({"naphthalene", fused_hexagons(2)});
  out.push_back({"anthracene", fused_hexagons(3)});
  return out;
}

PlaneGraph graph_by_name(const std::string& name) {
  if (name == "hexagon") return hexagon();
  if (name == "grid2x3") return grid(2, 3);
  if (name == "grid2x4") return grid(2, 4);
  if (name == "grid2x5") return grid(2, 5);
  if (name == "grid3x4") return grid(3, 4);
  if (name == "cube") return cube();
  if (name == "k2") return k2();
  if (name == "c4") return even_cycle(4);
  if (name == "c8") return even_cycle(8);
  if (name == "naphthalene") return fused_hexagons(2);
  if (name == "anthracene") return fused_hexagons(3);
  throw ValidationError("unknown graph fixture '" + name + "'");
}

Poset poset_by_name(const std::string& name) {
  if (name == "delta") return delta();
  if (name == "b4") return b4();
  throw ValidationError("unknown poset fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace matchlat
