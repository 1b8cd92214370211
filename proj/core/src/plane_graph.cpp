#include "matchlat/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "matchlat/errors.hpp"

namespace matchlat {

bool Cell::contains_vertex(int v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

bool Cell::contains_edge(EdgeId e) const {
  return std::binary_search(edge_set.begin(), edge_set.end(), e);
}

bool Cell::shares_vertex(const Cell& o) const {
  for (int v : cycle)
    if (o.contains_vertex(v)) return true;
  return false;
}

bool Cell::shares_edge(const Cell& o) const {
  for (const EdgeId& e : edge_set)
    if (o.contains_edge(e)) return true;
  return false;
}

int PlaneGraph::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw DanglingEndpoint("unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids_.begin());
}

bool PlaneGraph::has_edge(int a, int b) const {
  EdgeId e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

const Cell& PlaneGraph::cell_by_face(int face_id) const {
  for (const Cell& c : cells_)
    if (c.face_id == face_id) return c;
  throw UnknownCell("face " + std::to_string(face_id) + " is not a cell");
}

PlaneGraph PlaneGraph::build(const GraphInput& in) {
  PlaneGraph g;
  for (const auto& v : in.vertices) g.ids_.push_back(v.id);
  std::sort(g.ids_.begin(), g.ids_.end());
  if (std::adjacent_find(g.ids_.begin(), g.ids_.end()) != g.ids_.end())
    throw ValidationError("duplicate vertex id");

  const int n = g.n();
  g.pos_.resize(n);
  for (const auto& v : in.vertices) g.pos_[g.index_of(v.id)] = {v.x, v.y};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.pos_[i] == g.pos_[j])
        throw ValidationError("coincident vertex coordinates");

  for (auto [a, b] : in.edges) {
    if (a == b) throw DuplicateEdge("loop at vertex " + std::to_string(a));
    g.index_of(a);
    g.index_of(b);
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw DuplicateEdge();

  // adjacency by index
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges_) {
    adj[g.index_of(a)].push_back(g.index_of(b));
    adj[g.index_of(b)].push_back(g.index_of(a));
  }

  // 2-coloring; anchor (default: smallest id) is White in its component,
  // smallest id is White in every other component
  int anchor_id = in.white_anchor.value_or(g.ids_.empty() ? -1 : g.ids_[0]);
  if (anchor_id >= 0) g.index_of(anchor_id);
  g.white_anchor_ = anchor_id;

  g.color_.assign(n, Color::Black);
  g.comp_of_.assign(n, -1);
  int comp = 0;
  std::vector<int> roots;
  // component discovery in id order
  for (int i = 0; i < n; ++i) {
    if (g.comp_of_[i] != -1) continue;
    std::queue<int> q;
    q.push(i);
    g.comp_of_[i] = comp;
    std::vector<int> members{i};
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (g.comp_of_[w] == -1) {
          g.comp_of_[w] = comp;
          members.push_back(w);
          q.push(w);
        }
    }
    int root = *std::min_element(members.begin(), members.end());
    roots.push_back(root);
    ++comp;
  }
  g.components_ = comp;
  if (anchor_id >= 0) roots[g.comp_of_[g.index_of(anchor_id)]] = g.index_of(anchor_id);

  std::vector<int> colored(n, 0);
  for (int root : roots) {
    std::queue<int> q;
    q.push(root);
    colored[root] = 1;
    g.color_[root] = Color::White;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (!colored[w]) {
          colored[w] = 1;
          g.color_[w] = g.color_[u] == Color::White ? Color::Black : Color::White;
          q.push(w);
        } else if (g.color_[w] == g.color_[u]) {
          throw NotBipartite("odd cycle through vertex id " +
                             std::to_string(g.ids_[u]));
        }
      }
    }
  }

  // embedding validation: pairwise segments, and no vertex in an edge interior
  const auto& E = g.edges_;
  for (std::size_t i = 0; i < E.size(); ++i) {
    Point a = g.pos_[g.index_of(E[i].first)];
    Point b = g.pos_[g.index_of(E[i].second)];
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      Point c = g.pos_[g.index_of(E[j].first)];
      Point d = g.pos_[g.index_of(E[j].second)];
      if (segments_conflict(a, b, c, d))
        throw EdgeCrossing("edges (" + std::to_string(E[i].first) + "," +
                           std::to_string(E[i].second) + ") and (" +
                           std::to_string(E[j].first) + "," +
                           std::to_string(E[j].second) + ")");
    }
    for (int v = 0; v < n; ++v)
      if (point_on_open_segment(g.pos_[v], a, b))
        throw EdgeCrossing("vertex id " + std::to_string(g.ids_[v]) +
                           " lies inside an edge");
  }

  // rotation system: neighbors counterclockwise by polar angle
  g.rotation_.resize(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = adj[v];
    std::sort(nb.begin(), nb.end(), [&](int p, int q) {
      Point dp{g.pos_[p].x - g.pos_[v].x, g.pos_[p].y - g.pos_[v].y};
      Point dq{g.pos_[q].x - g.pos_[v].x, g.pos_[q].y - g.pos_[v].y};
      return angle_less(dp, dq);
    });
    for (int w : nb) g.rotation_[v].push_back(g.ids_[w]);
  }

  // face tracing: next(u->v) = (v->w), w the successor of u in CCW order at
  // v; this walks inner faces clockwise and the unbounded face the other way
  std::map<std::pair<int, int>, int> visited;  // half-edge (indices) -> face
  auto next_half = [&](int u, int v) {
    const auto& rot = g.rotation_[v];
    int uid = g.ids_[u];
    auto it = std::find(rot.begin(), rot.end(), uid);
    auto nx = std::next(it) == rot.end() ? rot.begin() : std::next(it);
    return std::pair<int, int>{v, g.index_of(*nx)};
  };
  for (auto [aid, bid] : g.edges_) {
    for (auto [u0, v0] : {std::pair{g.index_of(aid), g.index_of(bid)},
                          std::pair{g.index_of(bid), g.index_of(aid)}}) {
      if (visited.count({u0, v0})) continue;
      Face f;
      f.id = static_cast<int>(g.faces_.size());
      int u = u0, v = v0;
      do {
        visited[{u, v}] = f.id;
        f.walk.push_back({g.ids_[u], g.ids_[v]});
        auto [nu, nv] = next_half(u, v);
        u = nu;
        v = nv;
      } while (!(u == u0 && v == v0));
      g.faces_.push_back(std::move(f));
    }
  }

  // outer walk per component: the unique walk with non-negative signed area
  // (tree walks degenerate to zero)
  std::vector<int> outer_of_comp(comp, -1);
  std::vector<int> walks_in_comp(comp, 0);
  for (Face& f : g.faces_) {
    std::vector<Point> pts;
    for (const HalfEdge& h : f.walk) pts.push_back(g.pos_[g.index_of(h.from)]);
    int c = g.comp_of_[g.index_of(f.walk.front().from)];
    walks_in_comp[c]++;
    if (signed_area2(pts) >= 0) {
      if (outer_of_comp[c] != -1)
        throw InvariantError("two unbounded walks in one component");
      outer_of_comp[c] = f.id;
      f.is_outer = true;
    }
  }

  // Euler relation per component (components with edges)
  std::vector<int> vc(comp, 0), ec(comp, 0);
  for (int v = 0; v < n; ++v) vc[g.comp_of_[v]]++;
  for (auto [a, b] : g.edges_) ec[g.comp_of_[g.index_of(a)]]++;
  for (int c = 0; c < comp; ++c) {
    if (ec[c] == 0) continue;  // isolated vertex, only the outer region
    if (outer_of_comp[c] == -1)
      throw InvariantError("component without an unbounded walk");
    if (vc[c] - ec[c] + walks_in_comp[c] != 2)
      throw InvariantError("Euler relation failed on a component");
  }

  // representative outer face: the component of the smallest vertex id
  for (int c = 0; c < comp; ++c)
    if (outer_of_comp[c] != -1) {
      g.outer_face_id_ = outer_of_comp[c];
      break;
    }

  // cells: inner faces whose walk is a simple cycle; store clockwise
  for (const Face& f : g.faces_) {
    if (f.is_outer) continue;
    std::set<int> seen;
    bool simple = true;
    for (const HalfEdge& h : f.walk)
      if (!seen.insert(h.from).second) {
        simple = false;
        break;
      }
    if (!simple) continue;
    Cell c;
    c.face_id = f.id;
    for (const HalfEdge& h : f.walk) c.cycle.push_back(h.from);
    std::vector<Point> pts;
    for (int v : c.cycle) pts.push_back(g.pos_[g.index_of(v)]);
    if (signed_area2(pts) > 0) std::reverse(c.cycle.begin(), c.cycle.end());
    if (c.cycle.size() % 2 != 0)
      throw InvariantError("odd cell in a bipartite graph");
    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
      int a = c.cycle[i], b = c.cycle[(i + 1) % c.cycle.size()];
      c.edge_set.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(c.edge_set.begin(), c.edge_set.end());
    g.cells_.push_back(std::move(c));
  }
  std::sort(g.cells_.begin(), g.cells_.end(),
            [](const Cell& a, const Cell& b) { return a.face_id < b.face_id; });

  return g;
}

GraphInput PlaneGraph::to_input() const {
  GraphInput in;
  for (int i = 0; i < n(); ++i)
    in.vertices.push_back({ids_[i], pos_[i].x, pos_[i].y});
  in.edges.assign(edges_.begin(), edges_.end());
  return in;
}

PlaneGraph PlaneGraph::with_swapped_colors() const {
  GraphInput in = to_input();
  for (int i = 0; i < n(); ++i)
    if (color_[i] == Color::Black) {
      in.white_anchor = ids_[i];
      break;
    }
  if (!in.white_anchor) in.white_anchor = white_anchor_;  // edgeless graph
  return build(in);
}

std::vector<Cell> cells(const PlaneGraph& g) { return g.cells(); }

Multigraph geometric_dual(const PlaneGraph& g) {
  if (!g.connected()) throw Disconnected();
  Multigraph d;
  d.n = static_cast<int>(g.faces().size());
  for (const Face& f : g.faces()) d.labels.push_back("f" + std::to_string(f.id));
  // face containing each half-edge
  std::map<std::pair<int, int>, int> face_of;
  for (const Face& f : g.faces())
    for (const HalfEdge& h : f.walk) face_of[{h.from, h.to}] = f.id;
  for (auto [a, b] : g.edge_list())
    d.edges.emplace_back(face_of.at({a, b}), face_of.at({b, a}));
  return d;
}

SimpleGraph cell_intersection_graph(const PlaneGraph& g,
                                    const std::vector<int>& cell_face_ids,
                                    IntersectMode mode) {
  std::vector<const Cell*> sel;
  for (int fid : cell_face_ids) sel.push_back(&g.cell_by_face(fid));
  SimpleGraph out;
  out.n = static_cast<int>(sel.size());
  for (const Cell* c : sel)
    out.labels.push_back("f" + std::to_string(c->face_id));
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j) {
      bool adj = mode == IntersectMode::ShareVertex
                     ? sel[i]->shares_vertex(*sel[j])
                     : sel[i]->shares_edge(*sel[j]);
      if (adj) out.add_edge(i, j);
    }
  out.normalize();
  return out;
}

}  // namespace matchlat
