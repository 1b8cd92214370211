#include "matchlat/matching.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "matchlat/errors.hpp"

namespace matchlat {

namespace {

// Kuhn's augmenting-path matching on the subgraph avoiding `excluded`.
bool has_pm_avoiding(const PlaneGraph& g, const std::vector<char>& excluded) {
  const int n = g.n();
  std::vector<int> whites, blacks, side(n, -1);
  for (int i = 0; i < n; ++i) {
    if (excluded[i]) continue;
    int id = g.vertex_ids()[i];
    if (g.color(id) == Color::White) {
      side[i] = static_cast<int>(whites.size());
      whites.push_back(i);
    } else {
      side[i] = static_cast<int>(blacks.size());
      blacks.push_back(i);
    }
  }
  if (whites.size() != blacks.size()) return false;
  std::vector<std::vector<int>> adj(whites.size());
  for (auto [a, b] : g.edge_list()) {
    int ia = g.index_of(a), ib = g.index_of(b);
    if (excluded[ia] || excluded[ib]) continue;
    if (g.color(a) == Color::Black) std::swap(ia, ib);
    adj[side[ia]].push_back(side[ib]);
  }
  std::vector<int> match_b(blacks.size(), -1);
  std::vector<char> used;
  std::function<bool(int)> try_kuhn = [&](int w) {
    for (int b : adj[w]) {
      if (used[b]) continue;
      used[b] = 1;
      if (match_b[b] == -1 || try_kuhn(match_b[b])) {
        match_b[b] = w;
        return true;
      }
    }
    return false;
  };
  for (std::size_t w = 0; w < whites.size(); ++w) {
    used.assign(blacks.size(), 0);
    if (!try_kuhn(static_cast<int>(w))) return false;
  }
  return true;
}

}  // namespace

bool has_perfect_matching(const PlaneGraph& g) {
  if (g.n() % 2 != 0) return false;
  std::vector<char> none(g.n(), 0);
  return has_pm_avoiding(g, none);
}

std::vector<Matching> enumerate_perfect_matchings(const PlaneGraph& g) {
  std::vector<Matching> out;
  if (g.n() % 2 != 0) return out;
  const int n = g.n();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edge_list()) {
    adj[g.index_of(a)].push_back(g.index_of(b));
    adj[g.index_of(b)].push_back(g.index_of(a));
  }
  std::vector<char> covered(n, 0);
  Matching cur;
  // branch on an uncovered vertex with the fewest uncovered neighbors
  std::function<void()> rec = [&]() {
    int best = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (covered[v]) continue;
      int d = 0;
      for (int w : adj[v])
        if (!covered[w]) ++d;
      if (d == 0) return;  // dead end
      if (best == -1 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    if (best == -1) {
      Matching m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    covered[best] = 1;
    for (int w : adj[best]) {
      if (covered[w]) continue;
      covered[w] = 1;
      int a = g.vertex_ids()[best], b = g.vertex_ids()[w];
      cur.emplace_back(std::min(a, b), std::max(a, b));
      rec();
      cur.pop_back();
      covered[w] = 0;
    }
    covered[best] = 0;
  };
  rec();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> allowed_edges(const PlaneGraph& g) {
  std::vector<EdgeId> out;
  if (g.n() % 2 != 0) return out;
  for (auto [a, b] : g.edge_list()) {
    std::vector<char> excl(g.n(), 0);
    excl[g.index_of(a)] = excl[g.index_of(b)] = 1;
    if (has_pm_avoiding(g, excl)) out.emplace_back(a, b);
  }
  return out;
}

bool is_elementary(const PlaneGraph& g) {
  if (!g.connected()) return false;
  return allowed_edges(g).size() == g.edge_list().size() &&
         has_perfect_matching(g);
}

bool is_weakly_elementary(const PlaneGraph& g, int max_vertices) {
  if (g.n() > max_vertices)
    throw TooLarge("weak elementarity is exhaustive over simple cycles; " +
                   std::to_string(g.n()) + " vertices exceeds the bound of " +
                   std::to_string(max_vertices));
  if (!has_perfect_matching(g))
    throw NoPerfectMatching("weak elementarity requires a perfect matching");

  const int n = g.n();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edge_list()) {
    adj[g.index_of(a)].push_back(g.index_of(b));
    adj[g.index_of(b)].push_back(g.index_of(a));
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  bool ok = true;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  auto check_cycle = [&](const std::vector<int>& cyc) {
    // nice cycle?
    std::vector<char> excl(n, 0);
    for (int v : cyc) excl[v] = 1;
    if (!has_pm_avoiding(g, excl)) return;
    // closure: cycle plus everything strictly inside its polygon
    std::vector<Point> poly;
    for (int v : cyc) poly.push_back(g.position(g.vertex_ids()[v]));
    std::vector<char> in_set(n, 0);
    for (int v : cyc) in_set[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_set[v] && point_in_polygon(g.position(g.vertex_ids()[v]), poly))
        in_set[v] = 1;
    GraphInput sub;
    for (int v = 0; v < n; ++v)
      if (in_set[v]) {
        int id = g.vertex_ids()[v];
        sub.vertices.push_back({id, g.position(id).x, g.position(id).y});
      }
    std::set<EdgeId> cyc_edges;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = g.vertex_ids()[cyc[i]];
      int b = g.vertex_ids()[cyc[(i + 1) % cyc.size()]];
      cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto e : g.edge_list()) {
      int ia = g.index_of(e.first), ib = g.index_of(e.second);
      if (!in_set[ia] || !in_set[ib]) continue;
      if (!cyc_edges.count(e)) {
        // drop chords and edges running outside the cycle polygon
        Point mid{(g.position(e.first).x + g.position(e.second).x) / 2,
                  (g.position(e.first).y + g.position(e.second).y) / 2};
        if (!point_in_polygon(mid, poly)) continue;
      }
      sub.edges.push_back(e);
    }
    // prune vertices that lost all their edges (outside-only attachments)
    std::set<int> used;
    for (auto [a, b] : sub.edges) {
      used.insert(a);
      used.insert(b);
    }
    std::erase_if(sub.vertices,
                  [&](const GraphInput::V& v) { return !used.count(v.id); });
    if (!is_elementary(PlaneGraph::build(sub))) ok = false;
  };

  // simple cycles: min vertex first, one traversal direction
  std::function<void(int, int)> dfs = [&](int start, int v) {
    if (!ok) return;
    for (int w : adj[v]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) check_cycle(path);
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = 1;
        dfs(start, w);
        on_path[w] = 0;
        path.pop_back();
      }
      if (!ok) return;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    path = {s};
    on_path.assign(n, 0);
    on_path[s] = 1;
    dfs(s, s);
  }
  return ok;
}

bool is_perfect_matching(const PlaneGraph& g, const Matching& m) {
  std::vector<int> cover(g.n(), 0);
  for (auto [a, b] : m) {
    if (!g.has_edge(a, b)) return false;
    cover[g.index_of(a)]++;
    cover[g.index_of(b)]++;
  }
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

CellStatus classify_cell(const PlaneGraph& g, const Matching& m,
                         const Cell& c) {
  auto in_m = [&](int a, int b) {
    EdgeId e{std::min(a, b), std::max(a, b)};
    return std::binary_search(m.begin(), m.end(), e);
  };
  const auto& cyc = c.cycle;  // clockwise
  const std::size_t k = cyc.size();
  bool first = in_m(cyc[0], cyc[1]);
  for (std::size_t i = 0; i < k; ++i)
    if (in_m(cyc[i], cyc[(i + 1) % k]) != ((i % 2 == 0) == first))
      return CellStatus::NotAlternating;
  // proper: matched edges run White -> Black under clockwise traversal
  for (std::size_t i = 0; i < k; ++i) {
    int u = cyc[i], v = cyc[(i + 1) % k];
    if (in_m(u, v))
      return g.color(u) == Color::White ? CellStatus::Proper
                                        : CellStatus::Improper;
  }
  return CellStatus::NotAlternating;  // unreachable for even cycles
}

std::vector<CellClassification> classify_cells(const PlaneGraph& g,
                                               const Matching& m) {
  if (!is_perfect_matching(g, m)) throw NotAPerfectMatching();
  std::vector<CellClassification> out;
  for (const Cell& c : g.cells())
    out.push_back({c.face_id, classify_cell(g, m, c)});
  return out;
}

Matching flip(const Matching& m, const Cell& c) {
  auto in_m = [&](EdgeId e) {
    return std::binary_search(m.begin(), m.end(), e);
  };
  // the cell must alternate in and out of m
  const auto& cyc = c.cycle;
  const std::size_t k = cyc.size();
  bool first = in_m({std::min(cyc[0], cyc[1]), std::max(cyc[0], cyc[1])});
  for (std::size_t i = 0; i < k; ++i) {
    int a = cyc[i], b = cyc[(i + 1) % k];
    EdgeId e{std::min(a, b), std::max(a, b)};
    if (in_m(e) != ((i % 2 == 0) == first))
      throw CellNotAlternating("cell at face " + std::to_string(c.face_id));
  }
  Matching out;
  std::set_symmetric_difference(m.begin(), m.end(), c.edge_set.begin(),
                                c.edge_set.end(), std::back_inserter(out));
  return out;
}

}  // namespace matchlat
