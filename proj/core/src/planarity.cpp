#include "matchlat/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "matchlat/errors.hpp"

namespace matchlat {

namespace {

using Edge = std::pair<int, int>;

// Demoucron's incremental face-embedding test for a biconnected graph,
// given as an adjacency structure on vertex set `verts`.
bool demoucron(const std::vector<Edge>& edges) {
  std::set<int> vset;
  for (auto [a, b] : edges) {
    vset.insert(a);
    vset.insert(b);
  }
  const int nv = static_cast<int>(vset.size());
  const int ne = static_cast<int>(edges.size());
  if (nv <= 4) return true;
  if (ne > 3 * nv - 6) return false;

  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // find any cycle by DFS
  std::vector<int> cycle;
  {
    std::map<int, int> parent;
    std::function<bool(int, int)> dfs = [&](int v, int par) {
      parent[v] = par;
      for (int w : adj[v]) {
        if (w == par) continue;
        if (parent.count(w)) {
          // back edge w..v
          cycle.clear();
          int x = v;
          while (x != w) {
            cycle.push_back(x);
            x = parent[x];
          }
          cycle.push_back(w);
          return true;
        }
        if (dfs(w, v)) return true;
      }
      return false;
    };
    dfs(*vset.begin(), -1);
  }
  if (cycle.empty()) return true;  // forest, unreachable for blocks

  std::set<int> h_verts(cycle.begin(), cycle.end());
  std::set<Edge> h_edges;
  auto norm = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (std::size_t i = 0; i < cycle.size(); ++i)
    h_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::vector<std::vector<int>> faces{cycle, {cycle.rbegin(), cycle.rend()}};

  struct Fragment {
    std::vector<Edge> edges;
    std::set<int> attachments;
    std::set<int> interior;  // vertices outside H
  };

  while (true) {
    // fragments: chords, and components of G - V(H) with their edges to H
    std::vector<Fragment> frags;
    for (auto [a, b] : edges) {
      if (h_edges.count(norm(a, b))) continue;
      if (h_verts.count(a) && h_verts.count(b)) {
        Fragment f;
        f.edges.push_back(norm(a, b));
        f.attachments = {a, b};
        frags.push_back(std::move(f));
      }
    }
    {
      std::set<int> outside;
      for (int v : vset)
        if (!h_verts.count(v)) outside.insert(v);
      std::set<int> seen;
      for (int s : outside) {
        if (seen.count(s)) continue;
        Fragment f;
        std::queue<int> q;
        q.push(s);
        seen.insert(s);
        f.interior.insert(s);
        while (!q.empty()) {
          int v = q.front();
          q.pop();
          for (int w : adj[v]) {
            if (h_verts.count(w)) {
              f.attachments.insert(w);
              f.edges.push_back(norm(v, w));
            } else if (!seen.count(w)) {
              seen.insert(w);
              f.interior.insert(w);
              q.push(w);
            } else if (f.interior.count(w) && v < w) {
              f.edges.push_back(norm(v, w));
            }
          }
        }
        // internal edges between interior vertices discovered above miss
        // pairs seen in the wrong order; recollect
        f.edges.clear();
        for (auto [a, b] : edges)
          if (f.interior.count(a) || f.interior.count(b))
            f.edges.push_back(norm(a, b));
        frags.push_back(std::move(f));
      }
    }
    if (frags.empty()) return true;

    // admissible faces per fragment
    std::vector<std::vector<int>> adm(frags.size());
    for (std::size_t i = 0; i < frags.size(); ++i) {
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::set<int> fv(faces[fi].begin(), faces[fi].end());
        if (std::all_of(frags[i].attachments.begin(),
                        frags[i].attachments.end(),
                        [&](int a) { return fv.count(a) > 0; }))
          adm[i].push_back(static_cast<int>(fi));
      }
      if (adm[i].empty()) return false;
    }
    std::size_t pick = 0;
    for (std::size_t i = 0; i < frags.size(); ++i)
      if (adm[i].size() == 1) {
        pick = i;
        break;
      }
    const Fragment& fr = frags[pick];
    int face_id = adm[pick][0];

    // a path through the fragment between two distinct attachments, with
    // interior outside H
    auto it = fr.attachments.begin();
    int u = *it;
    std::vector<int> path;
    {
      std::map<int, std::vector<int>> fadj;
      for (auto [a, b] : fr.edges) {
        fadj[a].push_back(b);
        fadj[b].push_back(a);
      }
      std::map<int, int> par;
      std::queue<int> q;
      q.push(u);
      par[u] = -1;
      int reached = -1;
      while (!q.empty() && reached < 0) {
        int v = q.front();
        q.pop();
        for (int w : fadj[v]) {
          if (par.count(w)) continue;
          if (h_verts.count(w)) {
            if (w != u && fr.attachments.count(w)) {
              par[w] = v;
              reached = w;
              break;
            }
            continue;  // other H vertices are walls
          }
          par[w] = v;
          q.push(w);
        }
      }
      if (reached < 0) throw InvariantError("fragment path not found");
      for (int x = reached; x != -1; x = par[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());  // u .. reached
    }

    // embed the path, splitting the chosen face
    std::vector<int> F = faces[face_id];
    auto pos = [&](int v) {
      return static_cast<int>(std::find(F.begin(), F.end(), v) - F.begin());
    };
    int iu = pos(path.front()), iv = pos(path.back());
    const int fn = static_cast<int>(F.size());
    std::vector<int> walkA, walkB;
    for (int i = iu;; i = (i + 1) % fn) {
      walkA.push_back(F[i]);
      if (i == iv) break;
    }
    for (int i = iv;; i = (i + 1) % fn) {
      walkB.push_back(F[i]);
      if (i == iu) break;
    }
    std::vector<int> f1 = walkA;  // u..v along F, then path interior v->u
    for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i)
      f1.push_back(path[i]);
    std::vector<int> f2 = walkB;  // v..u along F, then path interior u->v
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      f2.push_back(path[i]);
    faces[face_id] = std::move(f1);
    faces.push_back(std::move(f2));
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      h_edges.insert(norm(path[i], path[i + 1]));
    for (int v : path) h_verts.insert(v);
  }
}

// biconnected components as edge lists
std::vector<std::vector<Edge>> blocks(const SimpleGraph& g) {
  std::vector<std::vector<Edge>> out;
  auto adj = g.adjacency();
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<Edge> stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        stack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> blk;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            blk.push_back(e);
            if (e == Edge{v, w}) break;
          }
          out.push_back(std::move(blk));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return out;
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
  SimpleGraph h = g;
  h.normalize();
  for (const auto& blk : blocks(h))
    if (!demoucron(blk)) return false;
  return true;
}

WitnessSubgraph kuratowski_witness(const SimpleGraph& g) {
  if (is_planar(g)) throw GraphIsPlanar();
  SimpleGraph cur = g;
  cur.normalize();
  // greedy deletion preserving non-planarity
  for (std::size_t i = 0; i < cur.edges.size();) {
    SimpleGraph t = cur;
    t.edges.erase(t.edges.begin() + static_cast<long>(i));
    if (!is_planar(t))
      cur = std::move(t);
    else
      ++i;
  }

  WitnessSubgraph w;
  w.edges = cur.edges;

  // suppress degree-2 vertices on a working copy
  std::map<int, std::set<int>> adj;
  for (auto [a, b] : cur.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, nb] : adj) {
      if (nb.size() != 2) continue;
      auto it = nb.begin();
      int a = *it++, b = *it;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj.erase(v);
      changed = true;
      break;
    }
  }
  for (auto& [v, nb] : adj) w.branch_vertices.push_back(v);
  std::sort(w.branch_vertices.begin(), w.branch_vertices.end());

  const std::size_t bn = adj.size();
  bool k5 = bn == 5 && std::all_of(adj.begin(), adj.end(), [](auto& p) {
              return p.second.size() == 4;
            });
  bool k33 = false;
  if (bn == 6 && std::all_of(adj.begin(), adj.end(),
                             [](auto& p) { return p.second.size() == 3; })) {
    std::set<int> b_side = adj.begin()->second;
    std::set<int> a_side;
    for (auto& [v, nb] : adj)
      if (!b_side.count(v)) a_side.insert(v);
    k33 = std::all_of(adj.begin(), adj.end(), [&](auto& p) {
      return b_side.count(p.first) ? p.second == a_side : p.second == b_side;
    });
  }
  if (k5)
    w.kind = WitnessKind::K5Subdivision;
  else if (k33)
    w.kind = WitnessKind::K33Subdivision;
  else
    throw InvariantError("minimal non-planar subgraph is not a Kuratowski "
                         "subdivision");
  return w;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  g.normalize();
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g;
  g.n = a + b;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  g.normalize();
  return g;
}

SimpleGraph hasse_graph(const Poset& p) {
  SimpleGraph g;
  g.n = p.size();
  g.labels = p.labels();
  for (auto [a, b] : p.covers()) g.add_edge(a, b);
  g.normalize();
  return g;
}

}  // namespace matchlat
