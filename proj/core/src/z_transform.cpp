#include "matchlat/z_transform.hpp"

#include <algorithm>
#include <functional>

#include "matchlat/errors.hpp"

namespace matchlat {

std::string matching_label(const Matching& m) {
  std::string s;
  for (auto [a, b] : m)
    s += "(" + std::to_string(a) + "-" + std::to_string(b) + ")";
  return s;
}

int ZDigraph::node_index(const Matching& m) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), m);
  if (it == nodes.end() || *it != m) return -1;
  return static_cast<int>(it - nodes.begin());
}

ZDigraph build_z_digraph(const PlaneGraph& g) {
  ZDigraph z;
  z.nodes = enumerate_perfect_matchings(g);
  if (z.nodes.empty()) throw NoPerfectMatching();
  for (int i = 0; i < static_cast<int>(z.nodes.size()); ++i) {
    for (const Cell& c : g.cells()) {
      if (classify_cell(g, z.nodes[i], c) != CellStatus::Proper) continue;
      int j = z.node_index(flip(z.nodes[i], c));
      if (j < 0) throw InvariantError("flip left the matching set");
      z.arcs.push_back({i, j, c.face_id});
    }
  }
  std::sort(z.arcs.begin(), z.arcs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.tail, a.head, a.cell_face_id) <
           std::tie(b.tail, b.head, b.cell_face_id);
  });
  return z;
}

Poset matching_order(const ZDigraph& z) {
  std::vector<std::string> labels;
  for (const Matching& m : z.nodes) labels.push_back(matching_label(m));
  std::vector<std::pair<int, int>> rel;  // (lower, upper)
  for (const auto& a : z.arcs) rel.emplace_back(a.head, a.tail);
  return Poset::from_indices(std::move(labels), std::move(rel));
}

Lattice matching_lattice(const PlaneGraph& g) {
  ZDigraph z = build_z_digraph(g);
  Poset order = matching_order(z);
  Lattice l = [&] {
    try {
      return Lattice::from_poset(std::move(order));
    } catch (const NotALattice& e) {
      // guaranteed impossible on valid inputs
      throw InvariantError(std::string("matching order is not a lattice: ") +
                           e.what());
    }
  }();
  if (!l.is_distributive())
    throw InvariantError("matching lattice is not distributive");
  std::vector<std::pair<int, int>> arc_pairs;
  for (const auto& a : z.arcs) arc_pairs.emplace_back(a.head, a.tail);
  std::sort(arc_pairs.begin(), arc_pairs.end());
  arc_pairs.erase(std::unique(arc_pairs.begin(), arc_pairs.end()),
                  arc_pairs.end());
  if (arc_pairs != l.poset().covers())
    throw HasseMismatch("Hasse diagram differs from the Z digraph arc set");
  return l;
}

namespace {

std::vector<Cell> cells_with_status(const PlaneGraph& g, const Matching& m,
                                    CellStatus want) {
  std::vector<Cell> out;
  for (const Cell& c : g.cells())
    if (classify_cell(g, m, c) == want) out.push_back(c);
  return out;
}

}  // namespace

std::pair<Matching, Matching> extremal_matchings(const PlaneGraph& g) {
  ZDigraph z = build_z_digraph(g);
  Lattice l = matching_lattice(g);
  std::vector<int> tops, bottoms;
  for (int i = 0; i < static_cast<int>(z.nodes.size()); ++i) {
    if (cells_with_status(g, z.nodes[i], CellStatus::Improper).empty())
      tops.push_back(i);
    if (cells_with_status(g, z.nodes[i], CellStatus::Proper).empty())
      bottoms.push_back(i);
  }
  if (tops.size() != 1 || bottoms.size() != 1)
    throw InvariantError("extremal matchings are not unique");
  if (l.label(l.top()) != matching_label(z.nodes[tops[0]]) ||
      l.label(l.bottom()) != matching_label(z.nodes[bottoms[0]]))
    throw InvariantError("extremal matchings disagree with the lattice");
  return {z.nodes[tops[0]], z.nodes[bottoms[0]]};
}

HypercubeSublattice hypercube_of(const PlaneGraph& g, const Matching& m,
                                 const std::vector<Cell>& generator_cells) {
  if (!is_perfect_matching(g, m)) throw NotAPerfectMatching();
  const int k = static_cast<int>(generator_cells.size());
  std::vector<CellStatus> status;
  for (const Cell& c : generator_cells) {
    CellStatus s = classify_cell(g, m, c);
    if (s == CellStatus::NotAlternating)
      throw CellNotAlternating("generator at face " +
                               std::to_string(c.face_id));
    status.push_back(s);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (generator_cells[i].shares_vertex(generator_cells[j]))
        throw CellsNotDisjoint("faces " +
                               std::to_string(generator_cells[i].face_id) +
                               " and " +
                               std::to_string(generator_cells[j].face_id));

  HypercubeSublattice q;
  q.anchor = m;
  for (const Cell& c : generator_cells) q.generator_face_ids.push_back(c.face_id);
  for (std::uint64_t s = 0; s < (1ULL << k); ++s) {
    Matching cur = m;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) {
        Matching nxt;
        std::set_symmetric_difference(
            cur.begin(), cur.end(), generator_cells[i].edge_set.begin(),
            generator_cells[i].edge_set.end(), std::back_inserter(nxt));
        cur = std::move(nxt);
      }
    if (!is_perfect_matching(g, cur))
      throw InvariantError("hypercube corner is not a perfect matching");
    q.corners[s] = std::move(cur);
  }

  // the induced suborder must be Boolean of dimension k: proper flips
  // descend, improper flips ascend
  Lattice l = matching_lattice(g);
  auto node = [&](const Matching& mm) {
    int i = l.poset().index(matching_label(mm));
    if (i < 0) throw InvariantError("hypercube corner missing from lattice");
    return i;
  };
  std::uint64_t proper_mask = 0;
  for (int i = 0; i < k; ++i)
    if (status[i] == CellStatus::Proper) proper_mask |= (1ULL << i);
  for (auto& [s1, m1] : q.corners)
    for (auto& [s2, m2] : q.corners) {
      bool expect = ((s1 & proper_mask) | (s2 & proper_mask)) == (s1 & proper_mask) &&
                    ((s1 & ~proper_mask) & ~s2) == 0;
      if (l.leq(node(m1), node(m2)) != expect)
        throw InvariantError("hypercube suborder is not Boolean");
    }
  return q;
}

std::vector<Cell> meet_irreducible_cells(const PlaneGraph& g,
                                         const Matching& m) {
  if (!is_perfect_matching(g, m)) throw NotAPerfectMatching();
  std::vector<Cell> out;
  for (const Cell& c : cells_with_status(g, m, CellStatus::Proper)) {
    // M (+) f is meet-irreducible iff it has exactly one improper cell
    Matching flipped = flip(m, c);
    if (cells_with_status(g, flipped, CellStatus::Improper).size() == 1)
      out.push_back(c);
  }
  return out;
}

MictReport mict_check(const PlaneGraph& g, const Matching& m, const Cell& f) {
  if (classify_cell(g, m, f) != CellStatus::Proper)
    throw NotProperCell("face " + std::to_string(f.face_id));
  MictReport r;
  r.matching = m;
  r.cell_face_id = f.face_id;

  std::vector<Cell> improper = cells_with_status(g, m, CellStatus::Improper);
  r.case1 = improper.empty();

  Lattice l = matching_lattice(g);
  int flipped = l.poset().index(matching_label(flip(m, f)));
  r.cond_a = l.poset().upper_covers(flipped).size() == 1;

  r.cond_b = std::all_of(improper.begin(), improper.end(), [&](const Cell& c) {
    return f.shares_vertex(c);
  });

  HypercubeSublattice q = hypercube_of(g, m, improper);
  r.cond_c = true;
  for (auto& [s, corner] : q.corners) {
    if (s == 0) continue;
    if (classify_cell(g, corner, f) == CellStatus::Proper) r.cond_c = false;
  }

  if (r.case1) {
    if (!r.cond_a) throw InvariantError("mict: case1 without cond_a");
  } else if (r.cond_a != r.cond_b || r.cond_b != r.cond_c) {
    throw InvariantError("mict: equivalence failed at face " +
                         std::to_string(f.face_id));
  }
  return r;
}

std::vector<Matching> z_cut_vertices(const PlaneGraph& g) {
  ZDigraph z = build_z_digraph(g);
  const int n = static_cast<int>(z.nodes.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : z.arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  // articulation points by DFS low-link
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) cut[v] = 1;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) cut[v] = 1;
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);

  // cross-validate against the cell condition
  for (int v = 0; v < n; ++v) {
    auto proper = cells_with_status(g, z.nodes[v], CellStatus::Proper);
    auto improper = cells_with_status(g, z.nodes[v], CellStatus::Improper);
    bool cond = !proper.empty() && !improper.empty();
    if (cond)
      for (const Cell& p : proper)
        for (const Cell& i : improper)
          if (!p.shares_vertex(i)) cond = false;
    if (cond != static_cast<bool>(cut[v]))
      throw InvariantError("cut-vertex condition disagrees at " +
                           matching_label(z.nodes[v]));
  }

  std::vector<Matching> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(z.nodes[v]);
  return out;
}

}  // namespace matchlat
