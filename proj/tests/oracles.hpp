#pragma once

// Deliberately naive reference implementations used to cross-check the
// real engines. Keep these dumb: no pruning, no shared code with core.

#include <cstdint>
#include <set>
#include <vector>

#include "matchlat/lattice.hpp"
#include "matchlat/matching.hpp"
#include "matchlat/plane_graph.hpp"
#include "matchlat/poset.hpp"

namespace oracles {

// Every perfect matching by trying all 2^E edge subsets.
inline std::vector<matchlat::Matching> perfect_matchings(
    const matchlat::PlaneGraph& g) {
  const auto& edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  std::vector<matchlat::Matching> out;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::set<int> covered;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (mask >> i & 1)
        ok = covered.insert(edges[i].first).second &&
             covered.insert(edges[i].second).second;
    if (ok && static_cast<int>(covered.size()) == g.n()) {
      matchlat::Matching pm;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) pm.push_back(edges[i]);
      out.push_back(pm);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of up-closed subsets of p by trying all 2^n subsets.
inline std::uint64_t count_up_sets(const matchlat::Poset& p) {
  const int n = p.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      if (mask >> a & 1)
        for (int b = 0; b < n && closed; ++b)
          if (p.leq(a, b) && !(mask >> b & 1)) closed = false;
    if (closed) ++count;
  }
  return count;
}

// Distributivity by checking the law on every triple.
inline bool distributive(const matchlat::Lattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

}  // namespace oracles
