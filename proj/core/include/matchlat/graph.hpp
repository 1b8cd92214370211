#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace matchlat {

// Simple undirected graph on 0..n-1 with optional display labels.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted
  std::vector<std::string> labels;         // empty or size n

  void add_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  void normalize() {
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{a, b});
  }
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }
  std::string label(int v) const {
    return labels.empty() ? std::to_string(v) : labels[v];
  }
};

// Multigraph: loops and parallel edges allowed, edges kept as given.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;

  std::vector<int> degrees() const {
    std::vector<int> d(n, 0);
    for (auto [a, b] : edges) {
      d[a]++;
      d[b]++;  // a loop contributes 2
    }
    return d;
  }
  std::string label(int v) const {
    return labels.empty() ? std::to_string(v) : labels[v];
  }
};

}  // namespace matchlat
