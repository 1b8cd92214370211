#include "matchlat/dot.hpp"

#include <sstream>

namespace matchlat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dot_simple_graph(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.n; ++v)
    os << "  n" << v << " [label=" << quote(g.label(v)) << "];\n";
  for (auto [a, b] : g.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_multigraph(const Multigraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.n; ++v)
    os << "  n" << v << " [label=" << quote(g.label(v)) << "];\n";
  for (auto [a, b] : g.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_z_digraph(const ZDigraph& z) {
  std::ostringstream os;
  os << "digraph {\n";
  for (std::size_t i = 0; i < z.nodes.size(); ++i)
    os << "  n" << i << " [label=" << quote(matching_label(z.nodes[i]))
       << "];\n";
  for (const auto& a : z.arcs)
    os << "  n" << a.tail << " -> n" << a.head << " [label=\"f"
       << a.cell_face_id << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dot_hasse(const Poset& p) {
  std::ostringstream os;
  os << "digraph {\n  rankdir=BT;\n  edge [arrowhead=none];\n";
  for (int v = 0; v < p.size(); ++v)
    os << "  n" << v << " [label=" << quote(p.label(v)) << "];\n";
  for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace matchlat
