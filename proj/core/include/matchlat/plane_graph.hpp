#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matchlat/geometry.hpp"
#include "matchlat/graph.hpp"

namespace matchlat {

enum class Color { Black, White };

using EdgeId = std::pair<int, int>;  // vertex ids, first < second

struct HalfEdge {
  int from, to;  // vertex ids
  bool operator==(const HalfEdge& o) const {
    return from == o.from && to == o.to;
  }
};

struct Face {
  int id = -1;
  std::vector<HalfEdge> walk;  // cyclic boundary walk
  bool is_outer = false;
};

// An inner face whose boundary is a simple cycle, stored clockwise
// (negative shoelace area, x-right / y-up axes).
struct Cell {
  int face_id = -1;
  std::vector<int> cycle;  // vertex ids, clockwise
  std::vector<EdgeId> edge_set;

  bool contains_vertex(int v) const;
  bool contains_edge(EdgeId e) const;
  bool shares_vertex(const Cell& o) const;
  bool shares_edge(const Cell& o) const;
};

struct GraphInput {
  struct V {
    int id;
    Rat x, y;
  };
  std::vector<V> vertices;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> white_anchor;
};

class PlaneGraph {
 public:
  static PlaneGraph build(const GraphInput& in);

  int n() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& vertex_ids() const { return ids_; }
  int index_of(int id) const;  // throws DanglingEndpoint on unknown id
  const Point& position(int id) const { return pos_[index_of(id)]; }
  Color color(int id) const { return color_[index_of(id)]; }
  const std::vector<EdgeId>& edge_list() const { return edges_; }
  bool has_edge(int a, int b) const;
  // neighbor ids in counterclockwise rotation order
  const std::vector<int>& neighbors(int id) const {
    return rotation_[index_of(id)];
  }

  const std::vector<Face>& faces() const { return faces_; }
  int outer_face_id() const { return outer_face_id_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell_by_face(int face_id) const;

  int component_count() const { return components_; }
  bool connected() const { return components_ == 1; }

  int white_anchor() const { return white_anchor_; }
  // Same embedding, colors swapped (anchor moved to a black vertex).
  PlaneGraph with_swapped_colors() const;

 private:
  std::vector<int> ids_;  // sorted
  std::vector<Point> pos_;
  std::vector<Color> color_;
  std::vector<EdgeId> edges_;                // canonical, sorted
  std::vector<std::vector<int>> rotation_;   // CCW neighbor ids
  std::vector<Face> faces_;
  std::vector<Cell> cells_;
  int outer_face_id_ = -1;
  int components_ = 0;
  int white_anchor_ = -1;
  std::vector<int> comp_of_;  // per vertex index

  GraphInput to_input() const;
  friend class PlaneGraphBuilder;
};

std::vector<Cell> cells(const PlaneGraph& g);

Multigraph geometric_dual(const PlaneGraph& g);

enum class IntersectMode { ShareVertex, ShareEdge };

// Simple graph on the chosen cells (identified by face id).
SimpleGraph cell_intersection_graph(const PlaneGraph& g,
                                    const std::vector<int>& cell_face_ids,
                                    IntersectMode mode);

}  // namespace matchlat
