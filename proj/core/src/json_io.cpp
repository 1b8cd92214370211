#include "matchlat/json_io.hpp"

#include <set>

#include "matchlat/errors.hpp"

namespace matchlat {

namespace {

Rat coord(const Json& v) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw ParseError("coordinate must be a decimal string or integer");
}

}  // namespace

GraphInput graph_input_from_json(const Json& j) {
  GraphInput in;
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'vertices' and 'edges'");
  for (const auto& v : j.at("vertices")) {
    if (!v.contains("id") || !v.contains("x") || !v.contains("y"))
      throw ParseError("vertex needs id, x, y");
    in.vertices.push_back({v.at("id").get<int>(), coord(v.at("x")),
                           coord(v.at("y"))});
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    in.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("white_anchor")) in.white_anchor = j.at("white_anchor").get<int>();
  return in;
}

Json graph_input_to_json(const GraphInput& in) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : in.vertices)
    j["vertices"].push_back(
        {{"id", v.id}, {"x", format_rat(v.x)}, {"y", format_rat(v.y)}});
  j["edges"] = Json::array();
  for (auto [a, b] : in.edges) j["edges"].push_back({a, b});
  if (in.white_anchor) j["white_anchor"] = *in.white_anchor;
  return j;
}

SimpleGraph simple_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges"))
    throw ParseError("graph JSON needs 'edges'");
  std::set<int> ids;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices"))
      ids.insert(v.is_object() ? v.at("id").get<int>() : v.get<int>());
  std::vector<std::pair<int, int>> raw;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    raw.emplace_back(e[0].get<int>(), e[1].get<int>());
    ids.insert(raw.back().first);
    ids.insert(raw.back().second);
  }
  SimpleGraph g;
  std::vector<int> order(ids.begin(), ids.end());
  g.n = static_cast<int>(order.size());
  for (int id : order) g.labels.push_back(std::to_string(id));
  auto idx = [&](int id) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), id) -
                            order.begin());
  };
  for (auto [a, b] : raw) g.add_edge(idx(a), idx(b));
  g.normalize();
  return g;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw ParseError("poset JSON needs 'elements' and 'covers'");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw ParseError("cover must be a [lower, upper] pair");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  try {
    return Poset(std::move(labels), std::move(covers));
  } catch (const CyclicOrder& e) {
    throw ParseError(std::string("not a poset: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  j["covers"] = Json::array();
  for (auto [lo, hi] : p.covers())
    j["covers"].push_back({p.label(lo), p.label(hi)});
  return j;
}

Json matching_to_json(const Matching& m) {
  Json j = Json::array();
  for (auto [a, b] : m) j.push_back({a, b});
  return j;
}

Json classification_to_json(const std::vector<CellClassification>& cls) {
  Json j = Json::object();
  for (const auto& c : cls) {
    const char* s = c.status == CellStatus::Proper     ? "proper"
                    : c.status == CellStatus::Improper ? "improper"
                                                       : "none";
    j[std::to_string(c.face_id)] = s;
  }
  return j;
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["elements"] = l.poset().labels();
  j["covers"] = Json::array();
  for (auto [lo, hi] : l.poset().covers())
    j["covers"].push_back({l.label(lo), l.label(hi)});
  j["top"] = l.label(l.top());
  j["bottom"] = l.label(l.bottom());
  return j;
}

Json verdict_to_json(const ScreenVerdict& v) {
  Json j;
  j["status"] = v.status == ScreenVerdict::Status::NonMatchable
                    ? "non-matchable"
                    : "not-flagged";
  j["reason"] = reason_string(v.reason);
  if (v.k33) {
    Json w;
    w["element"] = v.k33->element;
    w["upper_covers"] = v.k33->upper_covers;
    w["meet_irreducible_lower_covers"] = v.k33->meet_irreducible_lower_covers;
    w["on_dual"] = v.k33->on_dual;
    j["witness"] = w;
  }
  if (v.delta_embedding) {
    Json e = Json::object();
    for (const auto& [from, to] : *v.delta_embedding) e[from] = to;
    j["embedding"] = e;
  }
  if (!v.factor_path.empty()) {
    j["factor_path"] = v.factor_path;
    if (v.factor_verdict) j["factor"] = verdict_to_json(*v.factor_verdict);
  }
  return j;
}

Json face_report(const PlaneGraph& g) {
  Json j;
  j["faces"] = Json::array();
  for (const Face& f : g.faces()) {
    Json fj;
    fj["id"] = f.id;
    fj["outer"] = f.is_outer;
    Json walk = Json::array();
    for (const HalfEdge& h : f.walk) walk.push_back({h.from, h.to});
    fj["walk"] = walk;
    j["faces"].push_back(fj);
  }
  j["cells"] = Json::array();
  for (const Cell& c : g.cells()) {
    Json cj;
    cj["face_id"] = c.face_id;
    cj["cycle"] = c.cycle;
    j["cells"].push_back(cj);
  }
  j["outer_face_id"] = g.outer_face_id();
  return j;
}

}  // namespace matchlat
