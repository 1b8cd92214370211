#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "matchlat/dot.hpp"
#include "matchlat/errors.hpp"
#include "matchlat/fixtures.hpp"
#include "matchlat/json_io.hpp"
#include "matchlat/planarity.hpp"
#include "matchlat/screen.hpp"
#include "matchlat/z_transform.hpp"

using namespace matchlat;

namespace {

struct CommonOpts {
  std::string input_file;
  std::string fixture;
  std::string json_out;
  std::string dot_out;
  std::uint64_t seed = 42;
  std::int64_t max_size = 1'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_dot = true) {
  cmd->add_option("input", o.input_file, "input file (JSON)");
  cmd->add_option("--fixture", o.fixture, "built-in fixture name");
  cmd->add_option("--json", o.json_out, "write the report to this file");
  if (with_dot) cmd->add_option("--dot", o.dot_out, "write a DOT export");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_option("--max-size", o.max_size, "size guard for enumerations");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// (digest, parsed payload or fixture marker)
struct Input {
  std::string digest;
  std::optional<Json> json;  // set when read from a file
  std::string fixture;       // set when --fixture was used
};

Input load_input(const CommonOpts& o) {
  if (o.input_file.empty() == o.fixture.empty())
    throw ValidationError("provide exactly one of an input file or --fixture");
  Input in;
  if (!o.fixture.empty()) {
    in.fixture = o.fixture;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)fnv1a("fixture:" + o.fixture));
    in.digest = buf;
    return in;
  }
  std::string raw = slurp(o.input_file);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(raw));
  in.digest = buf;
  try {
    in.json = Json::parse(raw);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return in;
}

PlaneGraph input_plane_graph(const Input& in, std::int64_t max_size) {
  PlaneGraph g = in.json ? PlaneGraph::build(graph_input_from_json(*in.json))
                         : fixtures::graph_by_name(in.fixture);
  if (g.n() > max_size)
    throw TooLarge("graph exceeds --max-size " + std::to_string(max_size));
  return g;
}

Poset input_poset(const Input& in) {
  if (in.json) return poset_from_json(*in.json);
  return fixtures::poset_by_name(in.fixture);
}

void emit(const Json& report, const CommonOpts& o) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + o.json_out);
    out << text;
  }
}

void emit_dot(const std::string& dot, const CommonOpts& o) {
  if (o.dot_out.empty()) return;
  std::ofstream out(o.dot_out, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + o.dot_out);
  out << dot;
}

Json report_head(const std::string& command, const Input& in) {
  Json j;
  j["command"] = command;
  j["input_digest"] = in.digest;
  if (!in.fixture.empty()) j["fixture"] = in.fixture;
  return j;
}

void cmd_matchings(const CommonOpts& o) {
  Input in = load_input(o);
  PlaneGraph g = input_plane_graph(in, o.max_size);
  Json j = report_head("matchings", in);
  auto pms = enumerate_perfect_matchings(g);
  j["count"] = pms.size();
  Json list = Json::array();
  for (const Matching& m : pms) {
    Json e;
    e["matching"] = matching_to_json(m);
    e["label"] = matching_label(m);
    e["cells"] = classification_to_json(classify_cells(g, m));
    list.push_back(e);
  }
  j["matchings"] = list;
  emit(j, o);
}

void cmd_lattice(const CommonOpts& o) {
  Input in = load_input(o);
  PlaneGraph g = input_plane_graph(in, o.max_size);
  Json j = report_head("lattice", in);
  ZDigraph z = build_z_digraph(g);
  Lattice l = matching_lattice(g);
  j["nodes"] = z.nodes.size();
  Json arcs = Json::array();
  for (const auto& a : z.arcs) {
    Json aj;
    aj["from"] = matching_label(z.nodes[a.tail]);
    aj["to"] = matching_label(z.nodes[a.head]);
    aj["cell"] = a.cell_face_id;
    arcs.push_back(aj);
  }
  j["arcs"] = arcs;
  j["lattice"] = lattice_to_json(l);
  auto [top, bottom] = extremal_matchings(g);
  j["top"] = matching_label(top);
  j["bottom"] = matching_label(bottom);
  Json cuts = Json::array();
  for (const Matching& m : z_cut_vertices(g)) cuts.push_back(matching_label(m));
  j["cut_vertices"] = cuts;
  Json mi = Json::array();
  for (int x : l.meet_irreducibles()) mi.push_back(l.label(x));
  j["meet_irreducibles"] = mi;
  emit(j, o);
  emit_dot(dot_z_digraph(z), o);
}

void cmd_filters(const CommonOpts& o) {
  Input in = load_input(o);
  Poset p = input_poset(in);
  Json j = report_head("filters", in);
  Lattice f = filters(p, static_cast<std::size_t>(o.max_size));
  j["poset_size"] = p.size();
  j["lattice_size"] = f.size();
  j["meet_irreducibles"] = f.meet_irreducibles().size();
  j["join_irreducibles"] = f.join_irreducibles().size();
  j["distributive"] = f.is_distributive();
  j["birkhoff_roundtrip"] = iso(birkhoff(f), p).has_value();
  j["lattice"] = lattice_to_json(f);
  emit(j, o);
  emit_dot(dot_hasse(f.poset()), o);
}

void cmd_screen(const CommonOpts& o, bool as_lattice) {
  Input in = load_input(o);
  Json j = report_head("screen", in);
  Lattice l = as_lattice ? Lattice::from_poset(input_poset(in))
                         : filters(input_poset(in),
                                   static_cast<std::size_t>(o.max_size));
  j["mode"] = as_lattice ? "lattice" : "filters-of-poset";
  j["lattice_size"] = l.size();
  ScreenVerdict v = screen(l);
  validate_certificate(l, v);
  j["verdict"] = verdict_to_json(v);
  emit(j, o);
  emit_dot(dot_hasse(l.poset()), o);
}

void cmd_planarity(const CommonOpts& o) {
  Input in = load_input(o);
  SimpleGraph g;
  if (in.json) {
    g = simple_graph_from_json(*in.json);
  } else if (in.fixture == "sstar") {
    g = fixtures::sstar();
  } else if (in.fixture == "k5") {
    g = complete_graph(5);
  } else if (in.fixture == "k4") {
    g = complete_graph(4);
  } else if (in.fixture == "k33") {
    g = complete_bipartite(3, 3);
  } else {
    throw ValidationError("unknown planarity fixture: " + in.fixture);
  }
  Json j = report_head("planarity", in);
  bool planar = is_planar(g);
  j["planar"] = planar;
  if (!planar) {
    WitnessSubgraph w = kuratowski_witness(g);
    Json wj;
    wj["kind"] = w.kind == WitnessKind::K5Subdivision ? "K5Subdivision"
                                                      : "K33Subdivision";
    Json edges = Json::array();
    for (auto [a, b] : w.edges) edges.push_back({a, b});
    wj["edges"] = edges;
    Json branches = Json::array();
    for (int v : w.branch_vertices) branches.push_back(g.label(v));
    wj["branch_vertices"] = branches;
    j["witness"] = wj;
  }
  emit(j, o);
  emit_dot(dot_simple_graph(g), o);
}

// the full property sweep over one plane graph; throws on violation
void verify_graph(const std::string& name, const PlaneGraph& g,
                  std::mt19937_64& rng, Json& out) {
  Lattice l = matching_lattice(g);
  auto pms = enumerate_perfect_matchings(g);
  for (const Matching& m : pms) {
    std::vector<Cell> proper, improper;
    for (const Cell& c : g.cells()) {
      CellStatus s = classify_cell(g, m, c);
      if (s == CellStatus::Proper) proper.push_back(c);
      if (s == CellStatus::Improper) improper.push_back(c);
    }
    for (auto* fam : {&proper, &improper})
      for (size_t i = 0; i < fam->size(); ++i)
        for (size_t j = i + 1; j < fam->size(); ++j)
          if ((*fam)[i].shares_vertex((*fam)[j]))
            throw InvariantError(name + ": same-status cells intersect");
    int mi = l.poset().index(matching_label(m));
    for (const auto& [mask, corner] : hypercube_of(g, m, improper).corners)
      if (!l.leq(mi, l.poset().index(matching_label(corner))))
        throw InvariantError(name + ": improper hypercube not above M");
    for (const auto& [mask, corner] : hypercube_of(g, m, proper).corners)
      if (!l.leq(l.poset().index(matching_label(corner)), mi))
        throw InvariantError(name + ": proper hypercube not below M");
    for (const Cell& c : proper) {
      MictReport r = mict_check(g, m, c);
      if (r.cond_a != r.cond_b || r.cond_b != r.cond_c)
        throw InvariantError(name + ": mict conditions disagree");
    }
  }
  Lattice d = matching_lattice(g.with_swapped_colors());
  if (!iso(d.poset(), l.poset().dual()).has_value())
    throw InvariantError(name + ": color swap did not dualize the lattice");
  if (screen(l).status != ScreenVerdict::Status::NotFlagged)
    throw InvariantError(name + ": matching lattice was flagged");
  if (!iso(filters(birkhoff(l)).poset(), l.poset()).has_value())
    throw InvariantError(name + ": birkhoff round-trip failed");

  // seeded random walk: flipping a proper cell must follow a lattice cover
  Matching cur = pms[std::uniform_int_distribution<size_t>(
      0, pms.size() - 1)(rng)];
  for (int step = 0; step < 32; ++step) {
    std::vector<const Cell*> props;
    for (const Cell& c : g.cells())
      if (classify_cell(g, cur, c) == CellStatus::Proper) props.push_back(&c);
    if (props.empty()) break;
    const Cell* pick = props[std::uniform_int_distribution<size_t>(
        0, props.size() - 1)(rng)];
    Matching next = flip(cur, *pick);
    int a = l.poset().index(matching_label(next));
    int b = l.poset().index(matching_label(cur));
    bool is_cover = false;
    for (int u : l.poset().upper_covers(a)) is_cover |= u == b;
    if (!is_cover)
      throw InvariantError(name + ": proper flip is not a lattice cover");
    cur = next;
  }

  Json entry;
  entry["name"] = name;
  entry["matchings"] = pms.size();
  entry["cells"] = g.cells().size();
  entry["ok"] = true;
  out.push_back(entry);
}

int cmd_corpus_verify(const CommonOpts& o) {
  std::mt19937_64 rng(o.seed);
  Json j;
  j["command"] = "corpus-verify";
  Json results = Json::array();
  const char* dir = std::getenv("MATCHLAT_CORPUS_DIR");
  if (dir && *dir) {
    j["corpus_dir"] = dir;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw ValidationError(std::string("no .json graphs in ") + dir);
    std::string digest_src;
    for (const auto& f : files) digest_src += slurp(f.string());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)fnv1a(digest_src));
    j["input_digest"] = buf;
    for (const auto& f : files) {
      Json gj = Json::parse(slurp(f.string()));
      PlaneGraph g = PlaneGraph::build(graph_input_from_json(gj));
      verify_graph(f.filename().string(), g, rng, results);
    }
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)fnv1a("builtin-corpus"));
    j["input_digest"] = buf;
    for (const auto& [name, g] : fixtures::corpus())
      verify_graph(name, g, rng, results);
  }
  j["results"] = results;
  j["all_ok"] = true;
  emit(j, o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching lattices of plane bipartite graphs"};
  app.require_subcommand(1);

  CommonOpts mo, lo, fo, so, po, co;
  bool screen_as_lattice = false;

  auto* matchings =
      app.add_subcommand("matchings", "enumerate and classify matchings");
  add_common(matchings, mo);
  auto* lattice = app.add_subcommand("lattice", "Z digraph and lattice");
  add_common(lattice, lo);
  auto* filters_cmd = app.add_subcommand("filters", "filter lattice of a poset");
  add_common(filters_cmd, fo);
  auto* screen_cmd =
      app.add_subcommand("screen", "non-matchability screen");
  add_common(screen_cmd, so);
  screen_cmd->add_flag("--lattice", screen_as_lattice,
                       "treat the input poset as the lattice itself");
  auto* planarity =
      app.add_subcommand("planarity", "planarity verdict and witness");
  add_common(planarity, po);
  auto* corpus =
      app.add_subcommand("corpus-verify", "property sweep over the corpus");
  corpus->add_option("--json", co.json_out, "write the report to this file");
  corpus->add_option("--seed", co.seed, "seed for randomized checks");
  corpus->add_option("--max-size", co.max_size, "size guard for enumerations");

  try {
    app.parse(argc, argv);
    if (matchings->parsed()) cmd_matchings(mo);
    if (lattice->parsed()) cmd_lattice(lo);
    if (filters_cmd->parsed()) cmd_filters(fo);
    if (screen_cmd->parsed()) cmd_screen(so, screen_as_lattice);
    if (planarity->parsed()) cmd_planarity(po);
    if (corpus->parsed()) cmd_corpus_verify(co);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
