#include "vcst/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace vcst {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& why) {
  throw InvalidInstanceError("instance file: " + why);
}

// Strict schema: unknown keys are rejected so that typos fail loudly and
// canonical serialization is unambiguous.
void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known |= item.key() == k;
    if (!known) bad("unknown key '" + item.key() + "' in " + where);
  }
}

int get_int(const json& j, const char* what, int lo) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < lo || v > INT32_MAX) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::uint64_t get_u64(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  bad(std::string(what) + " must be a nonnegative integer");
}

Fixed get_fixed(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a decimal string");
  try {
    return Fixed::parse(j.get<std::string>());
  } catch (const InvalidInstanceError& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

std::vector<Fixed> get_fixed_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Fixed> out;
  for (const json& v : j) out.push_back(get_fixed(v, what));
  return out;
}

std::vector<int> get_int_array(const json& j, const char* what, int lo,
                               int hi) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& v : j) {
    int x = get_int(v, what, lo);
    if (x >= hi) bad(std::string(what) + " index out of range");
    out.push_back(x);
  }
  return out;
}

void require_sorted_distinct(const std::vector<int>& v, const char* what) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) bad(std::string(what) + " must be sorted and distinct");
}

std::string units_to_decimal(std::int64_t u) {
  return Fixed::from_units(u).to_string();
}

json point_to_json(const Point& p) {
  return json::array({units_to_decimal(p.x), units_to_decimal(p.y)});
}

GraphData parse_graph(const json& j) {
  expect_keys(j, {"coords", "edges", "lengths", "n", "unit_disk", "weights"},
              "graph");
  GraphData d;
  d.n = get_int(j.at("n"), "graph.n", 0);
  if (!j.contains("edges") || !j.at("edges").is_array())
    bad("graph.edges must be an array");
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair");
    int u = get_int(e[0], "edge endpoint", 0);
    int v = get_int(e[1], "edge endpoint", 0);
    if (u >= d.n || v >= d.n) bad("edge endpoint out of range");
    if (u == v) bad("self-loops are not allowed");
    d.edges.push_back({u, v});
  }
  d.weights = get_fixed_array(j.at("weights"), "graph.weights");
  if (static_cast<int>(d.weights.size()) != d.n)
    bad("graph.weights must list one weight per vertex");
  if (j.contains("lengths")) {
    d.lengths = get_fixed_array(j.at("lengths"), "graph.lengths");
    if (d.lengths.size() != d.edges.size())
      bad("graph.lengths must list one length per edge");
  }
  if (j.contains("coords")) {
    const json& cs = j.at("coords");
    if (!cs.is_array() || static_cast<int>(cs.size()) != d.n)
      bad("graph.coords must list one point per vertex");
    for (const json& c : cs) {
      if (!c.is_array() || c.size() != 2) bad("each coord must be a pair");
      Fixed x = get_fixed(c[0], "coordinate");
      Fixed y = get_fixed(c[1], "coordinate");
      if (x.is_infinite() || y.is_infinite()) bad("coordinates must be finite");
      d.coords.push_back({x.units(), y.units()});
    }
  }
  if (j.contains("unit_disk")) {
    if (!j.at("unit_disk").is_boolean()) bad("graph.unit_disk must be a bool");
    d.unit_disk = j.at("unit_disk").get<bool>();
  }
  return d;
}

json graph_to_json(const GraphData& d) {
  json j;
  j["n"] = d.n;
  json edges = json::array();
  for (const auto& [u, v] : d.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  json weights = json::array();
  for (const Fixed& w : d.weights) weights.push_back(w.to_string());
  j["weights"] = std::move(weights);
  if (!d.lengths.empty()) {
    json lengths = json::array();
    for (const Fixed& l : d.lengths) lengths.push_back(l.to_string());
    j["lengths"] = std::move(lengths);
  }
  if (!d.coords.empty()) {
    json coords = json::array();
    for (const Point& p : d.coords) coords.push_back(point_to_json(p));
    j["coords"] = std::move(coords);
  }
  j["unit_disk"] = d.unit_disk;
  return j;
}

void require_kind(const InstanceFile& f, InstanceKind want) {
  if (f.kind != want)
    throw InvalidInstanceError("instance kind is " + to_string(f.kind) +
                               ", expected " + to_string(want));
}

}  // namespace

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Vcst: return "vcst";
    case InstanceKind::Cds: return "cds";
    case InstanceKind::Activation: return "activation";
    case InstanceKind::Nws: return "nws";
    case InstanceKind::SetCover: return "set-cover";
    case InstanceKind::GridSteiner: return "grid-steiner";
  }
  throw InternalError("unhandled instance kind");
}

InstanceKind instance_kind_from_string(const std::string& s) {
  if (s == "vcst") return InstanceKind::Vcst;
  if (s == "cds") return InstanceKind::Cds;
  if (s == "activation") return InstanceKind::Activation;
  if (s == "nws") return InstanceKind::Nws;
  if (s == "set-cover") return InstanceKind::SetCover;
  if (s == "grid-steiner") return InstanceKind::GridSteiner;
  throw InvalidInstanceError("unknown instance kind '" + s + "'");
}

std::string instance_to_text(const InstanceFile& f) {
  json j;
  j["schema"] = f.schema;
  j["kind"] = to_string(f.kind);
  j["metadata"] = {{"family", f.family}, {"seed", f.seed}};
  if (f.kind == InstanceKind::SetCover) {
    json sets = json::array();
    for (const WeightedSet& s : f.sets) {
      json set;
      set["elements"] = s.elements;
      set["weight"] = s.weight.to_string();
      sets.push_back(std::move(set));
    }
    j["set_cover"] = {{"sets", std::move(sets)}, {"universe", f.universe}};
  } else {
    j["graph"] = graph_to_json(f.graph);
    j["terminals"] = f.terminals;
    if (f.kind == InstanceKind::Activation) {
      json levels = json::array();
      for (const Fixed& l : f.levels) levels.push_back(l.to_string());
      j["activation"] = {{"levels", std::move(levels)}, {"tables", f.tables}};
    }
  }
  return j.dump(2) + "\n";
}

InstanceFile instance_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  expect_keys(
      j, {"activation", "graph", "kind", "metadata", "schema", "set_cover",
          "terminals"},
      "instance");
  InstanceFile f;
  if (!j.contains("schema")) bad("missing schema version");
  f.schema = get_int(j.at("schema"), "schema", 1);
  if (f.schema != 1) bad("unsupported schema version");
  if (!j.contains("kind") || !j.at("kind").is_string())
    bad("missing instance kind");
  f.kind = instance_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("metadata")) {
    const json& m = j.at("metadata");
    expect_keys(m, {"family", "seed"}, "metadata");
    if (m.contains("family")) {
      if (!m.at("family").is_string()) bad("metadata.family must be a string");
      f.family = m.at("family").get<std::string>();
    }
    if (m.contains("seed")) f.seed = get_u64(m.at("seed"), "metadata.seed");
  }

  if (f.kind == InstanceKind::SetCover) {
    if (j.contains("graph") || j.contains("terminals"))
      bad("set-cover files carry no graph");
    if (!j.contains("set_cover")) bad("missing set_cover payload");
    const json& sc = j.at("set_cover");
    expect_keys(sc, {"sets", "universe"}, "set_cover");
    f.universe = get_int(sc.at("universe"), "universe", 0);
    if (!sc.contains("sets") || !sc.at("sets").is_array())
      bad("set_cover.sets must be an array");
    for (const json& s : sc.at("sets")) {
      expect_keys(s, {"elements", "weight"}, "set");
      WeightedSet ws;
      ws.elements = get_int_array(s.at("elements"), "set element", 0,
                                  f.universe);
      require_sorted_distinct(ws.elements, "set elements");
      ws.weight = get_fixed(s.at("weight"), "set weight");
      f.sets.push_back(std::move(ws));
    }
    return f;
  }

  if (j.contains("set_cover")) bad("only set-cover files carry set_cover");
  if (!j.contains("graph")) bad("missing graph payload");
  f.graph = parse_graph(j.at("graph"));
  if (!j.contains("terminals")) bad("missing terminals");
  f.terminals = get_int_array(j.at("terminals"), "terminal", 0, f.graph.n);
  require_sorted_distinct(f.terminals, "terminals");

  if (f.kind == InstanceKind::Activation) {
    if (!j.contains("activation")) bad("missing activation payload");
    const json& a = j.at("activation");
    expect_keys(a, {"levels", "tables"}, "activation");
    f.levels = get_fixed_array(a.at("levels"), "activation.levels");
    if (!a.contains("tables") || !a.at("tables").is_array())
      bad("activation.tables must be an array");
    for (const json& row : a.at("tables")) {
      if (!row.is_array()) bad("each table must be an array");
      std::vector<std::uint64_t> bits;
      for (const json& v : row) bits.push_back(get_u64(v, "table entry"));
      f.tables.push_back(std::move(bits));
    }
    if (f.tables.size() != f.graph.edges.size())
      bad("activation.tables must list one table per edge");
    for (const auto& row : f.tables)
      if (row.size() != f.levels.size())
        bad("each table must list one mask per level");
  } else if (j.contains("activation")) {
    bad("only activation files carry activation payload");
  }
  return f;
}

void save_instance(const InstanceFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInstanceError("cannot write " + path);
  out << instance_to_text(f);
  if (!out) throw InvalidInstanceError("write failed for " + path);
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInstanceError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_text(buf.str());
}

VcstInstance as_vcst(const InstanceFile& f) {
  require_kind(f, InstanceKind::Vcst);
  return VcstInstance(Graph(f.graph), f.terminals);
}

CdsInstance as_cds(const InstanceFile& f) {
  require_kind(f, InstanceKind::Cds);
  return CdsInstance(Graph(f.graph), f.terminals);
}

NwsInstance as_nws(const InstanceFile& f) {
  require_kind(f, InstanceKind::Nws);
  return NwsInstance(Graph(f.graph), f.terminals);
}

ActivationInstance as_activation(const InstanceFile& f) {
  require_kind(f, InstanceKind::Activation);
  return ActivationInstance(Graph(f.graph), f.terminals, f.levels, f.tables);
}

Graph as_grid_steiner(const InstanceFile& f) {
  require_kind(f, InstanceKind::GridSteiner);
  Graph g(f.graph);
  if (!g.has_lengths())
    throw InvalidInstanceError("grid-steiner files need edge lengths");
  if (f.terminals.empty())
    throw InvalidInstanceError("grid-steiner files need terminals");
  return g;
}

std::pair<int, std::vector<WeightedSet>> as_set_cover(const InstanceFile& f) {
  require_kind(f, InstanceKind::SetCover);
  return {f.universe, f.sets};
}

GraphData graph_to_data(const Graph& g) {
  GraphData d;
  d.n = g.n();
  d.edges = g.edges();
  d.weights = g.weights();
  if (g.has_lengths()) d.lengths = g.lengths();
  if (g.has_coords()) d.coords = g.coords();
  d.unit_disk = g.is_unit_disk();
  return d;
}

std::string bench_csv_header() {
  return "instance_id,n,m,kind,algorithm,objective,opt,ratio,certs,wall_ms";
}

std::string bench_csv_row(const BenchRow& row) {
  if (row.opt.has_value() != row.ratio.has_value())
    throw InternalError("bench row: ratio must accompany an exact optimum");
  if (row.ratio && *row.ratio < 1.0 - 1e-9)
    throw InternalError("bench row: solver beat the exact optimum");
  for (char c : row.instance_id + row.algorithm + row.certs)
    if (c == ',' || c == '\n')
      throw InvalidInstanceError("bench fields may not contain commas");
  std::string out = row.instance_id;
  out += ',' + std::to_string(row.n);
  out += ',' + std::to_string(row.m);
  out += ',' + to_string(row.kind);
  out += ',' + row.algorithm;
  out += ',' + row.objective.to_string();
  out += ',';
  if (row.opt) out += row.opt->to_string();
  out += ',';
  if (row.ratio) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *row.ratio);
    out += buf;
  }
  out += ',' + row.certs;
  out += ',' + std::to_string(row.wall_ms);
  return out;
}

}  // namespace vcst
