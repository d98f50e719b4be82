#include "pire/core/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pire/core/error.hpp"

namespace pire::io {

namespace {

std::string id_string(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(what) + " must be a string or integer id");
}

const json& member(const json& j, const char* key) { return j.at(key); }

VertexId vertex_ref(const Multigraph& g, const json& j, const char* what) {
  const auto name = id_string(j, what);
  auto v = g.find_vertex(name);
  if (!v) throw InputError(std::string(what) + " references unknown vertex '" + name + "'");
  return *v;
}

EdgeId edge_ref(const Multigraph& g, const json& j, const char* what) {
  const auto name = id_string(j, what);
  auto e = g.find_edge(name);
  if (!e) throw InputError(std::string(what) + " references unknown edge '" + name + "'");
  return *e;
}

Side side_value(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.get<long long>() != 0 && j.get<long long>() != 1)) {
    throw InputError(std::string(what) + " side must be 0 or 1");
  }
  return static_cast<Side>(j.get<int>());
}

void require_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
}

void fill_graph(Multigraph& g, const json& j) {
  require_array(member(j, "vertices"), "vertices");
  require_array(member(j, "edges"), "edges");
  for (const auto& v : j["vertices"]) g.add_vertex(id_string(v, "vertex"));
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) throw InputError("edge entries must be objects");
    check_keys(e, {"id", "end0", "end1"}, {}, "edge");
    g.add_edge(id_string(e["id"], "edge id"), vertex_ref(g, e["end0"], "edge end0"),
               vertex_ref(g, e["end1"], "edge end1"));
  }
}

json graph_body(const Multigraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& name : g.vertex_names()) j["vertices"].push_back(name);
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"id", e.name}, {"end0", g.vertex_name(e.end0)}, {"end1", g.vertex_name(e.end1)}});
  }
  return j;
}

}  // namespace

void check_keys(const json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (const char* key : required) {
    if (!j.contains(key)) throw InputError(std::string(what) + " is missing key '" + key + "'");
  }
  for (const auto& item : j.items()) {
    const auto& key = item.key();
    auto matches = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), matches) &&
        std::none_of(optional.begin(), optional.end(), matches)) {
      throw InputError(std::string(what) + " has unknown key '" + key + "'");
    }
  }
}

Multigraph graph_from_json(const json& j) {
  check_keys(j, {"vertices", "edges"}, {}, "graph");
  Multigraph g;
  fill_graph(g, j);
  return g;
}

json to_json(const Multigraph& g) { return graph_body(g); }

PairedGraph paired_graph_from_json(const json& j, std::initializer_list<const char*> extra_keys) {
  std::vector<const char*> optional = {"rotation"};
  optional.insert(optional.end(), extra_keys.begin(), extra_keys.end());
  if (!j.is_object()) throw InputError("paired graph must be a JSON object");
  for (const char* key : {"vertices", "edges", "pairs"}) {
    if (!j.contains(key)) throw InputError(std::string("paired graph is missing key '") + key + "'");
  }
  for (const auto& item : j.items()) {
    const auto& key = item.key();
    if (key == "vertices" || key == "edges" || key == "pairs") continue;
    if (std::none_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; })) {
      throw InputError("paired graph has unknown key '" + key + "'");
    }
  }
  PairedGraph pg;
  fill_graph(pg.graph, j);
  require_array(j["pairs"], "pairs");
  std::vector<std::array<VertexId, 2>> pairs;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2) throw InputError("each pair must be a two-element array");
    pairs.push_back({vertex_ref(pg.graph, p[0], "pair"), vertex_ref(pg.graph, p[1], "pair")});
  }
  pg.pairing = Pairing(pg.graph.vertex_count(), pairs);
  if (j.contains("rotation")) {
    const auto& r = j["rotation"];
    if (!r.is_object()) throw InputError("rotation must be an object keyed by vertex id");
    RotationSystem rot;
    rot.order.resize(pg.graph.vertex_count());
    for (const auto& item : r.items()) {
      const auto v = pg.graph.find_vertex(item.key());
      if (!v) throw InputError("rotation references unknown vertex '" + item.key() + "'");
      require_array(item.value(), "rotation entry");
      for (const auto& end : item.value()) {
        if (!end.is_array() || end.size() != 2) throw InputError("rotation entries must be [edge, side]");
        rot.order[*v].push_back({edge_ref(pg.graph, end[0], "rotation"), side_value(end[1], "rotation")});
      }
    }
    pg.rotation = std::move(rot);
  }
  return pg;
}

PairedGraph paired_graph_from_json(const json& j) { return paired_graph_from_json(j, {}); }

json to_json(const PairedGraph& pg) {
  json j = graph_body(pg.graph);
  j["pairs"] = json::array();
  for (const auto& [a, b] : pg.pairing.pairs()) {
    j["pairs"].push_back({pg.graph.vertex_name(a), pg.graph.vertex_name(b)});
  }
  if (pg.rotation) {
    json r = json::object();
    for (VertexId v = 0; v < pg.graph.vertex_count(); ++v) {
      json cyc = json::array();
      for (const auto& end : pg.rotation->order.at(v)) cyc.push_back({pg.graph.edge(end.edge).name, end.side});
      r[pg.graph.vertex_name(v)] = std::move(cyc);
    }
    j["rotation"] = std::move(r);
  }
  return j;
}

TwoComplex complex_from_json(const json& j) {
  check_keys(j, {"skeleton", "cells"}, {"kind"}, "complex");
  TwoComplex c;
  c.skeleton = graph_from_json(j["skeleton"]);
  require_array(j["cells"], "cells");
  for (const auto& cell : j["cells"]) {
    require_array(cell, "cell");
    Walk w;
    for (const auto& step : cell) {
      if (!step.is_array() || step.size() != 2) throw InputError("cell steps must be [edge, entry_side]");
      w.steps.push_back({edge_ref(c.skeleton, step[0], "cell step"), side_value(step[1], "cell step")});
    }
    c.cells.push_back(std::move(w));
  }
  if (j.contains("kind")) {
    const auto& kind = j["kind"];
    if (kind == "genuine") {
      c.kind = CellKind::genuine;
    } else if (kind == "punctured") {
      c.kind = CellKind::punctured;
    } else {
      throw InputError("complex kind must be \"genuine\" or \"punctured\"");
    }
  }
  validate_complex(c);
  return c;
}

json to_json(const TwoComplex& c) {
  json j;
  j["skeleton"] = graph_body(c.skeleton);
  j["cells"] = json::array();
  for (const auto& cell : c.cells) {
    json steps = json::array();
    for (const auto& s : cell.steps) steps.push_back({c.skeleton.edge(s.edge).name, s.entry});
    j["cells"].push_back(std::move(steps));
  }
  j["kind"] = c.kind == CellKind::genuine ? "genuine" : "punctured";
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + ex.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << dump(j);
}

}  // namespace pire::io
