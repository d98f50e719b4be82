#include "pire/core/dot.hpp"

#include <array>
#include <sstream>

namespace pire {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

constexpr std::array<const char*, 12> kPalette = {
    "red",    "blue",      "forestgreen", "orange", "purple", "brown",
    "deeppink", "darkcyan", "gold",       "black",  "gray50", "olivedrab"};

void emit_edges(std::ostringstream& os, const Multigraph& g) {
  for (const auto& e : g.edges()) {
    os << "  " << quoted(g.vertex_name(e.end0)) << " -- " << quoted(g.vertex_name(e.end1))
       << " [label=" << quoted(e.name) << "];\n";
  }
}

}  // namespace

std::string to_dot(const Multigraph& g, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << quoted(graph_name) << " {\n";
  for (const auto& name : g.vertex_names()) os << "  " << quoted(name) << ";\n";
  emit_edges(os, g);
  os << "}\n";
  return os.str();
}

std::string to_dot(const PairedGraph& pg, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << quoted(graph_name) << " {\n";
  os << "  node [penwidth=3];\n";
  for (VertexId v = 0; v < pg.graph.vertex_count(); ++v) {
    const PairId p = pg.pairing.pair_of(v);
    os << "  " << quoted(pg.graph.vertex_name(v)) << " [color=" << kPalette[p % kPalette.size()]
       << ", xlabel=" << quoted("p" + std::to_string(p)) << "];\n";
  }
  emit_edges(os, pg.graph);
  os << "}\n";
  return os.str();
}

}  // namespace pire
