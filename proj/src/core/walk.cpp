#include "pire/core/walk.hpp"

#include <algorithm>

#include "pire/core/error.hpp"

namespace pire {

VertexId walk_start(const Multigraph& g, const Walk& w) {
  return g.vertex_of(w.steps.front().entry_third());
}

VertexId walk_end(const Multigraph& g, const Walk& w) {
  return g.vertex_of(w.steps.back().exit_third());
}

std::string closed_walk_problem(const Multigraph& g, const Walk& w) {
  if (w.steps.empty()) return "walk is empty";
  for (const auto& step : w.steps) {
    if (step.edge >= g.edge_count()) return "walk uses an edge outside the skeleton";
    if (step.entry > 1) return "walk step has entry side other than 0 or 1";
  }
  const std::size_t n = w.steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = w.steps[i];
    const auto& next = w.steps[(i + 1) % n];
    if (g.vertex_of(cur.exit_third()) != g.vertex_of(next.entry_third())) {
      return "walk breaks between step " + std::to_string(i) + " (edge '" + g.edge(cur.edge).name +
             "') and step " + std::to_string((i + 1) % n) + " (edge '" + g.edge(next.edge).name + "')";
    }
  }
  return {};
}

Walk walk_reverse(const Walk& w) {
  Walk r;
  r.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    r.steps.push_back({it->edge, it->exit()});
  }
  return r;
}

Walk walk_concat(const Multigraph& g, std::span<const Walk> walks) {
  Walk out;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto& w = walks[i];
    if (w.steps.empty()) continue;
    if (!out.steps.empty() && walk_end(g, out) != walk_start(g, w)) {
      throw InputError("walk_concat: walk " + std::to_string(i) + " starts at '" +
                       g.vertex_name(walk_start(g, w)) + "' but the previous walk ends at '" +
                       g.vertex_name(walk_end(g, out)) + "'");
    }
    out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.end());
  }
  return out;
}

}  // namespace pire
