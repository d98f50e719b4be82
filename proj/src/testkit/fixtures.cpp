#include "pire/testkit/fixtures.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "pire/construct/random.hpp"

namespace pire::testkit {

Multigraph complete_graph(std::size_t n) {
  Multigraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge("e" + std::to_string(u) + "_" + std::to_string(v), u, v);
  }
  return g;
}

Multigraph octahedron() {
  // K6 minus a perfect matching {0,1},{2,3},{4,5}
  Multigraph g;
  for (int v = 0; v < 6; ++v) g.add_vertex("v" + std::to_string(v));
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) {
      if (u / 2 != v / 2) g.add_edge("e" + std::to_string(u) + "_" + std::to_string(v), u, v);
    }
  }
  return g;
}

Multigraph petersen() {
  Multigraph g;
  for (int v = 0; v < 10; ++v) g.add_vertex("v" + std::to_string(v));
  int e = 0;
  auto add = [&](VertexId u, VertexId v) { g.add_edge("e" + std::to_string(e++), u, v); };
  for (VertexId i = 0; i < 5; ++i) {
    add(i, (i + 1) % 5);          // outer cycle
    add(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    add(i, 5 + i);                // spokes
  }
  return g;
}

TwoComplex triangle_complex() {
  TwoComplex c;
  const auto x = c.skeleton.add_vertex("x");
  const auto y = c.skeleton.add_vertex("y");
  const auto z = c.skeleton.add_vertex("z");
  const auto a = c.skeleton.add_edge("a", x, y);
  const auto b = c.skeleton.add_edge("b", y, z);
  const auto d = c.skeleton.add_edge("c", z, x);
  c.cells.push_back(Walk{{{a, 0}, {b, 0}, {d, 0}}});
  return c;
}

TwoComplex tetrahedron_complex() {
  TwoComplex c;
  for (int v = 0; v < 4; ++v) c.skeleton.add_vertex(std::to_string(v));
  std::array<std::array<EdgeId, 4>, 4> edge{};
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) {
      edge[u][v] = edge[v][u] = c.skeleton.add_edge(std::to_string(u) + std::to_string(v), u, v);
    }
  }
  auto step = [&](VertexId from, VertexId to) { return Step{edge[from][to], static_cast<Side>(from < to ? 0 : 1)}; };
  const std::array<std::array<VertexId, 3>, 4> faces = {{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
  for (const auto& [a, b, d] : faces) c.cells.push_back(Walk{{step(a, b), step(b, d), step(d, a)}});
  return c;
}

TwoComplex one_loop_complex() {
  TwoComplex c;
  const auto h = c.skeleton.add_vertex("h");
  const auto e = c.skeleton.add_edge("e", h, h);
  c.cells.push_back(Walk{{{e, 0}}});
  return c;
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

EdgeList canonical_form(const EdgeList& edges, std::size_t n) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  do {
    EdgeList mapped;
    for (const auto& [u, v] : edges) mapped.push_back(std::minmax(perm[u], perm[v]));
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Skeletons with exactly m edges on exactly n vertices, all vertices used.
void skeletons(std::size_t m, std::size_t n, std::set<EdgeList>& out) {
  EdgeList slots;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    EdgeList edges;
    std::vector<int> used(n, 0);
    for (auto i : pick) {
      edges.push_back(slots[i]);
      used[slots[i].first] = used[slots[i].second] = 1;
    }
    if (std::all_of(used.begin(), used.end(), [](int x) { return x; })) out.insert(canonical_form(edges, n));
    // next nondecreasing index tuple
    std::size_t k = m;
    while (k > 0 && pick[k - 1] + 1 == slots.size()) --k;
    if (k == 0) return;
    ++pick[k - 1];
    for (std::size_t j = k; j < m; ++j) pick[j] = pick[k - 1];
  }
}

using Code = std::vector<std::pair<EdgeId, Side>>;

Code encode(const Walk& w) {
  Code c;
  for (const auto& s : w.steps) c.emplace_back(s.edge, s.entry);
  return c;
}

Code canonical_walk(const Walk& w) {
  Code best;
  for (const Walk& base : {w, walk_reverse(w)}) {
    Code code = encode(base);
    for (std::size_t r = 0; r < code.size(); ++r) {
      std::rotate(code.begin(), code.begin() + 1, code.end());
      if (best.empty() || code < best) best = code;
    }
  }
  return best;
}

std::vector<Walk> closed_walks(const Multigraph& g, std::size_t max_length) {
  std::set<Code> seen;
  std::vector<Walk> out;
  std::vector<Step> all_steps;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    all_steps.push_back({e, 0});
    all_steps.push_back({e, 1});
  }
  Walk w;
  std::function<void()> extend = [&] {
    if (!w.steps.empty() && walk_end(g, w) == walk_start(g, w)) {
      if (seen.insert(canonical_walk(w)).second) out.push_back(w);
    }
    if (w.steps.size() == max_length) return;
    for (const auto& s : all_steps) {
      if (!w.steps.empty() && g.vertex_of(s.entry_third()) != walk_end(g, w)) continue;
      w.steps.push_back(s);
      extend();
      w.steps.pop_back();
    }
  };
  extend();
  return out;
}

}  // namespace

std::size_t for_each_small_complex(std::size_t max_edges, std::size_t max_cells, std::size_t max_length,
                                   const std::function<void(const TwoComplex&)>& visit) {
  std::size_t visited = 0;
  {
    TwoComplex point;
    point.skeleton.add_vertex("v0");
    visit(point);
    ++visited;
  }
  for (std::size_t m = 1; m <= max_edges; ++m) {
    for (std::size_t n = 1; n <= 2 * m; ++n) {
      std::set<EdgeList> found;
      skeletons(m, n, found);
      for (const auto& edges : found) {
        TwoComplex c;
        for (std::size_t v = 0; v < n; ++v) c.skeleton.add_vertex("v" + std::to_string(v));
        for (std::size_t i = 0; i < edges.size(); ++i) {
          c.skeleton.add_edge("e" + std::to_string(i), edges[i].first, edges[i].second);
        }
        const auto walks = closed_walks(c.skeleton, max_length);
        // multisets of at most max_cells walks, as nondecreasing index tuples
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
          c.cells.clear();
          for (auto i : pick) c.cells.push_back(walks[i]);
          visit(c);
          ++visited;
          if (pick.size() == max_cells) return;
          for (std::size_t i = from; i < walks.size(); ++i) {
            pick.push_back(i);
            choose(i);
            pick.pop_back();
          }
        };
        choose(0);
      }
    }
  }
  return visited;
}

TwoComplex random_complex(std::uint64_t seed, std::size_t max_edges, std::size_t max_cells,
                          std::size_t max_length) {
  Rng rng(seed);
  TwoComplex c;
  const std::size_t n = 1 + rng.index(4);
  for (std::size_t v = 0; v < n; ++v) c.skeleton.add_vertex("v" + std::to_string(v));
  const std::size_t m = 1 + rng.index(max_edges);
  for (std::size_t e = 0; e < m; ++e) {
    c.skeleton.add_edge("e" + std::to_string(e), static_cast<VertexId>(rng.index(n)),
                        static_cast<VertexId>(rng.index(n)));
  }
  const auto inc = c.skeleton.incidence();
  const std::size_t cells = rng.index(max_cells + 1);
  for (std::size_t attempt = 0; c.cells.size() < cells && attempt < 200; ++attempt) {
    const std::size_t length = 1 + rng.index(max_length);
    const auto start = static_cast<VertexId>(rng.index(n));
    if (inc[start].empty()) continue;
    Walk w;
    VertexId at = start;
    for (std::size_t i = 0; i < length; ++i) {
      const auto& out = inc[at][rng.index(inc[at].size())];
      w.steps.push_back({out.edge, out.side});
      at = c.skeleton.vertex_of(out.partner());
    }
    if (at == start) c.cells.push_back(std::move(w));
  }
  return c;
}

Multigraph random_graph(std::uint64_t seed, std::size_t n, double p) {
  Rng rng(seed);
  Multigraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  int e = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.chance(p)) g.add_edge("e" + std::to_string(e++), u, v);
    }
  }
  return g;
}

}  // namespace pire::testkit
