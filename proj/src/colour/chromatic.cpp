#include "pire/colour/chromatic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pire/core/error.hpp"
#include "pire/core/link.hpp"

namespace pire {

namespace {

std::vector<VertexId> greedy_clique(const std::vector<std::vector<VertexId>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint8_t>> is_adj(n, std::vector<std::uint8_t>(n, 0));
  for (VertexId v = 0; v < n; ++v) {
    for (auto u : adj[v]) is_adj[v][u] = 1;
  }
  std::vector<VertexId> best;
  for (VertexId start = 0; start < n; ++start) {
    if (adj[start].size() + 1 <= best.size()) continue;
    std::vector<VertexId> clique = {start};
    std::vector<VertexId> candidates = adj[start];
    while (!candidates.empty()) {
      // highest degree first, lowest id on ties
      VertexId pick = candidates.front();
      for (auto u : candidates) {
        if (adj[u].size() > adj[pick].size()) pick = u;
      }
      clique.push_back(pick);
      std::erase_if(candidates, [&](VertexId u) { return u == pick || !is_adj[pick][u]; });
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

class DsaturSolver {
 public:
  explicit DsaturSolver(std::vector<std::vector<VertexId>> adj)
      : adj_(std::move(adj)),
        n_(adj_.size()),
        colour_(n_, -1),
        neighbour_colours_(n_, std::vector<int>(n_ + 1, 0)),
        saturation_(n_, 0) {}

  ChromaticResult<VertexCarrier> solve() {
    ChromaticResult<VertexCarrier> result;
    if (n_ == 0) return result;
    result.log.clique = greedy_clique(adj_);
    lower_bound_ = static_cast<int>(result.log.clique.size());
    int used = 0;
    for (auto v : result.log.clique) assign(v, used++);
    const int coloured = used;

    upper_bound_ = static_cast<int>(n_) + 1;
    greedy_complete(coloured, used);
    result.log.initial_upper_bound = upper_bound_;
    if (upper_bound_ > lower_bound_) search(coloured, used);

    result.k = upper_bound_;
    result.witness.palette_size = upper_bound_;
    result.witness.colours = best_;
    result.log.branches = branches_;
    return result;
  }

 private:
  void assign(VertexId v, int c) {
    colour_[v] = c;
    for (auto u : adj_[v]) {
      if (neighbour_colours_[u][c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(VertexId v) {
    const int c = colour_[v];
    colour_[v] = -1;
    for (auto u : adj_[v]) {
      if (--neighbour_colours_[u][c] == 0) --saturation_[u];
    }
  }

  VertexId pick_vertex() const {
    VertexId best = 0;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexId v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = saturation_[v];
      if (sat < best_sat) continue;
      int deg = 0;
      for (auto u : adj_[v]) deg += colour_[u] < 0;
      if (sat > best_sat || deg > best_deg) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void record(int used) {
    upper_bound_ = used;
    best_ = colour_;
  }

  // Plain DSATUR from the current partial colouring; seeds the upper bound.
  void greedy_complete(int coloured, int used) {
    std::vector<VertexId> assigned;
    while (coloured < static_cast<int>(n_)) {
      const VertexId v = pick_vertex();
      int c = 0;
      while (neighbour_colours_[v][c] > 0) ++c;
      assign(v, c);
      assigned.push_back(v);
      used = std::max(used, c + 1);
      ++coloured;
    }
    record(used);
    for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) unassign(*it);
  }

  void search(int coloured, int used) {
    ++branches_;
    if (used >= upper_bound_) return;
    if (coloured == static_cast<int>(n_)) {
      record(used);
      return;
    }
    const VertexId v = pick_vertex();
    if (saturation_[v] >= upper_bound_ - 1) return;
    for (int c = 0; c < used; ++c) {
      if (neighbour_colours_[v][c] > 0) continue;
      assign(v, c);
      search(coloured + 1, used);
      unassign(v);
      if (upper_bound_ <= lower_bound_ || used >= upper_bound_) return;
    }
    if (used + 1 < upper_bound_) {
      assign(v, used);
      search(coloured + 1, used + 1);
      unassign(v);
    }
  }

  std::vector<std::vector<VertexId>> adj_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> neighbour_colours_;
  std::vector<int> saturation_;
  std::vector<int> best_;
  int lower_bound_ = 0;
  int upper_bound_ = 0;
  std::uint64_t branches_ = 0;
};

}  // namespace

ChromaticResult<VertexCarrier> chromatic_number(const Multigraph& g) {
  auto result = DsaturSolver(simple_adjacency(g)).solve();
  if (!is_valid_vertex_colouring(g, result.witness)) {
    throw std::logic_error("chromatic_number produced an invalid witness");
  }
  return result;
}

ChromaticResult<PairCarrier> pair_chromatic_number(const PairedGraph& pg) {
  // quotient vertex i is pair i
  auto vertex = chromatic_number(simple_quotient(pg));
  ChromaticResult<PairCarrier> result;
  result.k = vertex.k;
  result.witness.palette_size = vertex.witness.palette_size;
  result.witness.colours = std::move(vertex.witness.colours);
  result.log = std::move(vertex.log);
  return result;
}

ChromaticResult<EdgeCarrier> edge_chromatic_number_complex(const TwoComplex& c) {
  // link pair e is {(e,0),(e,1)}
  auto pair = pair_chromatic_number(link_graph(c));
  ChromaticResult<EdgeCarrier> result;
  result.k = pair.k;
  result.witness.palette_size = pair.witness.palette_size;
  result.witness.colours = std::move(pair.witness.colours);
  result.log = std::move(pair.log);
  if (!is_valid_complex_colouring(c, result.witness)) {
    throw std::logic_error("edge_chromatic_number_complex produced an invalid witness");
  }
  return result;
}

int brute_force_edge_chromatic(const TwoComplex& c, int k_max, bool force) {
  validate_complex(c);
  const std::size_t m = c.skeleton.edge_count();
  if (m > 12 && !force) {
    throw InputError("brute_force_edge_chromatic: " + std::to_string(m) +
                     " edges exceeds the 12-edge guard");
  }
  if (m == 0) return 0;

  // conflicts[e] = earlier edges that must differ from e
  std::set<std::pair<EdgeId, EdgeId>> constraints;
  for (const auto& cell : c.cells) {
    for (std::size_t i = 0; i < cell.steps.size(); ++i) {
      const EdgeId a = cell.steps[i].edge;
      const EdgeId b = cell.steps[(i + 1) % cell.steps.size()].edge;
      if (a != b) constraints.insert(std::minmax(a, b));
    }
  }
  std::vector<std::vector<EdgeId>> earlier(m);
  for (const auto& [a, b] : constraints) earlier[b].push_back(a);

  ComplexColouring col;
  col.colours.assign(m, 0);
  for (int k = 1; k <= k_max; ++k) {
    col.palette_size = k;
    // odometer over edges 1..m-1 with backtracking on the first conflict
    std::size_t pos = 1;
    std::vector<int>& colours = col.colours;
    std::fill(colours.begin(), colours.end(), 0);
    bool found = false;
    auto consistent = [&](std::size_t e) {
      return std::none_of(earlier[e].begin(), earlier[e].end(),
                          [&](EdgeId f) { return colours[f] == colours[e]; });
    };
    colours[0] = 0;
    if (m == 1) {
      found = true;
    } else {
      colours[1] = -1;
      while (true) {
        ++colours[pos];
        if (colours[pos] >= k) {
          if (--pos == 0) break;
          continue;
        }
        if (!consistent(pos)) continue;
        if (pos + 1 == m) {
          found = true;
          break;
        }
        colours[++pos] = -1;
      }
    }
    if (found) {
      if (!is_valid_complex_colouring(c, col)) {
        throw std::logic_error("brute_force_edge_chromatic accepted an invalid colouring");
      }
      return k;
    }
  }
  throw DomainError("brute_force_edge_chromatic: no colouring with at most " + std::to_string(k_max) +
                    " colours");
}

}  // namespace pire
