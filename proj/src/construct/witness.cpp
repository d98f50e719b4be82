#include "pire/construct/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "pire/colour/chromatic.hpp"
#include "pire/colour/heawood.hpp"
#include "pire/construct/random.hpp"
#include "pire/construct/triangulation.hpp"
#include "pire/core/error.hpp"
#include "pire/core/io.hpp"

namespace pire {

bool WitnessReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.passed; });
}

const WitnessCheck* WitnessReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

int cross_pair_objective(const PairedGraph& pg) {
  std::set<std::pair<PairId, PairId>> seen;
  for (const auto& e : pg.graph.edges()) {
    const PairId p = pg.pairing.pair_of(e.end0), q = pg.pairing.pair_of(e.end1);
    if (p != q) seen.insert(std::minmax(p, q));
  }
  return static_cast<int>(seen.size());
}

namespace {

WitnessCheck check_planar(const Witness2Pire& w) {
  WitnessCheck c{"planar", false, {}};
  if (!w.map.rotation) {
    c.detail = "no rotation system";
    return c;
  }
  if (auto problem = rotation_problem(w.map.graph, *w.map.rotation); !problem.empty()) {
    c.detail = problem;
    return c;
  }
  const auto report = genus_check(w.map.graph, *w.map.rotation);
  c.passed = report.is_planar_embedding();
  c.detail = std::to_string(report.components.size()) + " component(s), " +
             std::to_string(report.total_faces()) + " faces";
  if (!c.passed) {
    for (const auto& comp : report.components) {
      if (comp.genus != 0) c.detail += ", a component has genus " + std::to_string(comp.genus);
    }
  }
  return c;
}

WitnessCheck check_pairing(const Witness2Pire& w) {
  WitnessCheck c{"perfect_pairing", false, {}};
  const auto n = w.map.graph.vertex_count();
  std::vector<int> hits(n, 0);
  bool sizes_ok = true;
  for (const auto& [a, b] : w.map.pairing.pairs()) {
    if (a >= n || b >= n || a == b) {
      sizes_ok = false;
      continue;
    }
    ++hits[a];
    ++hits[b];
  }
  c.passed = sizes_ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  c.detail = std::to_string(w.map.pairing.size()) + " pairs over " + std::to_string(n) + " vertices";
  return c;
}

WitnessCheck check_k12(const Witness2Pire& w) {
  WitnessCheck c{"k12", false, {}};
  std::set<PairId> designated(w.designated_pairs.begin(), w.designated_pairs.end());
  if (designated.size() != 12 || w.designated_pairs.size() != 12) {
    c.detail = "expected 12 distinct designated pairs, got " + std::to_string(designated.size());
    return c;
  }
  if (*designated.rbegin() >= w.map.pairing.size()) {
    c.detail = "designated pair out of range";
    return c;
  }
  std::set<std::pair<PairId, PairId>> realized;
  for (const auto& e : w.map.graph.edges()) {
    const PairId p = w.map.pairing.pair_of(e.end0), q = w.map.pairing.pair_of(e.end1);
    if (p != q && designated.contains(p) && designated.contains(q)) realized.insert(std::minmax(p, q));
  }
  c.passed = realized.size() == 66;
  c.detail = std::to_string(realized.size()) + " of 66 pair adjacencies realized";
  return c;
}

WitnessCheck check_chromatic(const Witness2Pire& w, bool planar) {
  WitnessCheck c{"pair_chromatic_12", false, {}};
  const auto exact = pair_chromatic_number(w.map);
  c.passed = exact.k == 12;
  c.detail = "exact " + std::to_string(exact.k) + ", clique lower bound " +
             std::to_string(exact.log.clique.size());
  if (planar) {
    const auto heawood = heawood_colour_12(w.map);
    c.detail += ", Heawood upper bound " + std::to_string(heawood.used());
  }
  return c;
}

// Annealing state: a triangulation on 24 vertices plus a 2-to-1 labelling
// onto 12 pairs, with counts of edges between every two labels.
class AnnealState {
 public:
  static constexpr int kVertices = 24;
  static constexpr int kPairs = 12;

  AnnealState(Triangulation t, std::array<int, kVertices> label) : tri_(std::move(t)), label_(label) {
    for (const auto& [u, v] : tri_.edges()) {
      adj_[u][v] = adj_[v][u] = true;
      bump(label_[u], label_[v], +1);
    }
  }

  int objective() const { return objective_; }
  const Triangulation& triangulation() const { return tri_; }
  const std::array<int, kVertices>& labels() const { return label_; }

  void flip(const Triangulation::Flip& f) {
    bump(label_[f.a], label_[f.b], -1);
    bump(label_[f.c], label_[f.d], +1);
    adj_[f.a][f.b] = adj_[f.b][f.a] = false;
    adj_[f.c][f.d] = adj_[f.d][f.c] = true;
    tri_.apply(f);
  }

  void unflip(const Triangulation::Flip& f) {
    bump(label_[f.c], label_[f.d], -1);
    bump(label_[f.a], label_[f.b], +1);
    adj_[f.c][f.d] = adj_[f.d][f.c] = false;
    adj_[f.a][f.b] = adj_[f.b][f.a] = true;
    tri_.undo(f);
  }

  void swap_labels(int u, int v) {
    relabel(u, v, -1);
    std::swap(label_[u], label_[v]);
    relabel(u, v, +1);
  }

  std::vector<Triangulation::Flip> all_flips() const {
    std::vector<Triangulation::Flip> out;
    for (std::size_t f = 0; f < tri_.face_count(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const auto& face = tri_.faces()[f];
        if (face[k] > face[(k + 1) % 3]) continue;  // each undirected edge once
        if (auto flip = tri_.flip_candidate(f, k)) out.push_back(*flip);
      }
    }
    return out;
  }

 private:
  void bump(int p, int q, int delta) {
    if (p == q) return;
    int& c = count_[p][q];
    if (c == 0 && delta > 0) ++objective_;
    c += delta;
    count_[q][p] = c;
    if (c == 0 && delta < 0) --objective_;
  }

  void relabel(int u, int v, int delta) {
    for (int w = 0; w < kVertices; ++w) {
      if (adj_[u][w]) bump(label_[u], label_[w], delta);
      if (adj_[v][w] && w != u) bump(label_[v], label_[w], delta);
    }
  }

  Triangulation tri_;
  std::array<int, kVertices> label_;
  std::array<std::array<bool, kVertices>, kVertices> adj_{};
  std::array<std::array<int, kPairs>, kPairs> count_{};
  int objective_ = 0;
};

// Exhaustive search over all sequences of at most two moves. Leaves the state
// at the first sequence reaching the maximum objective.
bool polish(AnnealState& s) {
  auto swaps = [&] {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < AnnealState::kVertices; ++u) {
      for (int v = u + 1; v < AnnealState::kVertices; ++v) {
        if (s.labels()[u] != s.labels()[v]) out.emplace_back(u, v);
      }
    }
    return out;
  };
  auto try_second = [&] {
    for (const auto& f : s.all_flips()) {
      s.flip(f);
      if (s.objective() == kMaxObjective) return true;
      s.unflip(f);
    }
    for (const auto& [u, v] : swaps()) {
      s.swap_labels(u, v);
      if (s.objective() == kMaxObjective) return true;
      s.swap_labels(u, v);
    }
    return false;
  };
  if (s.objective() == kMaxObjective) return true;
  for (const auto& f : s.all_flips()) {
    s.flip(f);
    if (try_second()) return true;
    s.unflip(f);
  }
  for (const auto& [u, v] : swaps()) {
    s.swap_labels(u, v);
    if (try_second()) return true;
    s.swap_labels(u, v);
  }
  return false;
}

Witness2Pire to_witness(const AnnealState& s, const SearchOptions& options, std::uint64_t iterations) {
  Witness2Pire w;
  RotationSystem rot;
  s.triangulation().to_embedded_graph(w.map.graph, rot);
  w.map.rotation = std::move(rot);
  std::vector<std::array<VertexId, 2>> pairs(AnnealState::kPairs, {0, 0});
  std::vector<int> filled(AnnealState::kPairs, 0);
  for (VertexId v = 0; v < AnnealState::kVertices; ++v) pairs[s.labels()[v]][filled[s.labels()[v]]++] = v;
  std::sort(pairs.begin(), pairs.end());
  w.map.pairing = Pairing(AnnealState::kVertices, pairs);
  for (PairId p = 0; p < AnnealState::kPairs; ++p) w.designated_pairs.push_back(p);
  w.provenance = {{"method", "simulated annealing over triangulation flips and pair transpositions"},
                  {"seed", options.seed},
                  {"budget", options.budget},
                  {"iterations", iterations},
                  {"cycle_length", options.cycle_length}};
  return w;
}

}  // namespace

WitnessReport verify_witness(const Witness2Pire& w) {
  WitnessReport report;
  report.checks.push_back(check_planar(w));
  report.checks.push_back(check_pairing(w));
  report.checks.push_back(check_k12(w));
  report.checks.push_back(check_chromatic(w, report.checks[0].passed));
  return report;
}

SearchResult search_witness(const SearchOptions& options) {
  Rng rng(options.seed);
  std::array<int, AnnealState::kVertices> labels{};
  for (int v = 0; v < AnnealState::kVertices; ++v) labels[v] = v / 2;
  rng.shuffle(labels.begin(), labels.end());
  AnnealState state(Triangulation::random(AnnealState::kVertices, rng), labels);

  SearchResult result;
  result.best_objective = state.objective();
  auto note = [&](std::uint64_t it, const std::string& what) {
    result.log.push_back("iteration " + std::to_string(it) + ": " + what);
  };
  note(0, "start objective " + std::to_string(state.objective()));

  auto finish = [&](std::uint64_t it) {
    result.iterations = it;
    auto w = to_witness(state, options, it);
    if (!verify_witness(w).all_passed()) throw std::logic_error("search_witness: witness failed verification");
    result.witness = std::move(w);
    note(it, "witness found");
  };

  const double span = static_cast<double>(std::max<std::uint64_t>(options.cycle_length, 1));
  for (std::uint64_t it = 0; it < options.budget; ++it) {
    const double phase = static_cast<double>(it % options.cycle_length) / span;
    const double temperature = std::max(options.end_temperature, options.start_temperature * (1.0 - phase));
    const int before = state.objective();
    if (rng.index(2) == 0) {
      const auto f = static_cast<std::size_t>(rng.index(state.triangulation().face_count()));
      const int k = static_cast<int>(rng.index(3));
      const auto flip = state.triangulation().flip_candidate(f, k);
      if (!flip) continue;
      state.flip(*flip);
      const int delta = state.objective() - before;
      if (delta < 0 && !(rng.unit() < std::exp(delta / temperature))) state.unflip(*flip);
    } else {
      const int u = static_cast<int>(rng.index(AnnealState::kVertices));
      const int v = static_cast<int>(rng.index(AnnealState::kVertices));
      if (state.labels()[u] == state.labels()[v]) continue;
      state.swap_labels(u, v);
      const int delta = state.objective() - before;
      if (delta < 0 && !(rng.unit() < std::exp(delta / temperature))) state.swap_labels(u, v);
    }
    if (state.objective() > result.best_objective) {
      result.best_objective = state.objective();
      note(it, "best objective " + std::to_string(result.best_objective));
      if (result.best_objective == kMaxObjective) {
        finish(it + 1);
        return result;
      }
      if (result.best_objective >= options.polish_threshold && polish(state)) {
        result.best_objective = kMaxObjective;
        note(it, "closed by two-move polish");
        finish(it + 1);
        return result;
      }
    }
  }
  result.iterations = options.budget;
  note(options.budget, "budget exhausted at objective " + std::to_string(result.best_objective));
  return result;
}

Witness2Pire witness_from_json(const nlohmann::json& j) {
  Witness2Pire w;
  w.map = io::paired_graph_from_json(j, {"designated_pairs", "provenance"});
  if (!j.contains("designated_pairs") || !j["designated_pairs"].is_array()) {
    throw InputError("witness is missing the designated_pairs array");
  }
  for (const auto& p : j["designated_pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw InputError("designated pairs must be [vertex, vertex] arrays");
    }
    const auto a = w.map.graph.find_vertex(p[0].get<std::string>());
    const auto b = w.map.graph.find_vertex(p[1].get<std::string>());
    if (!a || !b || w.map.pairing.partner(*a) != *b) {
      throw InputError("designated pair is not a pair of the map");
    }
    w.designated_pairs.push_back(w.map.pairing.pair_of(*a));
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_object()) throw InputError("provenance must be an object");
    w.provenance = j["provenance"];
  }
  return w;
}

nlohmann::json to_json(const Witness2Pire& w) {
  auto j = io::to_json(w.map);
  j["designated_pairs"] = nlohmann::json::array();
  for (auto p : w.designated_pairs) {
    const auto& [a, b] = w.map.pairing.pair(p);
    j["designated_pairs"].push_back({w.map.graph.vertex_name(a), w.map.graph.vertex_name(b)});
  }
  j["provenance"] = w.provenance;
  return j;
}

}  // namespace pire
