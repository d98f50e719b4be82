#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pire/core/paired_graph.hpp"

namespace pire {

/// A 2-pire map whose designated pairs are meant to be pairwise adjacent in
/// the simple quotient, making it 12-chromatic.
struct Witness2Pire {
  PairedGraph map;
  std::vector<PairId> designated_pairs;
  nlohmann::json provenance = nlohmann::json::object();
};

struct WitnessCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct WitnessReport {
  std::vector<WitnessCheck> checks;  // planar, perfect_pairing, k12, pair_chromatic_12

  bool all_passed() const;
  const WitnessCheck* first_failure() const;
};

/// Runs the four checks independently; never throws on bad data.
WitnessReport verify_witness(const Witness2Pire& w);

struct SearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 50'000'000;  // annealing iterations
  std::uint64_t cycle_length = 2'000'000;  // iterations per temperature sweep
  double start_temperature = 2.0;
  double end_temperature = 0.05;
  int polish_threshold = 64;  // run the exhaustive depth-2 polish at this objective
};

struct SearchResult {
  std::optional<Witness2Pire> witness;
  int best_objective = 0;
  std::uint64_t iterations = 0;
  std::vector<std::string> log;
};

/// Maximum number of distinct cross-pair adjacencies over 12 pairs.
inline constexpr int kMaxObjective = 66;

/// Number of distinct unordered pairs {p,q}, p != q, joined by an edge.
int cross_pair_objective(const PairedGraph& pg);

/// Anneals over (triangulation flips) x (label transpositions) on 24
/// vertices until all 66 pair-adjacencies appear, with a periodic reheat and
/// an exhaustive two-move polish near the top. Deterministic given options.
SearchResult search_witness(const SearchOptions& options);

/// Witness file = paired-graph file + "designated_pairs" ([[u, v]...]) and
/// "provenance" (free-form object).
Witness2Pire witness_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Witness2Pire& w);

}  // namespace pire
