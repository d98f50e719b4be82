#include "pire/testkit/acceptance.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "pire/colour/chromatic.hpp"
#include "pire/colour/heawood.hpp"
#include "pire/construct/augment.hpp"
#include "pire/construct/generators.hpp"
#include "pire/construct/inverse_link.hpp"
#include "pire/construct/pipeline.hpp"
#include "pire/construct/seal.hpp"
#include "pire/core/io.hpp"
#include "pire/core/link.hpp"
#include "pire/testkit/fixtures.hpp"
#include "pire/testkit/oracles.hpp"

namespace pire::testkit {

namespace {

struct Outcome {
  bool passed = false;
  bool blocked = false;
  std::string detail;
};

std::optional<Witness2Pire> load_witness(const std::filesystem::path& path, std::string& why) {
  if (path.empty() || !std::filesystem::exists(path)) {
    why = "witness file '" + path.string() + "' not found";
    return std::nullopt;
  }
  return witness_from_json(io::read_json_file(path));
}

Outcome pipeline_reproduction(const AcceptanceOptions& opt) {
  std::string why;
  const auto w = load_witness(opt.witness_path, why);
  if (!w) return {false, true, why};
  const auto r = build_non_11_colourable(*w);
  const bool ok = r.exact.k == 12 && r.clique_lower_bound == 12 && r.heawood.used() <= 12;
  std::ostringstream os;
  os << "sealed complex: " << r.sealed.skeleton.edge_count() << " edges, " << r.sealed.cells.size()
     << " cells; exact edge-chromatic " << r.exact.k << ", K" << r.clique_lower_bound
     << " lower bound, Heawood upper bound " << r.heawood.used();
  return {ok, false, os.str()};
}

Outcome witness_verification(const AcceptanceOptions& opt) {
  std::string why;
  const auto w = load_witness(opt.witness_path, why);
  if (!w) return {false, true, why};
  const auto report = verify_witness(*w);
  std::ostringstream os;
  for (const auto& c : report.checks) os << (os.tellp() > 0 ? " " : "") << c.name << "=" << (c.passed ? "pass" : "FAIL");
  return {report.all_passed(), false, os.str()};
}

Outcome three_way_equality() {
  std::size_t checked = 0, mismatches = 0;
  std::string first_mismatch;
  auto check = [&](const TwoComplex& c) {
    const int m = static_cast<int>(c.skeleton.edge_count());
    const int brute = brute_force_edge_chromatic(c, std::max(m, 1));
    const auto link = link_graph(c);
    const auto pair = pair_chromatic_number(link);
    const auto quotient = simple_quotient(link);
    const int chi = chromatic_number(quotient).k;
    const int naive = naive_chromatic_number(quotient);
    const bool ok = brute == pair.k && pair.k == chi && chi == naive && is_valid_pair_colouring(link, pair.witness);
    ++checked;
    if (!ok && mismatches++ == 0) {
      first_mismatch = "complex #" + std::to_string(checked) + ": brute " + std::to_string(brute) + ", pair " +
                       std::to_string(pair.k) + ", quotient " + std::to_string(chi);
    }
  };
  for_each_small_complex(3, 2, 4, check);
  check(triangle_complex());
  check(tetrahedron_complex());
  std::ostringstream os;
  os << checked << " complexes, " << mismatches << " mismatches";
  if (mismatches) os << "; first: " << first_mismatch;
  return {mismatches == 0, false, os.str()};
}

Outcome heawood_random() {
  constexpr int kSamples = 1000;
  int failures = 0, max_degree = 0, max_colours = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto pg = random_planar_paired_graph(1000 + i, 1 + i % 100);
    const auto order = heawood_degeneracy_order(pg);
    const auto colours = heawood_colour_12(pg);
    for (int d : order.degrees) max_degree = std::max(max_degree, d);
    max_colours = std::max(max_colours, colours.used());
    const bool euler = min_simple_degree(simple_quotient(pg)) <= 11;
    if (!is_valid_pair_colouring(pg, colours) || colours.used() > 12 || !euler ||
        *std::max_element(order.degrees.begin(), order.degrees.end()) > 11) {
      ++failures;
    }
  }
  std::ostringstream os;
  os << kSamples << " maps, " << failures << " failures, max elimination degree " << max_degree
     << ", max colours used " << max_colours;
  return {failures == 0, false, os.str()};
}

// Shared by the round-trip and sealing criteria.
std::vector<PairedGraph> degree_faithful_corpus() {
  std::vector<PairedGraph> out;
  for (int i = 0; i < 60; ++i) out.push_back(make_degree_faithful(random_planar_paired_graph(5000 + i, 1 + i % 30)));
  return out;
}

Outcome inverse_link_round_trip() {
  const auto corpus = degree_faithful_corpus();
  int failures = 0;
  for (const auto& pg : corpus) {
    const auto link = link_graph(inverse_link(pg));
    if (!equal_under_identification(link, pg, inverse_link_identification(pg))) ++failures;
  }
  return {failures == 0, false,
          std::to_string(corpus.size()) + " degree-faithful maps, " + std::to_string(failures) + " mismatches"};
}

Outcome sealing_invariants() {
  const auto corpus = degree_faithful_corpus();
  int failures = 0;
  std::size_t cells = 0;
  for (const auto& pg : corpus) {
    const auto punctured = inverse_link(pg);
    const auto sealed = seal(punctured);
    const auto before = link_graph(punctured);
    const auto after = link_graph(sealed);
    bool ok = std::equal(before.graph.vertex_names().begin(), before.graph.vertex_names().end(),
                         after.graph.vertex_names().begin(), after.graph.vertex_names().end()) &&
              edge_multiset_contains(after.graph, before.graph) && sealed.kind == CellKind::genuine &&
              sealed.cells.size() == punctured.cells.size();
    for (std::size_t i = 0; ok && i < sealed.cells.size(); ++i) {
      ok = sealed.cells[i].length() == 2 * punctured.cells[i].length() + 2;
    }
    cells += sealed.cells.size();
    if (!ok) ++failures;
  }
  return {failures == 0, false,
          std::to_string(corpus.size()) + " complexes (" + std::to_string(cells) + " cells), " +
              std::to_string(failures) + " failures"};
}

Outcome solver_soundness() {
  constexpr int kSamples = 600;
  int failures = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto g = random_graph(9000 + i, i % 9, 0.1 + 0.8 * ((i * 37) % 100) / 100.0);
    if (chromatic_number(g).k != naive_chromatic_number(g)) ++failures;
  }
  const int k12 = chromatic_number(complete_graph(12)).k;
  const int octa = chromatic_number(octahedron()).k;
  const int pete = chromatic_number(petersen()).k;
  std::ostringstream os;
  os << kSamples << " random graphs, " << failures << " mismatches; K12 " << k12 << ", octahedron " << octa
     << ", Petersen " << pete;
  return {failures == 0 && k12 == 12 && octa == 3 && pete == 3, false, os.str()};
}

Outcome desk_classics() {
  const auto tet = tetrahedron_complex();
  const auto tri = triangle_complex();
  const auto a = edge_chromatic_number_complex(tet);
  const auto b = edge_chromatic_number_complex(tri);
  const bool ok = a.k == 3 && b.k == 3 && is_valid_complex_colouring(tet, a.witness) &&
                  is_valid_complex_colouring(tri, b.witness);
  return {ok, false, "tetrahedron " + std::to_string(a.k) + ", triangle " + std::to_string(b.k)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "pipeline builds a 2-complex with edge-chromatic number 12", 10.0,
       [&] { return pipeline_reproduction(options); }},
      {2, "shipped witness passes all four checks", 5.0, [&] { return witness_verification(options); }},
      {3, "edge-, pair- and quotient-chromatic numbers coincide on small complexes", 60.0, three_way_equality},
      {4, "Heawood 12-colouring on 1000 random 2-pire maps", 60.0, heawood_random},
      {5, "inverse link round-trip on random degree-faithful maps", 10.0, inverse_link_round_trip},
      {6, "sealing preserves link vertices and only adds link edges", 0.0, sealing_invariants},
      {7, "exact solver agrees with exhaustive oracle", 0.0, solver_soundness},
      {8, "tetrahedron and triangle complexes are 3-chromatic", 1.0, desk_classics},
  };
  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria) {
    CriterionResult r;
    r.id = criterion.id;
    r.title = criterion.title;
    r.time_limit = criterion.limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criterion.run();
    } catch (const std::exception& ex) {
      out = {false, false, std::string("exception: ") + ex.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.blocked = out.blocked;
    r.detail = out.detail;
    r.passed = out.passed && !out.blocked && (criterion.limit <= 0.0 || r.seconds <= criterion.limit);
    if (out.passed && !r.passed) r.detail += " (over time limit)";
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.blocked ? "BLOCKED" : r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.time_limit > 0) os << " / limit " << std::setprecision(0) << r.time_limit << " s";
  os << "): " << r.detail;
  return os.str();
}

}  // namespace pire::testkit
