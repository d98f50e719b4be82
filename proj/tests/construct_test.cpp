#include <gtest/gtest.h>

#include <map>
#include <set>

#include "pire/colour/chromatic.hpp"
#include "pire/construct/augment.hpp"
#include "pire/construct/generators.hpp"
#include "pire/construct/inverse_link.hpp"
#include "pire/construct/pipeline.hpp"
#include "pire/construct/seal.hpp"
#include "pire/construct/trails.hpp"
#include "pire/construct/triangulation.hpp"
#include "pire/construct/witness.hpp"
#include "pire/core/error.hpp"
#include "pire/core/io.hpp"
#include "pire/core/link.hpp"
#include "pire/testkit/fixtures.hpp"

namespace pire {
namespace {

const std::string kWitnessPath = std::string(PIRE_DATA_DIR) + "/k12_pire.json";

Witness2Pire shipped_witness() { return witness_from_json(io::read_json_file(kWitnessPath)); }

// Vertices named by `names`, edges given as (end0, end1), trivial rotation
// (fine whenever every degree is at most 2).
PairedGraph small_map(std::vector<std::string> names, std::vector<std::pair<VertexId, VertexId>> edges,
                      std::vector<std::array<VertexId, 2>> pairs) {
  PairedGraph pg;
  for (auto& n : names) pg.graph.add_vertex(n);
  for (std::size_t i = 0; i < edges.size(); ++i) pg.graph.add_edge("e" + std::to_string(i), edges[i].first, edges[i].second);
  pg.pairing = Pairing(names.size(), pairs);
  pg.rotation = RotationSystem{pg.graph.incidence()};
  return pg;
}

std::set<std::pair<PairId, PairId>> cross_adjacency(const PairedGraph& pg) {
  std::set<std::pair<PairId, PairId>> out;
  for (const auto& e : simple_quotient(pg).edges()) out.insert({e.end0, e.end1});
  return out;
}

void expect_valid_decomposition(const PairedGraph& pg, const std::vector<PiTrail>& trails) {
  std::vector<int> uses(pg.graph.edge_count(), 0);
  for (const auto& t : trails) {
    ASSERT_FALSE(t.edges.empty());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      ++uses[t.edges[i].edge];
      const auto& next = t.edges[(i + 1) % t.edges.size()];
      EXPECT_EQ(pg.graph.vertex_of(next.tail_end()), pg.pairing.partner(pg.graph.vertex_of(t.edges[i].head_end())));
    }
  }
  for (int u : uses) EXPECT_EQ(u, 1);
}

TEST(Triangulation, RandomTriangulationsArePlanar) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    auto t = Triangulation::random(4 + seed, rng);
    for (int i = 0; i < 200; ++i) {
      if (auto flip = t.flip_candidate(rng.index(t.face_count()), static_cast<int>(rng.index(3)))) t.apply(*flip);
    }
    Multigraph g;
    RotationSystem rot;
    t.to_embedded_graph(g, rot);
    EXPECT_EQ(g.edge_count(), 3 * g.vertex_count() - 6);
    const auto report = genus_check(g, rot);
    EXPECT_TRUE(report.is_planar_embedding());
    EXPECT_EQ(report.total_faces(), 2 * g.vertex_count() - 4);
    EXPECT_FALSE(g.has_parallel_edges());
  }
}

TEST(Augment, DoublesFaithfulInput) {
  // 4-cycle a-b-c-d with pairs {a,c}, {b,d}: already faithful
  const auto pg = small_map({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{0, 2}, {1, 3}});
  const auto out = make_degree_faithful(pg);
  EXPECT_EQ(out.graph.edge_count(), 8u);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(out.graph.degree(v), 4u);
  EXPECT_EQ(out.graph.edge(4).name, "e0'");
}

TEST(Augment, PadsTheLowerDegreeMemberWithLoops) {
  // u has degree 1, v has degree 3 (edges to a, b, c)
  const auto pg = small_map({"u", "v", "a", "b", "c", "w"}, {{0, 2}, {1, 2}, {1, 3}, {1, 4}},
                            {{0, 1}, {2, 5}, {3, 4}});
  PairedGraph planar = pg;
  planar.rotation = RotationSystem{pg.graph.incidence()};  // a star plus a pendant: any order is planar
  const auto out = make_degree_faithful(planar);
  EXPECT_EQ(out.graph.degree(0), 6u);
  EXPECT_EQ(out.graph.degree(1), 6u);
  std::size_t loops_at_u = 0;
  for (const auto& e : out.graph.edges()) loops_at_u += e.is_loop() && e.end0 == 0;
  EXPECT_EQ(loops_at_u, 2u);
  EXPECT_TRUE(is_degree_faithful(out));
}

TEST(Augment, SinglePairWithoutEdgesIsUnchanged) {
  const auto pg = small_map({"u", "v"}, {}, {{0, 1}});
  const auto out = make_degree_faithful(pg);
  EXPECT_EQ(out.graph.edge_count(), 0u);
  EXPECT_THROW(make_degree_faithful(PairedGraph{pg.graph, pg.pairing, std::nullopt}), DomainError);
}

TEST(Augment, PreservesGenusAndCrossAdjacency) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pg = random_planar_paired_graph(seed, 1 + seed % 40);
    const auto out = make_degree_faithful(pg);
    EXPECT_TRUE(is_degree_faithful(out));
    EXPECT_TRUE(has_planarity_certificate(out));
    EXPECT_EQ(cross_adjacency(out), cross_adjacency(pg));
    if (seed % 10 == 0) EXPECT_EQ(pair_chromatic_number(out).k, pair_chromatic_number(pg).k);
  }
}

TEST(PiTrails, SingleEdge) {
  const auto pg = small_map({"u", "v"}, {{0, 1}}, {{0, 1}});
  const auto trails = pi_trail_decomposition(pg);
  ASSERT_EQ(trails.size(), 1u);
  EXPECT_EQ(trails[0].edges.size(), 1u);
  expect_valid_decomposition(pg, trails);
}

TEST(PiTrails, TwoParallelEdges) {
  const auto pg = small_map({"u", "v"}, {{0, 1}, {0, 1}}, {{0, 1}});
  const auto trails = pi_trail_decomposition(pg);
  std::size_t total = 0;
  for (const auto& t : trails) total += t.edges.size();
  EXPECT_EQ(total, 2u);
  expect_valid_decomposition(pg, trails);
}

TEST(PiTrails, RandomDegreeFaithfulMaps) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pg = make_degree_faithful(random_planar_paired_graph(seed, 1 + seed % 30));
    expect_valid_decomposition(pg, pi_trail_decomposition(pg));
  }
  const auto link = make_degree_faithful([] {
    auto pg = link_graph(testkit::triangle_complex());
    pg.rotation = RotationSystem{pg.graph.incidence()};
    return pg;
  }());
  expect_valid_decomposition(link, pi_trail_decomposition(link));
}

TEST(PiTrails, RejectsUnfaithfulPairings) {
  const auto pg = small_map({"u", "v", "w", "x"}, {{0, 2}}, {{0, 1}, {2, 3}});
  EXPECT_THROW(pi_trail_decomposition(pg), DomainError);
}

TEST(InverseLink, SingleEdge) {
  const auto pg = small_map({"u", "v"}, {{0, 1}}, {{0, 1}});
  const auto c = inverse_link(pg);
  EXPECT_EQ(c.kind, CellKind::punctured);
  ASSERT_EQ(c.skeleton.vertex_count(), 1u);
  ASSERT_EQ(c.skeleton.edge_count(), 1u);
  EXPECT_TRUE(c.skeleton.edge(0).is_loop());
  EXPECT_EQ(c.skeleton.edge(0).name, "e[u|v]");
  ASSERT_EQ(c.cells.size(), 1u);
  EXPECT_EQ(c.cells[0].length(), 1u);
  const auto link = link_graph(c);
  ASSERT_EQ(link.graph.edge_count(), 1u);
  EXPECT_TRUE(equal_under_identification(link, pg, inverse_link_identification(pg)));
}

TEST(InverseLink, AlternatingFourCycle) {
  const auto pg = small_map({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{0, 2}, {1, 3}});
  const auto c = inverse_link(pg);
  EXPECT_EQ(c.skeleton.edge_count(), 2u);
  std::size_t steps = 0;
  for (const auto& w : c.cells) steps += w.length();
  EXPECT_EQ(steps, 4u);
  EXPECT_TRUE(equal_under_identification(link_graph(c), pg, inverse_link_identification(pg)));
}

TEST(InverseLink, NoEdges) {
  const auto pg = small_map({"a", "b", "c", "d"}, {}, {{0, 1}, {2, 3}});
  const auto c = inverse_link(pg);
  EXPECT_EQ(c.skeleton.edge_count(), 2u);
  EXPECT_TRUE(c.cells.empty());
  EXPECT_EQ(link_graph(c).graph.edge_count(), 0u);
}

TEST(InverseLink, Preconditions) {
  EXPECT_THROW(inverse_link(small_map({"u", "v", "w", "x"}, {{0, 2}}, {{0, 1}, {2, 3}})), DomainError);
  auto pg = small_map({"u", "v"}, {{0, 1}}, {{0, 1}});
  pg.rotation.reset();
  EXPECT_THROW(inverse_link(pg), DomainError);
}

TEST(InverseLink, RoundTripOnRandomMaps) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pg = make_degree_faithful(random_planar_paired_graph(seed + 77, 1 + seed % 40));
    const auto link = link_graph(inverse_link(pg));
    ASSERT_TRUE(equal_under_identification(link, pg, inverse_link_identification(pg))) << "seed " << seed;
  }
}

TEST(Identification, DetectsDifferences) {
  const auto pg = small_map({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{0, 2}, {1, 3}});
  auto link = link_graph(inverse_link(pg));
  const auto id = inverse_link_identification(pg);
  link.graph.add_edge("extra", 0, 1);
  EXPECT_FALSE(equal_under_identification(link, pg, id));
}

TEST(Seal, LengthsAndStepSequence) {
  const auto loop = seal(testkit::one_loop_complex());
  EXPECT_EQ(loop.kind, CellKind::genuine);
  ASSERT_EQ(loop.cells[0].length(), 4u);

  auto tri = testkit::triangle_complex();
  tri.kind = CellKind::punctured;
  const auto sealed = seal(tri);
  // W1 W2 W3 W1 W1^- W3^- W2^- W1^-
  const std::vector<Step> expected = {{0, 0}, {1, 0}, {2, 0}, {0, 0}, {0, 1}, {2, 1}, {1, 1}, {0, 1}};
  EXPECT_EQ(sealed.cells[0].steps, expected);
  EXPECT_EQ(link_graph(sealed).graph.vertex_count(), link_graph(tri).graph.vertex_count());
}

TEST(Seal, OnlyAddsLinkEdges) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = testkit::random_complex(seed, 6, 4, 6);
    const auto sealed = seal(c);
    const auto before = link_graph(c);
    const auto after = link_graph(sealed);
    EXPECT_TRUE(edge_multiset_contains(after.graph, before.graph));
    for (std::size_t i = 0; i < c.cells.size(); ++i) EXPECT_EQ(sealed.cells[i].length(), 2 * c.cells[i].length() + 2);
    EXPECT_GE(edge_chromatic_number_complex(sealed).k, edge_chromatic_number_complex(c).k);
  }
}

TEST(Witness, ShippedWitnessPasses) {
  const auto report = verify_witness(shipped_witness());
  ASSERT_EQ(report.checks.size(), 4u);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Witness, DeletedAdjacencyFailsK12) {
  auto w = shipped_witness();
  std::vector<bool> drop(w.map.graph.edge_count(), false);
  drop[0] = true;
  remove_edges(w.map.graph, *w.map.rotation, drop);
  const auto report = verify_witness(w);
  EXPECT_TRUE(report.checks[0].passed);
  EXPECT_FALSE(report.checks[2].passed);
  EXPECT_EQ(report.first_failure()->name, "k12");
}

TEST(Witness, CorruptedRotationFailsPlanarity) {
  auto w = shipped_witness();
  auto& cyc = w.map.rotation->order[0];
  std::swap(cyc[0], cyc[1]);
  const auto report = verify_witness(w);
  EXPECT_FALSE(report.checks[0].passed);
  EXPECT_EQ(report.first_failure()->name, "planar");
  EXPECT_TRUE(report.checks[3].passed);  // chromatic number does not depend on the embedding
}

TEST(Witness, JsonRoundTrip) {
  const auto j = io::read_json_file(kWitnessPath);
  EXPECT_EQ(to_json(witness_from_json(j)), j);
  auto bad = j;
  bad["designated_pairs"][0] = {"v0", "v0"};
  EXPECT_THROW(witness_from_json(bad), InputError);
}

TEST(WitnessSearch, ReproducesTheShippedWitness) {
  const auto shipped = io::read_json_file(kWitnessPath);
  SearchOptions options;
  options.seed = shipped["provenance"]["seed"].get<std::uint64_t>();
  options.budget = shipped["provenance"]["budget"].get<std::uint64_t>();
  const auto r = search_witness(options);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.best_objective, kMaxObjective);
  EXPECT_EQ(to_json(*r.witness), shipped);
}

TEST(WitnessSearch, BudgetExhaustionReportsBestObjective) {
  SearchOptions options;
  options.seed = 5;
  options.budget = 20'000;
  const auto a = search_witness(options);
  const auto b = search_witness(options);
  EXPECT_FALSE(a.witness.has_value());
  EXPECT_LE(a.best_objective, kMaxObjective);
  EXPECT_GT(a.best_objective, 0);
  EXPECT_EQ(a.log, b.log);
}

TEST(WitnessSearch, InPairEdgesCapTheObjective) {
  // On a 24-vertex triangulation every in-pair edge is one of the 66 edges
  // that no longer realizes a cross-pair adjacency.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    PairedGraph pg;
    RotationSystem rot;
    Triangulation::random(24, rng).to_embedded_graph(pg.graph, rot);
    std::vector<VertexId> order(24);
    for (VertexId v = 0; v < 24; ++v) order[v] = v;
    rng.shuffle(order.begin(), order.end());
    std::vector<std::array<VertexId, 2>> pairs;
    for (std::size_t i = 0; i < 24; i += 2) pairs.push_back({order[i], order[i + 1]});
    pg.pairing = Pairing(24, pairs);
    int in_pair = 0;
    for (const auto& e : pg.graph.edges()) in_pair += pg.pairing.pair_of(e.end0) == pg.pairing.pair_of(e.end1);
    EXPECT_LE(cross_pair_objective(pg), kMaxObjective - in_pair);
  }
}

TEST(Generator, SmallAndRandomMapsArePlanar) {
  const auto one = random_planar_paired_graph(1, 1);
  EXPECT_EQ(one.graph.vertex_count(), 2u);
  EXPECT_TRUE(has_planarity_certificate(one));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto pg = random_planar_paired_graph(seed, 1 + seed % 60);
    EXPECT_EQ(pg.graph.vertex_count(), 2 * (1 + seed % 60));
    EXPECT_TRUE(has_planarity_certificate(pg));
  }
  EXPECT_EQ(io::to_json(random_planar_paired_graph(42, 17)), io::to_json(random_planar_paired_graph(42, 17)));
}

TEST(Pipeline, ShippedWitnessGivesTwelveChromaticComplex) {
  const auto w = shipped_witness();
  const auto r = build_non_11_colourable(w);
  EXPECT_EQ(r.exact.k, 12);
  EXPECT_EQ(r.clique_lower_bound, 12);
  EXPECT_EQ(r.sealed.kind, CellKind::genuine);
  EXPECT_EQ(r.sealed.skeleton.vertex_count(), 1u);
  EXPECT_EQ(r.sealed.skeleton.edge_count(), 12u);
  EXPECT_TRUE(equal_under_identification(link_graph(r.punctured), r.augmented, inverse_link_identification(r.augmented)));
  EXPECT_TRUE(is_valid_complex_colouring(r.sealed, r.heawood));
  EXPECT_EQ(r.heawood.used(), 12);
  EXPECT_FALSE(is_simplicial(r.sealed));
}

TEST(Pipeline, RejectsBrokenWitness) {
  auto w = shipped_witness();
  std::swap(w.map.rotation->order[3][0], w.map.rotation->order[3][1]);
  EXPECT_THROW(build_non_11_colourable(w), DomainError);
}

}  // namespace
}  // namespace pire
