#include "pire/construct/pipeline.hpp"

#include <algorithm>

#include "pire/colour/heawood.hpp"
#include "pire/construct/augment.hpp"
#include "pire/construct/inverse_link.hpp"
#include "pire/construct/seal.hpp"
#include "pire/core/error.hpp"
#include "pire/core/link.hpp"

namespace pire {

PipelineResult build_non_11_colourable(const Witness2Pire& witness) {
  const auto report = verify_witness(witness);
  if (const auto* failed = report.first_failure()) {
    throw DomainError("pipeline: witness check '" + failed->name + "' failed: " + failed->detail);
  }

  PipelineResult r;
  r.augmented = make_degree_faithful(witness.map);
  r.punctured = inverse_link(r.augmented);
  const auto punctured_link = link_graph(r.punctured);
  if (!equal_under_identification(punctured_link, r.augmented, inverse_link_identification(r.augmented))) {
    throw DomainError("pipeline: link graph of the punctured complex differs from the augmented map");
  }

  r.sealed = seal(r.punctured);
  const auto sealed_link = link_graph(r.sealed);
  if (sealed_link.graph.vertex_names().size() != punctured_link.graph.vertex_count() ||
      !std::equal(sealed_link.graph.vertex_names().begin(), sealed_link.graph.vertex_names().end(),
                  punctured_link.graph.vertex_names().begin())) {
    throw DomainError("pipeline: sealing changed the link-graph vertex set");
  }
  if (!edge_multiset_contains(sealed_link.graph, punctured_link.graph)) {
    throw DomainError("pipeline: sealing dropped a link edge");
  }

  // skeleton loop p of the sealed complex carries pair p of the augmented map
  const auto pair_colours = heawood_colour_12(r.augmented);
  r.heawood.palette_size = pair_colours.palette_size;
  r.heawood.colours = pair_colours.colours;
  if (!is_valid_complex_colouring(r.sealed, r.heawood)) {
    throw DomainError("pipeline: Heawood 12-colouring is not valid on the sealed complex");
  }

  r.exact = edge_chromatic_number_complex(r.sealed);
  r.clique_lower_bound = static_cast<int>(r.exact.log.clique.size());
  if (r.exact.k != 12 || r.clique_lower_bound != 12) {
    throw DomainError("pipeline: sealed complex has edge-chromatic number " + std::to_string(r.exact.k) +
                      " (clique bound " + std::to_string(r.clique_lower_bound) + "), expected 12");
  }
  return r;
}

}  // namespace pire
