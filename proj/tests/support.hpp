// SPDX-License-Identifier: Apache-2.0
// Shared test utilities: independent oracles and generators. Everything here
// must stay independent of the production code paths it is used to check.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vkg/complex.hpp"
#include "vkg/cover.hpp"
#include "vkg/instance.hpp"
#include "vkg/presentation.hpp"
#include "vkg/rng.hpp"
#include "vkg/snf.hpp"

namespace vkgtest {

// Abelian invariants via determinantal divisors: D_k = gcd of all k x k
// minors, invariant factor d_k = D_k / D_{k-1}. A different route than the
// production Smith reduction, used as its oracle. `cols` is the generator
// count (an empty matrix cannot carry it).
vkg::AbelianInvariants snf_oracle(const vkg::IntMatrix& m, std::size_t cols);

// Exact integer determinant by cofactor expansion in 128-bit arithmetic.
__int128 determinant(const std::vector<std::vector<long long>>& m);

// Component count of the pair graph of two graph morphisms into a common
// base, built directly from vertex/edge lists (no fiber_product involved).
struct GraphMorphism {
  // vertex -> image vertex; edges as (id, src, dst) with image edge id
  std::map<std::string, std::string> vertex_image;
  std::vector<std::array<std::string, 3>> edges; // id, src, dst
  std::map<std::string, std::string> edge_image;
};
std::size_t pair_graph_components(const GraphMorphism& p, const GraphMorphism& q);

// Random reduced word of p with endpoints anywhere; random walk over the
// generator graph.
vkg::Word random_word(const vkg::GroupoidPresentation& p, vkg::Rng& rng,
                      std::size_t max_len = 8);

// Random word from a given object (useful for loops and morphism tests).
vkg::Word random_word_from(const vkg::GroupoidPresentation& p, const std::string& src,
                           vkg::Rng& rng, std::size_t max_len = 8);

// One random sound Tietze move: add a consequence relator, add a defined
// generator, or eliminate an eligible generator. Returns a presentation of
// the same groupoid up to equivalence.
vkg::GroupoidPresentation random_tietze_move(const vkg::GroupoidPresentation& p, vkg::Rng& rng);
vkg::GroupoidPresentation random_tietze_moves(const vkg::GroupoidPresentation& p, vkg::Rng& rng,
                                              std::size_t count);

// Golden instances, constructed in code (the data/ corpus mirrors these).
vkg::InstanceDocument circle_two_arcs();        // S^1 as two arcs between two vertices
vkg::InstanceDocument circle_double_cover();    // hexagon over triangle, explicit sections
vkg::InstanceDocument point_instance();
vkg::InstanceDocument torus_instance();
vkg::InstanceDocument rp2_instance();
vkg::InstanceDocument klein_instance();
vkg::InstanceDocument wedge_instance();
vkg::InstanceDocument figure_eight_instance();

// name -> document, in the order used by the acceptance suites
std::vector<std::pair<std::string, vkg::InstanceDocument>> golden_corpus();

std::string data_dir();

} // namespace vkgtest
