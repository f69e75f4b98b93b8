// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "vkg/complex.hpp"
#include "vkg/cover.hpp"

namespace vkg {

struct FiberProduct {
  Complex2 total;
  CellMap pr1;
  CellMap pr2;
};

// Combinatorial pullback of p and q over their common codomain: cells are
// pairs with equal image, face boundaries matched letter by letter. Cell ids
// are "(x,y)".
FiberProduct fiber_product(const CellMap& p, const CellMap& q);

std::string pair_id(const std::string& a, const std::string& b);

// Connected components of the 1-skeleton. Each component is sorted, the list
// is sorted by representative (= least vertex).
std::vector<std::vector<std::string>> skeleton_components(const Complex2& x);

// Deterministic BFS path from start into the target set, lexicographic
// tie-break; HypothesisError when unreachable.
EdgePath path_to_base(const Complex2& x, const std::string& start,
                      const std::set<std::string>& targets);

struct HypothesisReport {
  struct Offender {
    std::string representative; // least vertex of the failing component
    std::string base;           // its image in the base complex
  };
  bool ok = true;
  std::vector<Offender> offenders;
};

// E, E x_B E, and E x_B E x_B E for a sectioned cover, with the projections
// actually used downstream.
struct CoverGeometry {
  SectionedCover cover;
  FiberProduct ebe;    // E x_B E
  CellMap ebe_to_base; // p o pr1 (= p o pr2 cellwise)
  FiberProduct triple; // (E x_B E) x_B E
  CellMap triple_to_base;

  static CoverGeometry build(const SectionedCover& c);
};

// The coequalizer hypothesis: the S-fiber meets every path-component of the
// fiber product.
HypothesisReport check_hypothesis(const CoverGeometry& g, const BaseSet& s);
HypothesisReport check_hypothesis(const SectionedCover& c, const BaseSet& s);

// Vertices of `x` lying over S under the given projection to the base.
std::set<std::string> fiber_of(const CellMap& to_base, const BaseSet& s);

} // namespace vkg
