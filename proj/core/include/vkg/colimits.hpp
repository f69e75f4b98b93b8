// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vkg/morphism.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

struct CoproductResult {
  GroupoidPresentation presentation;
  std::vector<PresentationMorphism> injections;
};

// Disjoint union with injective renaming "<index>:<id>".
CoproductResult coproduct(const std::vector<GroupoidPresentation>& ps);

struct CoequalizerResult {
  GroupoidPresentation presentation;
  PresentationMorphism quotient_map; // from mid onto the coequalizer
};

// Presentation-level coequalizer of alpha, beta : src -> mid. Objects of mid
// are merged along alpha(x) ~ beta(x) (class representative: lexicographic
// least), arrows re-anchor to class representatives, and each generator g of
// src contributes the relator pair (alpha(g), beta(g)).
CoequalizerResult coequalize(const GroupoidPresentation& src, const GroupoidPresentation& mid,
                             const PresentationMorphism& alpha, const PresentationMorphism& beta);

struct VertexGroupData {
  GroupoidPresentation group; // one object
  // Every arrow of the component, rewritten as a loop word over the
  // surviving generators (tree arrows become identities).
  std::map<std::string, Word> loop_of_arrow;
  std::set<std::string> component; // objects of the component of the base point
};

// Component of x, breadth-first spanning tree from x (lexicographic
// tie-break on arrow ids), tree contraction; generators and relators
// re-anchored as loops at x.
VertexGroupData vertex_group_data(const GroupoidPresentation& p, const std::string& x);

GroupoidPresentation vertex_group(const GroupoidPresentation& p, const std::string& x);

// Rewrites a word of p whose endpoints lie in the component of x into the
// vertex group at x (conjugation by tree paths is implicit in the loops).
Word reanchor_word(const VertexGroupData& vg, const Word& w);

} // namespace vkg
