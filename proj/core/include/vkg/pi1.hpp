// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>

#include "vkg/complex.hpp"
#include "vkg/fiber.hpp"
#include "vkg/morphism.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

// Edge-path groupoid of a 2-complex on a base vertex set: a spanning forest
// rel S (multi-source BFS, one tree per base point, lexicographic tie-break)
// is contracted; the non-forest edges survive as generators and the face
// boundaries as relators. Witness paths allow any edge path with base
// endpoints to be rewritten into the presentation (path_word) and back.
struct Pi1Presentation {
  GroupoidPresentation presentation;
  Complex2 complex;
  std::set<std::string> base;                   // objects = S-vertices present in the complex
  std::map<std::string, std::string> anchor;    // vertex -> its tree root in S
  std::map<std::string, EdgePath> tree_path;    // root -> vertex along the forest
  std::set<std::string> tree_edges;
  std::map<std::string, EdgePath> witness;      // generator -> edge path between base vertices
};

// Throws HypothesisError naming a representative vertex when some component
// misses S.
Pi1Presentation pi1(const Complex2& x, const BaseSet& s);

// Rewrites an edge path with S-endpoints through the forest contraction.
// Constant paths become identities; concatenation maps to composition.
Word path_word(const Pi1Presentation& p, const EdgePath& path);

// The coequalizer fork: alpha, beta induced by the two projections of
// E x_B E, gamma induced by the cover projection.
struct VkDiagram {
  Pi1Presentation lower;  // pi1 of E x_B E
  Pi1Presentation middle; // pi1 of E
  Pi1Presentation target; // pi1 of B
  PresentationMorphism alpha;
  PresentationMorphism beta;
  PresentationMorphism gamma;
};

// Everything run_vk and the weighted-path machinery need, built once.
struct VkSetting {
  CoverGeometry geometry;
  BaseSet base;
  std::set<std::string> s_total; // fiber of S in E
  std::set<std::string> s_ebe;   // fiber of S in E x_B E
  VkDiagram diagram;

  const SectionedCover& cover() const { return geometry.cover; }

  static VkSetting build(CoverGeometry geometry, const BaseSet& s);
};

VkDiagram induced_functors(const SectionedCover& c, const BaseSet& s);

} // namespace vkg
