// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkg/complex.hpp"

namespace vkg {

// One declared piece of the cover with its chosen section s_U : U -> E,
// satisfying p o s_U = id_U cellwise.
struct CoverPiece {
  Subcomplex piece;
  CellMap section; // domain: induced_complex(base, piece), codomain: total space
};

// A cell map p : E -> B together with the finite family of base subcomplexes
// over which p is sectioned.
struct SectionedCover {
  CellMap projection;
  std::vector<CoverPiece> pieces;

  const Complex2& total() const { return projection.domain(); }
  const Complex2& base() const { return projection.codomain(); }

  const CoverPiece& piece(const std::string& name) const;
  // First declared piece containing the given cell; LookupError if none.
  const CoverPiece& first_piece_with_edge(const std::string& e) const;
  const CoverPiece& first_piece_with_vertex(const std::string& v) const;
};

// Builds E as the disjoint union of the pieces (cells renamed
// "<piece>:<cell>"), p induced by inclusions, sections the coproduct
// injections. CoverageError (naming the cells) when the family does not
// cover the base.
SectionedCover cover_to_map(const Complex2& base, const std::vector<Subcomplex>& pieces);

struct SectionReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Confirms cellwise coverage of the base and the section identities; reports
// every failing cell rather than throwing.
SectionReport verify_locally_sectionable(const SectionedCover& c);

// Backtracking lift search for a section of p over the subcomplex u;
// deterministic candidate order, nullopt when no section exists.
std::optional<CellMap> find_section(const CellMap& p, const Subcomplex& u);

std::optional<CellMap> find_global_section(const CellMap& p);

// Cover by the closed stars of all base vertices, sections found by search.
// Throws StructuralError naming the star when p is not sectionable over it.
SectionedCover star_cover(const CellMap& p);

} // namespace vkg
