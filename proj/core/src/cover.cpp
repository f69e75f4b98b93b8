// SPDX-License-Identifier: Apache-2.0
#include "vkg/cover.hpp"

#include <algorithm>

namespace vkg {

const CoverPiece& SectionedCover::piece(const std::string& name) const {
  for (const auto& p : pieces)
    if (p.piece.name == name) return p;
  throw LookupError("cover: no piece named '" + name + "'");
}

const CoverPiece& SectionedCover::first_piece_with_edge(const std::string& e) const {
  for (const auto& p : pieces)
    if (p.piece.contains_edge(e)) return p;
  throw CoverageError("cover: no piece contains edge '" + e + "'", {"edge " + e});
}

const CoverPiece& SectionedCover::first_piece_with_vertex(const std::string& v) const {
  for (const auto& p : pieces)
    if (p.piece.contains_vertex(v)) return p;
  throw CoverageError("cover: no piece contains vertex '" + v + "'", {"vertex " + v});
}

SectionedCover cover_to_map(const Complex2& base, const std::vector<Subcomplex>& pieces) {
  for (const auto& u : pieces) validate_subcomplex(base, u);
  {
    std::vector<std::string> missing;
    auto covered_vertex = [&](const std::string& v) {
      return std::any_of(pieces.begin(), pieces.end(),
                         [&](const Subcomplex& u) { return u.contains_vertex(v); });
    };
    auto covered_edge = [&](const std::string& e) {
      return std::any_of(pieces.begin(), pieces.end(),
                         [&](const Subcomplex& u) { return u.contains_edge(e); });
    };
    auto covered_face = [&](const std::string& f) {
      return std::any_of(pieces.begin(), pieces.end(),
                         [&](const Subcomplex& u) { return u.contains_face(f); });
    };
    for (const auto& v : base.vertices())
      if (!covered_vertex(v)) missing.push_back("vertex " + v);
    for (const auto& e : base.edges())
      if (!covered_edge(e.id)) missing.push_back("edge " + e.id);
    for (const auto& f : base.faces())
      if (!covered_face(f.id)) missing.push_back("face " + f.id);
    if (!missing.empty()) {
      std::string msg = "cover_to_map: family does not cover the base;";
      for (const auto& m : missing) msg += " " + m;
      throw CoverageError(msg, std::move(missing));
    }
  }

  std::vector<std::string> vertices;
  std::vector<EdgeCell> edges;
  std::vector<FaceCell> faces;
  for (const auto& u : pieces) {
    const std::string prefix = u.name + ":";
    Complex2 part = induced_complex(base, u);
    for (const auto& v : part.vertices()) vertices.push_back(prefix + v);
    for (const auto& e : part.edges())
      edges.push_back(EdgeCell{prefix + e.id, prefix + e.src, prefix + e.dst});
    for (const auto& f : part.faces()) {
      EdgePath bd;
      bd.src = prefix + f.boundary.src;
      bd.dst = prefix + f.boundary.dst;
      for (const auto& s : f.boundary.steps) bd.steps.push_back(EdgeStep{prefix + s.edge, s.sign});
      faces.push_back(FaceCell{prefix + f.id, std::move(bd)});
    }
  }
  Complex2 total = Complex2::make(std::move(vertices), std::move(edges), std::move(faces));

  std::map<std::string, std::string> vm, em, fm;
  for (const auto& u : pieces) {
    const std::string prefix = u.name + ":";
    for (const auto& v : u.vertices) vm[prefix + v] = v;
    for (const auto& e : u.edges) em[prefix + e] = e;
    for (const auto& f : u.faces) fm[prefix + f] = f;
  }
  CellMap projection = CellMap::make(total, base, std::move(vm), std::move(em), std::move(fm));

  SectionedCover cover;
  cover.projection = projection;
  for (const auto& u : pieces) {
    const std::string prefix = u.name + ":";
    Complex2 part = induced_complex(base, u);
    std::map<std::string, std::string> svm, sem, sfm;
    for (const auto& v : u.vertices) svm[v] = prefix + v;
    for (const auto& e : u.edges) sem[e] = prefix + e;
    for (const auto& f : u.faces) sfm[f] = prefix + f;
    CellMap section = CellMap::make(part, total, std::move(svm), std::move(sem), std::move(sfm));
    cover.pieces.push_back(CoverPiece{u, std::move(section)});
  }
  return cover;
}

SectionReport verify_locally_sectionable(const SectionedCover& c) {
  SectionReport report;
  const Complex2& base = c.base();

  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };

  for (const auto& v : base.vertices()) {
    bool covered = std::any_of(c.pieces.begin(), c.pieces.end(),
                               [&](const CoverPiece& p) { return p.piece.contains_vertex(v); });
    if (!covered) fail("vertex " + v + " lies in no piece");
  }
  for (const auto& e : base.edges()) {
    bool covered = std::any_of(c.pieces.begin(), c.pieces.end(),
                               [&](const CoverPiece& p) { return p.piece.contains_edge(e.id); });
    if (!covered) fail("edge " + e.id + " lies in no piece");
  }
  for (const auto& f : base.faces()) {
    bool covered = std::any_of(c.pieces.begin(), c.pieces.end(),
                               [&](const CoverPiece& p) { return p.piece.contains_face(f.id); });
    if (!covered) fail("face " + f.id + " lies in no piece");
  }

  for (const auto& p : c.pieces) {
    try {
      validate_subcomplex(base, p.piece);
    } catch (const Error& e) {
      fail(e.what());
      continue;
    }
    if (!(p.section.codomain() == c.total())) {
      fail("section of piece " + p.piece.name + " does not land in the total space");
      continue;
    }
    // p o s_U = id_U, cell by cell
    for (const auto& v : p.piece.vertices) {
      const std::string& lifted = p.section.map_vertex(v);
      if (c.projection.map_vertex(lifted) != v)
        fail("piece " + p.piece.name + ": section breaks the identity on vertex " + v);
    }
    for (const auto& e : p.piece.edges) {
      const std::string& lifted = p.section.map_edge(e);
      if (c.projection.map_edge(lifted) != e)
        fail("piece " + p.piece.name + ": section breaks the identity on edge " + e);
    }
    for (const auto& f : p.piece.faces) {
      const std::string& lifted = p.section.map_face(f);
      if (c.projection.map_face(lifted) != f)
        fail("piece " + p.piece.name + ": section breaks the identity on face " + f);
    }
  }
  return report;
}

namespace {

struct LiftSearch {
  const CellMap& p;
  const Complex2& u_complex; // induced subcomplex of the base
  std::map<std::string, std::string> vm, em, fm;

  bool lift_vertices_and_edges(std::size_t edge_index);
  bool lift_remaining_components();
  bool lift_faces();

  bool assign_vertex(const std::string& v, const std::string& image) {
    auto it = vm.find(v);
    if (it != vm.end()) return it->second == image;
    vm[v] = image;
    return true;
  }
};

// Depth-first over the edges of U in declared order; vertices are pinned as
// edges are lifted, isolated vertices afterwards.
bool LiftSearch::lift_vertices_and_edges(std::size_t edge_index) {
  if (edge_index == u_complex.edges().size()) return lift_remaining_components();
  const EdgeCell& e = u_complex.edges()[edge_index];

  std::map<std::string, std::string> saved_vm = vm;
  for (const auto& cand : p.domain().edges()) {
    if (p.map_edge(cand.id) != e.id) continue;
    vm = saved_vm;
    if (!assign_vertex(e.src, cand.src) || !assign_vertex(e.dst, cand.dst)) continue;
    em[e.id] = cand.id;
    if (lift_vertices_and_edges(edge_index + 1)) return true;
  }
  vm = saved_vm;
  em.erase(e.id);
  return false;
}

bool LiftSearch::lift_remaining_components() {
  // vertices untouched by any edge of U
  std::vector<std::string> isolated;
  for (const auto& v : u_complex.vertices())
    if (!vm.count(v)) isolated.push_back(v);

  // each isolated vertex lifts independently; any preimage works, but the
  // choice must be deterministic
  std::map<std::string, std::string> saved = vm;
  for (const auto& v : isolated) {
    bool found = false;
    for (const auto& cand : p.domain().vertices()) {
      if (p.map_vertex(cand) == v) {
        vm[v] = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      vm = saved;
      return false;
    }
  }
  if (lift_faces()) return true;
  vm = saved;
  return false;
}

bool LiftSearch::lift_faces() {
  fm.clear();
  for (const auto& f : u_complex.faces()) {
    EdgePath lifted_boundary;
    lifted_boundary.src = vm.at(f.boundary.src);
    lifted_boundary.dst = vm.at(f.boundary.dst);
    for (const auto& s : f.boundary.steps)
      lifted_boundary.steps.push_back(EdgeStep{em.at(s.edge), s.sign});
    bool found = false;
    for (const auto& cand : p.domain().faces()) {
      if (p.map_face(cand.id) != f.id) continue;
      if (cand.boundary == lifted_boundary) {
        fm[f.id] = cand.id;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

} // namespace

std::optional<CellMap> find_section(const CellMap& p, const Subcomplex& u) {
  Complex2 part = induced_complex(p.codomain(), u);
  LiftSearch search{p, part, {}, {}, {}};
  if (!search.lift_vertices_and_edges(0)) return std::nullopt;
  return CellMap::make(part, p.domain(), std::move(search.vm), std::move(search.em),
                       std::move(search.fm));
}

std::optional<CellMap> find_global_section(const CellMap& p) {
  return find_section(p, whole_subcomplex(p.codomain(), "whole"));
}

SectionedCover star_cover(const CellMap& p) {
  SectionedCover cover;
  cover.projection = p;
  for (const auto& v : p.codomain().vertices()) {
    Subcomplex star = star_closure(p.codomain(), v);
    auto section = find_section(p, star);
    if (!section)
      throw StructuralError("star_cover: projection has no section over " + star.name +
                            "; the map is not locally sectionable over vertex stars");
    cover.pieces.push_back(CoverPiece{std::move(star), std::move(*section)});
  }
  return cover;
}

} // namespace vkg
