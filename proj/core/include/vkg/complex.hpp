// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vkg/errors.hpp"

namespace vkg {

// One traversal of a directed edge; sign -1 walks it backwards.
struct EdgeStep {
  std::string edge;
  int sign = 1;

  friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

// A raw edge path. Unlike presentation words these are geometric and are
// never auto-reduced: weights and homotopy moves need the actual traversal.
struct EdgePath {
  std::vector<EdgeStep> steps;
  std::string src;
  std::string dst;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

EdgePath empty_path(const std::string& at);
EdgePath reverse_path(const EdgePath& p);
EdgePath concat_paths(const EdgePath& a, const EdgePath& b); // a then b
EdgePath remove_backtracks(EdgePath p);
std::string to_string(const EdgePath& p);

struct EdgeCell {
  std::string id;
  std::string src;
  std::string dst;

  friend bool operator==(const EdgeCell&, const EdgeCell&) = default;
};

struct FaceCell {
  std::string id;
  EdgePath boundary; // closed

  friend bool operator==(const FaceCell&, const FaceCell&) = default;
};

// Finite combinatorial 2-complex.
class Complex2 {
public:
  Complex2() = default;

  static Complex2 make(std::vector<std::string> vertices, std::vector<EdgeCell> edges,
                       std::vector<FaceCell> faces);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgeCell>& edges() const { return edges_; }
  const std::vector<FaceCell>& faces() const { return faces_; }

  bool has_vertex(const std::string& v) const { return vertex_set_.count(v) > 0; }
  bool has_edge(const std::string& e) const { return edge_index_.count(e) > 0; }
  bool has_face(const std::string& f) const { return face_index_.count(f) > 0; }
  const EdgeCell& edge(const std::string& id) const;
  const FaceCell& face(const std::string& id) const;

  std::string step_src(const EdgeStep& s) const;
  std::string step_dst(const EdgeStep& s) const;

  void validate_path(const EdgePath& p) const;
  EdgePath path_at(std::vector<EdgeStep> steps, const std::string& at) const;

  bool empty() const { return vertices_.empty(); }

  friend bool operator==(const Complex2&, const Complex2&) = default;

private:
  std::vector<std::string> vertices_;
  std::vector<EdgeCell> edges_;
  std::vector<FaceCell> faces_;
  std::set<std::string> vertex_set_;
  std::map<std::string, std::size_t> edge_index_;
  std::map<std::string, std::size_t> face_index_;
};

// A subcomplex given by cell id sets, closed under boundaries.
struct Subcomplex {
  std::string name;
  std::set<std::string> vertices;
  std::set<std::string> edges;
  std::set<std::string> faces;

  bool contains_vertex(const std::string& v) const { return vertices.count(v) > 0; }
  bool contains_edge(const std::string& e) const { return edges.count(e) > 0; }
  bool contains_face(const std::string& f) const { return faces.count(f) > 0; }

  friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

// Undirected incidence lists, sorted by (edge id, forward first); the shared
// tie-break for every BFS in the project.
std::map<std::string, std::vector<std::pair<std::string, EdgeStep>>>
sorted_adjacency(const Complex2& x);

void validate_subcomplex(const Complex2& x, const Subcomplex& u);
Complex2 induced_complex(const Complex2& x, const Subcomplex& u);
Subcomplex whole_subcomplex(const Complex2& x, const std::string& name);

// Closed star of a vertex: incident edges and faces plus everything needed
// to close up.
Subcomplex star_closure(const Complex2& x, const std::string& v);

// Dimension-preserving cell map. Face images must match boundaries letter by
// letter; that strictness is what makes fiber products compute on the nose.
class CellMap {
public:
  CellMap() = default;

  static CellMap make(Complex2 domain, Complex2 codomain,
                      std::map<std::string, std::string> vertex_map,
                      std::map<std::string, std::string> edge_map,
                      std::map<std::string, std::string> face_map);

  static CellMap identity(const Complex2& x);

  const Complex2& domain() const { return domain_; }
  const Complex2& codomain() const { return codomain_; }
  const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }
  const std::map<std::string, std::string>& edge_map() const { return edge_map_; }
  const std::map<std::string, std::string>& face_map() const { return face_map_; }

  const std::string& map_vertex(const std::string& v) const;
  const std::string& map_edge(const std::string& e) const;
  const std::string& map_face(const std::string& f) const;

  EdgePath map_path(const EdgePath& p) const;

  friend bool operator==(const CellMap&, const CellMap&) = default;

private:
  Complex2 domain_;
  Complex2 codomain_;
  std::map<std::string, std::string> vertex_map_;
  std::map<std::string, std::string> edge_map_;
  std::map<std::string, std::string> face_map_;
};

// f after g.
CellMap compose(const CellMap& f, const CellMap& g);

// Base-point set: a subset of the vertices of the base complex.
struct BaseSet {
  std::set<std::string> vertices;

  static BaseSet all_of(const Complex2& x);
  static BaseSet of(std::initializer_list<std::string> vs);

  friend bool operator==(const BaseSet&, const BaseSet&) = default;
};

} // namespace vkg
