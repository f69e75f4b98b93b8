// SPDX-License-Identifier: Apache-2.0
#include "vkg/complex.hpp"

#include <algorithm>
#include <sstream>

namespace vkg {

EdgePath empty_path(const std::string& at) { return EdgePath{{}, at, at}; }

EdgePath reverse_path(const EdgePath& p) {
  EdgePath r;
  r.src = p.dst;
  r.dst = p.src;
  r.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    r.steps.push_back(EdgeStep{it->edge, -it->sign});
  return r;
}

EdgePath concat_paths(const EdgePath& a, const EdgePath& b) {
  if (a.dst != b.src)
    throw CompositionError("concat_paths: paths do not meet (" + a.dst + " vs " + b.src + ")");
  EdgePath r;
  r.src = a.src;
  r.dst = b.dst;
  r.steps = a.steps;
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

EdgePath remove_backtracks(EdgePath p) {
  std::vector<EdgeStep> out;
  out.reserve(p.steps.size());
  for (auto& s : p.steps) {
    if (!out.empty() && out.back().edge == s.edge && out.back().sign == -s.sign)
      out.pop_back();
    else
      out.push_back(std::move(s));
  }
  p.steps = std::move(out);
  return p;
}

std::string to_string(const EdgePath& p) {
  if (p.steps.empty()) return "(const " + p.src + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : p.steps) {
    if (!first) os << ' ';
    os << s.edge;
    if (s.sign < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

Complex2 Complex2::make(std::vector<std::string> vertices, std::vector<EdgeCell> edges,
                        std::vector<FaceCell> faces) {
  Complex2 x;
  x.vertices_ = std::move(vertices);
  x.edges_ = std::move(edges);
  x.faces_ = std::move(faces);

  for (const auto& v : x.vertices_)
    if (!x.vertex_set_.insert(v).second)
      throw StructuralError("complex: duplicate vertex id '" + v + "'");
  for (std::size_t i = 0; i < x.edges_.size(); ++i) {
    const EdgeCell& e = x.edges_[i];
    if (!x.edge_index_.emplace(e.id, i).second)
      throw StructuralError("complex: duplicate edge id '" + e.id + "'");
    if (!x.has_vertex(e.src))
      throw StructuralError("complex: edge '" + e.id + "' has unknown source '" + e.src + "'");
    if (!x.has_vertex(e.dst))
      throw StructuralError("complex: edge '" + e.id + "' has unknown target '" + e.dst + "'");
  }
  for (std::size_t i = 0; i < x.faces_.size(); ++i) {
    const FaceCell& f = x.faces_[i];
    if (!x.face_index_.emplace(f.id, i).second)
      throw StructuralError("complex: duplicate face id '" + f.id + "'");
    x.validate_path(f.boundary);
    if (f.boundary.src != f.boundary.dst)
      throw StructuralError("complex: face '" + f.id + "' has a non-closed boundary");
  }
  return x;
}

const EdgeCell& Complex2::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw LookupError("complex: no edge '" + id + "'");
  return edges_[it->second];
}

const FaceCell& Complex2::face(const std::string& id) const {
  auto it = face_index_.find(id);
  if (it == face_index_.end()) throw LookupError("complex: no face '" + id + "'");
  return faces_[it->second];
}

std::string Complex2::step_src(const EdgeStep& s) const {
  const EdgeCell& e = edge(s.edge);
  return s.sign > 0 ? e.src : e.dst;
}

std::string Complex2::step_dst(const EdgeStep& s) const {
  const EdgeCell& e = edge(s.edge);
  return s.sign > 0 ? e.dst : e.src;
}

void Complex2::validate_path(const EdgePath& p) const {
  if (!has_vertex(p.src)) throw StructuralError("path: unknown source vertex '" + p.src + "'");
  if (!has_vertex(p.dst)) throw StructuralError("path: unknown target vertex '" + p.dst + "'");
  if (p.steps.empty()) {
    if (p.src != p.dst)
      throw StructuralError("path: empty path with distinct endpoints " + p.src + " -> " + p.dst);
    return;
  }
  std::string at = p.src;
  for (const auto& s : p.steps) {
    if (s.sign != 1 && s.sign != -1)
      throw StructuralError("path: step '" + s.edge + "' has sign " + std::to_string(s.sign));
    if (step_src(s) != at)
      throw StructuralError("path: step '" + s.edge + "' does not continue at vertex '" + at + "'");
    at = step_dst(s);
  }
  if (at != p.dst)
    throw StructuralError("path: recorded target '" + p.dst + "' differs from computed '" + at + "'");
}

EdgePath Complex2::path_at(std::vector<EdgeStep> steps, const std::string& at) const {
  EdgePath p;
  p.steps = std::move(steps);
  p.src = p.steps.empty() ? at : step_src(p.steps.front());
  p.dst = p.steps.empty() ? at : step_dst(p.steps.back());
  validate_path(p);
  return p;
}

std::map<std::string, std::vector<std::pair<std::string, EdgeStep>>>
sorted_adjacency(const Complex2& x) {
  std::map<std::string, std::vector<std::pair<std::string, EdgeStep>>> adj;
  for (const auto& e : x.edges()) {
    adj[e.src].push_back({e.dst, EdgeStep{e.id, 1}});
    adj[e.dst].push_back({e.src, EdgeStep{e.id, -1}});
  }
  for (auto& [v, nbrs] : adj)
    std::sort(nbrs.begin(), nbrs.end(), [](const auto& l, const auto& r) {
      if (l.second.edge != r.second.edge) return l.second.edge < r.second.edge;
      return l.second.sign > r.second.sign;
    });
  return adj;
}

void validate_subcomplex(const Complex2& x, const Subcomplex& u) {
  for (const auto& v : u.vertices)
    if (!x.has_vertex(v))
      throw StructuralError("subcomplex '" + u.name + "': unknown vertex '" + v + "'");
  for (const auto& e : u.edges) {
    if (!x.has_edge(e)) throw StructuralError("subcomplex '" + u.name + "': unknown edge '" + e + "'");
    const EdgeCell& cell = x.edge(e);
    if (!u.contains_vertex(cell.src) || !u.contains_vertex(cell.dst))
      throw StructuralError("subcomplex '" + u.name + "': edge '" + e + "' has endpoints outside");
  }
  for (const auto& f : u.faces) {
    if (!x.has_face(f)) throw StructuralError("subcomplex '" + u.name + "': unknown face '" + f + "'");
    for (const auto& s : x.face(f).boundary.steps)
      if (!u.contains_edge(s.edge))
        throw StructuralError("subcomplex '" + u.name + "': face '" + f +
                              "' has boundary edge '" + s.edge + "' outside");
  }
}

Complex2 induced_complex(const Complex2& x, const Subcomplex& u) {
  validate_subcomplex(x, u);
  std::vector<std::string> vertices;
  std::vector<EdgeCell> edges;
  std::vector<FaceCell> faces;
  for (const auto& v : x.vertices())
    if (u.contains_vertex(v)) vertices.push_back(v);
  for (const auto& e : x.edges())
    if (u.contains_edge(e.id)) edges.push_back(e);
  for (const auto& f : x.faces())
    if (u.contains_face(f.id)) faces.push_back(f);
  return Complex2::make(std::move(vertices), std::move(edges), std::move(faces));
}

Subcomplex whole_subcomplex(const Complex2& x, const std::string& name) {
  Subcomplex u;
  u.name = name;
  for (const auto& v : x.vertices()) u.vertices.insert(v);
  for (const auto& e : x.edges()) u.edges.insert(e.id);
  for (const auto& f : x.faces()) u.faces.insert(f.id);
  return u;
}

Subcomplex star_closure(const Complex2& x, const std::string& v) {
  if (!x.has_vertex(v)) throw LookupError("star_closure: no vertex '" + v + "'");
  Subcomplex u;
  u.name = "star_" + v;
  u.vertices.insert(v);
  for (const auto& e : x.edges())
    if (e.src == v || e.dst == v) u.edges.insert(e.id);
  for (const auto& f : x.faces()) {
    bool touches = f.boundary.src == v;
    for (const auto& s : f.boundary.steps)
      touches = touches || x.step_src(s) == v || x.step_dst(s) == v;
    if (touches) {
      u.faces.insert(f.id);
      for (const auto& s : f.boundary.steps) u.edges.insert(s.edge);
    }
  }
  for (const auto& e : u.edges) {
    u.vertices.insert(x.edge(e).src);
    u.vertices.insert(x.edge(e).dst);
  }
  return u;
}

CellMap CellMap::make(Complex2 domain, Complex2 codomain,
                      std::map<std::string, std::string> vertex_map,
                      std::map<std::string, std::string> edge_map,
                      std::map<std::string, std::string> face_map) {
  CellMap m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.vertex_map_ = std::move(vertex_map);
  m.edge_map_ = std::move(edge_map);
  m.face_map_ = std::move(face_map);

  for (const auto& v : m.domain_.vertices()) {
    auto it = m.vertex_map_.find(v);
    if (it == m.vertex_map_.end())
      throw StructuralError("cell map: vertex '" + v + "' has no image");
    if (!m.codomain_.has_vertex(it->second))
      throw StructuralError("cell map: image vertex '" + it->second + "' missing in codomain");
  }
  for (const auto& e : m.domain_.edges()) {
    auto it = m.edge_map_.find(e.id);
    if (it == m.edge_map_.end())
      throw StructuralError("cell map: edge '" + e.id + "' has no image");
    if (!m.codomain_.has_edge(it->second))
      throw StructuralError("cell map: image edge '" + it->second + "' missing in codomain");
    const EdgeCell& img = m.codomain_.edge(it->second);
    if (img.src != m.vertex_map_.at(e.src) || img.dst != m.vertex_map_.at(e.dst))
      throw StructuralError("cell map: edge '" + e.id + "' does not commute with vertex map");
  }
  for (const auto& f : m.domain_.faces()) {
    auto it = m.face_map_.find(f.id);
    if (it == m.face_map_.end())
      throw StructuralError("cell map: face '" + f.id + "' has no image");
    if (!m.codomain_.has_face(it->second))
      throw StructuralError("cell map: image face '" + it->second + "' missing in codomain");
    const FaceCell& img = m.codomain_.face(it->second);
    EdgePath mapped = m.map_path(f.boundary);
    if (!(mapped == img.boundary))
      throw StructuralError("cell map: face '" + f.id +
                            "' boundary does not map letterwise onto boundary of '" + img.id + "'");
  }
  return m;
}

CellMap CellMap::identity(const Complex2& x) {
  std::map<std::string, std::string> vm, em, fm;
  for (const auto& v : x.vertices()) vm[v] = v;
  for (const auto& e : x.edges()) em[e.id] = e.id;
  for (const auto& f : x.faces()) fm[f.id] = f.id;
  return make(x, x, std::move(vm), std::move(em), std::move(fm));
}

const std::string& CellMap::map_vertex(const std::string& v) const {
  auto it = vertex_map_.find(v);
  if (it == vertex_map_.end()) throw LookupError("cell map: no image for vertex '" + v + "'");
  return it->second;
}

const std::string& CellMap::map_edge(const std::string& e) const {
  auto it = edge_map_.find(e);
  if (it == edge_map_.end()) throw LookupError("cell map: no image for edge '" + e + "'");
  return it->second;
}

const std::string& CellMap::map_face(const std::string& f) const {
  auto it = face_map_.find(f);
  if (it == face_map_.end()) throw LookupError("cell map: no image for face '" + f + "'");
  return it->second;
}

EdgePath CellMap::map_path(const EdgePath& p) const {
  EdgePath out;
  out.src = map_vertex(p.src);
  out.dst = map_vertex(p.dst);
  out.steps.reserve(p.steps.size());
  for (const auto& s : p.steps) out.steps.push_back(EdgeStep{map_edge(s.edge), s.sign});
  return out;
}

CellMap compose(const CellMap& f, const CellMap& g) {
  if (!(g.codomain() == f.domain()))
    throw CompositionError("cell map compose: inner codomain differs from outer domain");
  std::map<std::string, std::string> vm, em, fm;
  for (const auto& v : g.domain().vertices()) vm[v] = f.map_vertex(g.map_vertex(v));
  for (const auto& e : g.domain().edges()) em[e.id] = f.map_edge(g.map_edge(e.id));
  for (const auto& fc : g.domain().faces()) fm[fc.id] = f.map_face(g.map_face(fc.id));
  return CellMap::make(g.domain(), f.codomain(), std::move(vm), std::move(em), std::move(fm));
}

BaseSet BaseSet::all_of(const Complex2& x) {
  BaseSet s;
  for (const auto& v : x.vertices()) s.vertices.insert(v);
  return s;
}

BaseSet BaseSet::of(std::initializer_list<std::string> vs) {
  BaseSet s;
  for (const auto& v : vs) s.vertices.insert(v);
  return s;
}

} // namespace vkg
