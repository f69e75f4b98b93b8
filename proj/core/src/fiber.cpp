// SPDX-License-Identifier: Apache-2.0
#include "vkg/fiber.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace vkg {

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

FiberProduct fiber_product(const CellMap& p, const CellMap& q) {
  if (!(p.codomain() == q.codomain()))
    throw StructuralError("fiber_product: maps have different codomains");

  std::vector<std::string> vertices;
  std::vector<EdgeCell> edges;
  std::vector<FaceCell> faces;
  std::map<std::string, std::string> v1, v2, e1, e2, f1, f2;

  for (const auto& x : p.domain().vertices())
    for (const auto& y : q.domain().vertices()) {
      if (p.map_vertex(x) != q.map_vertex(y)) continue;
      std::string id = pair_id(x, y);
      vertices.push_back(id);
      v1[id] = x;
      v2[id] = y;
    }

  for (const auto& e : p.domain().edges())
    for (const auto& f : q.domain().edges()) {
      if (p.map_edge(e.id) != q.map_edge(f.id)) continue;
      // endpoints over the same base vertices pair automatically
      std::string id = pair_id(e.id, f.id);
      edges.push_back(EdgeCell{id, pair_id(e.src, f.src), pair_id(e.dst, f.dst)});
      e1[id] = e.id;
      e2[id] = f.id;
    }

  for (const auto& a : p.domain().faces())
    for (const auto& b : q.domain().faces()) {
      if (p.map_face(a.id) != q.map_face(b.id)) continue;
      if (a.boundary.steps.size() != b.boundary.steps.size()) continue;
      bool letterwise = true;
      for (std::size_t i = 0; i < a.boundary.steps.size() && letterwise; ++i)
        letterwise = a.boundary.steps[i].sign == b.boundary.steps[i].sign;
      if (!letterwise) continue;
      EdgePath bd;
      bd.src = pair_id(a.boundary.src, b.boundary.src);
      bd.dst = pair_id(a.boundary.dst, b.boundary.dst);
      for (std::size_t i = 0; i < a.boundary.steps.size(); ++i)
        bd.steps.push_back(EdgeStep{pair_id(a.boundary.steps[i].edge, b.boundary.steps[i].edge),
                                    a.boundary.steps[i].sign});
      std::string id = pair_id(a.id, b.id);
      faces.push_back(FaceCell{id, std::move(bd)});
      f1[id] = a.id;
      f2[id] = b.id;
    }

  FiberProduct out;
  out.total = Complex2::make(std::move(vertices), std::move(edges), std::move(faces));
  out.pr1 = CellMap::make(out.total, p.domain(), v1, e1, f1);
  out.pr2 = CellMap::make(out.total, q.domain(), v2, e2, f2);
  return out;
}

std::vector<std::vector<std::string>> skeleton_components(const Complex2& x) {
  std::map<std::string, std::string> parent;
  for (const auto& v : x.vertices()) parent[v] = v;
  std::function<const std::string&(const std::string&)> find = [&](const std::string& v) -> const std::string& {
    std::string& p = parent.at(v);
    if (p != v) p = find(p);
    return parent.at(v);
  };
  for (const auto& e : x.edges()) {
    std::string a = find(e.src), b = find(e.dst);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& v : x.vertices()) groups[find(v)].push_back(v);
  std::vector<std::vector<std::string>> out;
  for (auto& [rep, vs] : groups) {
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

EdgePath path_to_base(const Complex2& x, const std::string& start,
                      const std::set<std::string>& targets) {
  if (!x.has_vertex(start)) throw LookupError("path_to_base: no vertex '" + start + "'");
  if (targets.count(start)) return empty_path(start);

  auto adj = sorted_adjacency(x);

  std::map<std::string, std::pair<std::string, EdgeStep>> parent;
  std::deque<std::string> queue{start};
  std::set<std::string> seen{start};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& [w, step] : it->second) {
      if (seen.count(w)) continue;
      seen.insert(w);
      parent[w] = {v, step};
      if (targets.count(w)) {
        std::vector<EdgeStep> rev;
        std::string at = w;
        while (at != start) {
          rev.push_back(parent.at(at).second);
          at = parent.at(at).first;
        }
        std::reverse(rev.begin(), rev.end());
        return x.path_at(std::move(rev), start);
      }
      queue.push_back(w);
    }
  }
  throw HypothesisError("path_to_base: no path from '" + start + "' into the base fiber", start);
}

CoverGeometry CoverGeometry::build(const SectionedCover& c) {
  CoverGeometry g;
  g.cover = c;
  g.ebe = fiber_product(c.projection, c.projection);
  g.ebe_to_base = compose(c.projection, g.ebe.pr1);
  g.triple = fiber_product(g.ebe_to_base, c.projection);
  g.triple_to_base = compose(g.ebe_to_base, g.triple.pr1);
  return g;
}

std::set<std::string> fiber_of(const CellMap& to_base, const BaseSet& s) {
  std::set<std::string> out;
  for (const auto& v : to_base.domain().vertices())
    if (s.vertices.count(to_base.map_vertex(v))) out.insert(v);
  return out;
}

HypothesisReport check_hypothesis(const CoverGeometry& g, const BaseSet& s) {
  HypothesisReport report;
  std::set<std::string> fiber = fiber_of(g.triple_to_base, s);
  for (const auto& component : skeleton_components(g.triple.total)) {
    bool meets = std::any_of(component.begin(), component.end(),
                             [&](const std::string& v) { return fiber.count(v) > 0; });
    if (!meets) {
      report.ok = false;
      report.offenders.push_back(HypothesisReport::Offender{
          component.front(), g.triple_to_base.map_vertex(component.front())});
    }
  }
  return report;
}

HypothesisReport check_hypothesis(const SectionedCover& c, const BaseSet& s) {
  return check_hypothesis(CoverGeometry::build(c), s);
}

} // namespace vkg
