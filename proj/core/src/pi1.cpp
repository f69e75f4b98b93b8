// SPDX-License-Identifier: Apache-2.0
#include "vkg/pi1.hpp"

#include <algorithm>
#include <deque>

namespace vkg {

namespace {

// Image of one step under the forest contraction: forest edges die, others
// become generator letters anchored between tree roots.
Word lambda_of_step(const Pi1Presentation& p, const EdgeStep& s) {
  const EdgeCell& e = p.complex.edge(s.edge);
  if (p.tree_edges.count(s.edge)) {
    const std::string& at = p.anchor.at(s.sign > 0 ? e.src : e.dst);
    return empty_word(at);
  }
  Word w{{Letter{s.edge, s.sign}}, p.anchor.at(p.complex.step_src(s)),
         p.anchor.at(p.complex.step_dst(s))};
  return w;
}

Word fold_path(const Pi1Presentation& p, const EdgePath& path) {
  Word acc = empty_word(p.anchor.at(path.src));
  for (const auto& s : path.steps) acc = concat(acc, lambda_of_step(p, s));
  return acc;
}

} // namespace

Pi1Presentation pi1(const Complex2& x, const BaseSet& s) {
  Pi1Presentation out;
  out.complex = x;
  for (const auto& v : s.vertices)
    if (x.has_vertex(v)) out.base.insert(v);

  auto adj = sorted_adjacency(x);

  std::deque<std::string> queue;
  for (const auto& root : out.base) { // set order = lexicographic
    out.anchor[root] = root;
    out.tree_path[root] = empty_path(root);
    queue.push_back(root);
  }
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& [w, step] : it->second) {
      if (out.anchor.count(w)) continue;
      out.anchor[w] = out.anchor.at(v);
      out.tree_path[w] = concat_paths(out.tree_path.at(v), EdgePath{{step}, v, w});
      out.tree_edges.insert(step.edge);
      queue.push_back(w);
    }
  }

  for (const auto& v : x.vertices())
    if (!out.anchor.count(v))
      throw HypothesisError("pi1: component of vertex '" + v + "' contains no base point", v);

  std::vector<std::string> objects(out.base.begin(), out.base.end());
  std::vector<Arrow> generators;
  for (const auto& e : x.edges()) {
    if (out.tree_edges.count(e.id)) continue;
    generators.push_back(Arrow{e.id, out.anchor.at(e.src), out.anchor.at(e.dst)});
    out.witness[e.id] =
        concat_paths(concat_paths(out.tree_path.at(e.src), EdgePath{{EdgeStep{e.id, 1}}, e.src, e.dst}),
                     reverse_path(out.tree_path.at(e.dst)));
  }
  out.presentation = GroupoidPresentation::make(std::move(objects), std::move(generators), {});

  std::vector<Relator> relators;
  for (const auto& f : x.faces()) {
    Word w = fold_path(out, f.boundary);
    if (w.empty()) continue;
    relators.push_back(Relator{w, empty_word(w.src)});
  }
  out.presentation = GroupoidPresentation::make(out.presentation.objects(),
                                                out.presentation.arrows(), std::move(relators));
  return out;
}

Word path_word(const Pi1Presentation& p, const EdgePath& path) {
  p.complex.validate_path(path);
  if (!p.base.count(path.src) || !p.base.count(path.dst))
    throw ContractError("path_word: endpoints (" + path.src + ", " + path.dst +
                        ") must lie in the base set");
  return fold_path(p, path);
}

VkSetting VkSetting::build(CoverGeometry geometry, const BaseSet& s) {
  VkSetting out;
  out.geometry = std::move(geometry);
  out.base.vertices.clear();
  for (const auto& v : s.vertices)
    if (out.geometry.cover.base().has_vertex(v)) out.base.vertices.insert(v);
  out.s_total = fiber_of(out.geometry.cover.projection, out.base);
  out.s_ebe = fiber_of(out.geometry.ebe_to_base, out.base);

  const SectionedCover& cover = out.geometry.cover;
  Pi1Presentation target = pi1(cover.base(), out.base);
  Pi1Presentation middle = pi1(cover.total(), BaseSet{out.s_total});
  Pi1Presentation lower = pi1(out.geometry.ebe.total, BaseSet{out.s_ebe});

  auto induce = [](const Pi1Presentation& from, const Pi1Presentation& to, const CellMap& map) {
    std::map<std::string, std::string> om;
    std::map<std::string, Word> am;
    for (const auto& o : from.presentation.objects()) om[o] = map.map_vertex(o);
    for (const auto& a : from.presentation.arrows())
      am[a.id] = path_word(to, map.map_path(from.witness.at(a.id)));
    return PresentationMorphism::make(from.presentation, to.presentation, std::move(om),
                                      std::move(am));
  };

  VkDiagram d;
  d.alpha = induce(lower, middle, out.geometry.ebe.pr1);
  d.beta = induce(lower, middle, out.geometry.ebe.pr2);
  d.gamma = induce(middle, target, cover.projection);
  d.lower = std::move(lower);
  d.middle = std::move(middle);
  d.target = std::move(target);
  out.diagram = std::move(d);
  return out;
}

VkDiagram induced_functors(const SectionedCover& c, const BaseSet& s) {
  return VkSetting::build(CoverGeometry::build(c), s).diagram;
}

} // namespace vkg
