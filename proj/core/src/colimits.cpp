// SPDX-License-Identifier: Apache-2.0
#include "vkg/colimits.hpp"

#include <algorithm>
#include <deque>

namespace vkg {

CoproductResult coproduct(const std::vector<GroupoidPresentation>& ps) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<Relator> relators;

  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::string prefix = std::to_string(k) + ":";
    for (const auto& o : ps[k].objects()) objects.push_back(prefix + o);
    for (const auto& a : ps[k].arrows())
      arrows.push_back(Arrow{prefix + a.id, prefix + a.src, prefix + a.dst});
    for (const auto& r : ps[k].relators()) {
      auto rename = [&](Word w) {
        for (auto& l : w.letters) l.arrow = prefix + l.arrow;
        w.src = prefix + w.src;
        w.dst = prefix + w.dst;
        return w;
      };
      relators.push_back(Relator{rename(r.lhs), rename(r.rhs)});
    }
  }

  CoproductResult out;
  out.presentation = GroupoidPresentation::make(std::move(objects), std::move(arrows),
                                                std::move(relators));
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::string prefix = std::to_string(k) + ":";
    std::map<std::string, std::string> om;
    std::map<std::string, Word> am;
    for (const auto& o : ps[k].objects()) om[o] = prefix + o;
    for (const auto& a : ps[k].arrows())
      am[a.id] = Word{{Letter{prefix + a.id, 1}}, prefix + a.src, prefix + a.dst};
    out.injections.push_back(
        PresentationMorphism::make(ps[k], out.presentation, std::move(om), std::move(am)));
  }
  return out;
}

namespace {

class UnionFind {
public:
  void add(const std::string& x) { parent_.emplace(x, x); }

  const std::string& find(const std::string& x) {
    std::string& p = parent_.at(x);
    if (p != x) p = find(p);
    return parent_.at(x);
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // lexicographic least becomes the representative
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

private:
  std::map<std::string, std::string> parent_;
};

} // namespace

CoequalizerResult coequalize(const GroupoidPresentation& src, const GroupoidPresentation& mid,
                             const PresentationMorphism& alpha, const PresentationMorphism& beta) {
  if (!(alpha.source() == src) || !(beta.source() == src))
    throw ContractError("coequalize: alpha/beta must start at src");
  if (!(alpha.target() == mid) || !(beta.target() == mid))
    throw ContractError("coequalize: alpha/beta must land in mid");

  UnionFind uf;
  for (const auto& o : mid.objects()) uf.add(o);
  for (const auto& o : src.objects()) uf.unite(alpha.map_object(o), beta.map_object(o));

  std::set<std::string> reps;
  for (const auto& o : mid.objects()) reps.insert(uf.find(o));
  std::vector<std::string> objects(reps.begin(), reps.end());

  std::vector<Arrow> arrows;
  arrows.reserve(mid.arrows().size());
  for (const auto& a : mid.arrows())
    arrows.push_back(Arrow{a.id, uf.find(a.src), uf.find(a.dst)});

  auto reanchor = [&](Word w) {
    w.src = uf.find(w.src);
    w.dst = uf.find(w.dst);
    return w;
  };

  std::vector<Relator> relators;
  for (const auto& r : mid.relators())
    relators.push_back(Relator{reanchor(r.lhs), reanchor(r.rhs)});
  for (const auto& g : src.arrows()) {
    Word u = reanchor(alpha.map_arrow(g.id));
    Word v = reanchor(beta.map_arrow(g.id));
    if (u == v) continue;
    relators.push_back(Relator{std::move(u), std::move(v)});
  }

  CoequalizerResult out;
  out.presentation = GroupoidPresentation::make(std::move(objects), std::move(arrows),
                                                std::move(relators));

  std::map<std::string, std::string> om;
  std::map<std::string, Word> am;
  for (const auto& o : mid.objects()) om[o] = uf.find(o);
  for (const auto& a : mid.arrows())
    am[a.id] = Word{{Letter{a.id, 1}}, uf.find(a.src), uf.find(a.dst)};
  out.quotient_map =
      PresentationMorphism::make(mid, out.presentation, std::move(om), std::move(am));
  return out;
}

VertexGroupData vertex_group_data(const GroupoidPresentation& p, const std::string& x) {
  if (!p.has_object(x)) throw LookupError("vertex_group: no object '" + x + "'");

  // adjacency sorted by (arrow id, forward first)
  std::map<std::string, std::vector<std::pair<std::string, Letter>>> adj;
  for (const auto& a : p.arrows()) {
    adj[a.src].push_back({a.dst, Letter{a.id, 1}});
    adj[a.dst].push_back({a.src, Letter{a.id, -1}});
  }
  for (auto& [v, nbrs] : adj)
    std::sort(nbrs.begin(), nbrs.end(), [](const auto& l, const auto& r) {
      if (l.second.arrow != r.second.arrow) return l.second.arrow < r.second.arrow;
      return l.second.sign > r.second.sign;
    });

  std::set<std::string> component{x};
  std::set<std::string> tree_arrows;
  std::deque<std::string> queue{x};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& [w, letter] : it->second) {
      if (component.count(w)) continue;
      component.insert(w);
      tree_arrows.insert(letter.arrow);
      queue.push_back(w);
    }
  }

  VertexGroupData out;
  out.component = component;

  std::vector<Arrow> gens;
  for (const auto& a : p.arrows()) {
    if (!component.count(a.src)) continue;
    if (tree_arrows.count(a.id)) {
      out.loop_of_arrow[a.id] = empty_word(x);
    } else {
      gens.push_back(Arrow{a.id, x, x});
      out.loop_of_arrow[a.id] = Word{{Letter{a.id, 1}}, x, x};
    }
  }

  std::vector<Relator> relators;
  auto rewrite = [&](const Word& w) {
    Word acc = empty_word(x);
    for (const auto& l : w.letters) {
      const Word& loop = out.loop_of_arrow.at(l.arrow);
      acc = concat(acc, l.sign > 0 ? loop : invert(loop));
    }
    return acc;
  };
  for (const auto& r : p.relators()) {
    if (!component.count(r.lhs.src)) continue;
    Word u = rewrite(r.lhs);
    Word v = rewrite(r.rhs);
    if (u == v) continue;
    relators.push_back(Relator{std::move(u), std::move(v)});
  }
  out.group = GroupoidPresentation::make({x}, std::move(gens), std::move(relators));
  return out;
}

GroupoidPresentation vertex_group(const GroupoidPresentation& p, const std::string& x) {
  return vertex_group_data(p, x).group;
}

Word reanchor_word(const VertexGroupData& vg, const Word& w) {
  const std::string& x = vg.group.objects().front();
  if (!vg.component.count(w.src) || !vg.component.count(w.dst))
    throw ContractError("reanchor_word: endpoints outside the component of the base point");
  Word acc = empty_word(x);
  for (const auto& l : w.letters) {
    auto it = vg.loop_of_arrow.find(l.arrow);
    if (it == vg.loop_of_arrow.end())
      throw LookupError("reanchor_word: arrow '" + l.arrow + "' outside the component");
    acc = concat(acc, l.sign > 0 ? it->second : invert(it->second));
  }
  return acc;
}

} // namespace vkg
