// SPDX-License-Identifier: Apache-2.0
#include "vkg/morphism.hpp"

namespace vkg {

PresentationMorphism PresentationMorphism::make(GroupoidPresentation source,
                                                GroupoidPresentation target,
                                                std::map<std::string, std::string> object_map,
                                                std::map<std::string, Word> arrow_map) {
  PresentationMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.object_map_ = std::move(object_map);
  m.arrow_map_ = std::move(arrow_map);

  for (const auto& o : m.source_.objects()) {
    auto it = m.object_map_.find(o);
    if (it == m.object_map_.end())
      throw StructuralError("morphism: object '" + o + "' has no image");
    if (!m.target_.has_object(it->second))
      throw StructuralError("morphism: image object '" + it->second + "' not in target");
  }
  for (const auto& a : m.source_.arrows()) {
    auto it = m.arrow_map_.find(a.id);
    if (it == m.arrow_map_.end())
      throw StructuralError("morphism: generator '" + a.id + "' has no image");
    m.target_.validate_word(it->second);
    it->second = free_reduce(std::move(it->second));
    const Word& w = it->second;
    if (w.src != m.object_map_.at(a.src) || w.dst != m.object_map_.at(a.dst))
      throw StructuralError("morphism: image of generator '" + a.id +
                            "' has incompatible endpoints (" + w.src + " -> " + w.dst + ")");
  }
  return m;
}

PresentationMorphism PresentationMorphism::identity(const GroupoidPresentation& p) {
  std::map<std::string, std::string> om;
  std::map<std::string, Word> am;
  for (const auto& o : p.objects()) om[o] = o;
  for (const auto& a : p.arrows()) am[a.id] = Word{{Letter{a.id, 1}}, a.src, a.dst};
  return make(p, p, std::move(om), std::move(am));
}

const std::string& PresentationMorphism::map_object(const std::string& o) const {
  auto it = object_map_.find(o);
  if (it == object_map_.end()) throw StructuralError("morphism: no image for object '" + o + "'");
  return it->second;
}

const Word& PresentationMorphism::map_arrow(const std::string& id) const {
  auto it = arrow_map_.find(id);
  if (it == arrow_map_.end()) throw StructuralError("morphism: no image for generator '" + id + "'");
  return it->second;
}

Word PresentationMorphism::apply(const Word& w) const {
  Word out = empty_word(map_object(w.src));
  for (const auto& l : w.letters) {
    const Word& img = map_arrow(l.arrow);
    out = concat(out, l.sign > 0 ? img : invert(img));
  }
  if (out.dst != map_object(w.dst))
    throw StructuralError("morphism: applied word lands at '" + out.dst + "', expected '" +
                          map_object(w.dst) + "'");
  return out;
}

Word apply_morphism(const PresentationMorphism& m, const Word& w) { return m.apply(w); }

PresentationMorphism compose(const PresentationMorphism& f, const PresentationMorphism& g) {
  if (!(g.target() == f.source()))
    throw CompositionError("morphism compose: inner target differs from outer source");
  std::map<std::string, std::string> om;
  std::map<std::string, Word> am;
  for (const auto& o : g.source().objects()) om[o] = f.map_object(g.map_object(o));
  for (const auto& a : g.source().arrows()) am[a.id] = f.apply(g.map_arrow(a.id));
  return PresentationMorphism::make(g.source(), f.target(), std::move(om), std::move(am));
}

} // namespace vkg
