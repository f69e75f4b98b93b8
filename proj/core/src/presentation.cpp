// SPDX-License-Identifier: Apache-2.0
#include "vkg/presentation.hpp"

#include <sstream>

namespace vkg {

GroupoidPresentation GroupoidPresentation::make(std::vector<std::string> objects,
                                                std::vector<Arrow> arrows,
                                                std::vector<Relator> relators) {
  GroupoidPresentation p;
  p.objects_ = std::move(objects);
  p.arrows_ = std::move(arrows);

  for (const auto& o : p.objects_) {
    if (!p.object_set_.insert(o).second)
      throw StructuralError("presentation: duplicate object id '" + o + "'");
  }
  for (std::size_t i = 0; i < p.arrows_.size(); ++i) {
    const Arrow& a = p.arrows_[i];
    if (!p.arrow_index_.emplace(a.id, i).second)
      throw StructuralError("presentation: duplicate arrow id '" + a.id + "'");
    if (!p.has_object(a.src))
      throw StructuralError("presentation: arrow '" + a.id + "' has unknown source '" + a.src + "'");
    if (!p.has_object(a.dst))
      throw StructuralError("presentation: arrow '" + a.id + "' has unknown target '" + a.dst + "'");
  }

  p.relators_.reserve(relators.size());
  for (auto& r : relators) {
    Word lhs = free_reduce(std::move(r.lhs));
    Word rhs = free_reduce(std::move(r.rhs));
    p.validate_word(lhs);
    p.validate_word(rhs);
    if (lhs.src != rhs.src || lhs.dst != rhs.dst)
      throw StructuralError("presentation: relator sides are not parallel (" + lhs.src + "->" +
                            lhs.dst + " vs " + rhs.src + "->" + rhs.dst + ")");
    p.relators_.push_back(Relator{std::move(lhs), std::move(rhs)});
  }
  return p;
}

const Arrow& GroupoidPresentation::arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) throw LookupError("presentation: no arrow '" + id + "'");
  return arrows_[it->second];
}

std::string GroupoidPresentation::letter_src(const Letter& l) const {
  const Arrow& a = arrow(l.arrow);
  return l.sign > 0 ? a.src : a.dst;
}

std::string GroupoidPresentation::letter_dst(const Letter& l) const {
  const Arrow& a = arrow(l.arrow);
  return l.sign > 0 ? a.dst : a.src;
}

void GroupoidPresentation::validate_word(const Word& w) const {
  if (!has_object(w.src)) throw StructuralError("word: unknown source object '" + w.src + "'");
  if (!has_object(w.dst)) throw StructuralError("word: unknown target object '" + w.dst + "'");
  if (w.letters.empty()) {
    if (w.src != w.dst)
      throw StructuralError("word: empty word with distinct endpoints " + w.src + " -> " + w.dst);
    return;
  }
  std::string at = w.src;
  for (const auto& l : w.letters) {
    if (l.sign != 1 && l.sign != -1)
      throw StructuralError("word: letter '" + l.arrow + "' has sign " + std::to_string(l.sign));
    if (letter_src(l) != at)
      throw StructuralError("word: letter '" + l.arrow + "' does not compose at object '" + at + "'");
    at = letter_dst(l);
  }
  if (at != w.dst)
    throw StructuralError("word: recorded target '" + w.dst + "' differs from computed '" + at + "'");
}

Word GroupoidPresentation::word_at(std::vector<Letter> letters, const std::string& at) const {
  Word w;
  w.letters = std::move(letters);
  w.src = w.letters.empty() ? at : letter_src(w.letters.front());
  w.dst = w.letters.empty() ? at : letter_dst(w.letters.back());
  // Validate before reducing: reduction only removes cancelling pairs, so a
  // word is composable iff its reduction is, but diagnostics are better on
  // the original letters.
  validate_word(w);
  return free_reduce(std::move(w));
}

Word GroupoidPresentation::word(std::vector<Letter> letters) const {
  if (letters.empty())
    throw ContractError("presentation::word: empty letter list needs word_at(letters, object)");
  return word_at(std::move(letters), std::string());
}

std::string to_string(const GroupoidPresentation& p) {
  std::ostringstream os;
  os << "objects (" << p.objects().size() << "):";
  for (const auto& o : p.objects()) os << ' ' << o;
  os << "\ngenerators (" << p.arrows().size() << "):\n";
  for (const auto& a : p.arrows()) os << "  " << a.id << ": " << a.src << " -> " << a.dst << "\n";
  os << "relators (" << p.relators().size() << "):\n";
  for (const auto& r : p.relators())
    os << "  " << to_string(r.lhs) << " = " << to_string(r.rhs) << "\n";
  return os.str();
}

} // namespace vkg
