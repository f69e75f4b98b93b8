// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "vkg/presentation.hpp"

namespace vkg {

// A morphism of presented groupoids: an object map plus a word of the target
// for each generator of the source, endpoint-compatible. Relator preservation
// is semi-decidable and is checked separately by the equality battery
// (see equality.hpp), not at construction.
class PresentationMorphism {
public:
  PresentationMorphism() = default;

  static PresentationMorphism make(GroupoidPresentation source, GroupoidPresentation target,
                                   std::map<std::string, std::string> object_map,
                                   std::map<std::string, Word> arrow_map);

  static PresentationMorphism identity(const GroupoidPresentation& p);

  const GroupoidPresentation& source() const { return source_; }
  const GroupoidPresentation& target() const { return target_; }
  const std::map<std::string, std::string>& object_map() const { return object_map_; }
  const std::map<std::string, Word>& arrow_map() const { return arrow_map_; }

  const std::string& map_object(const std::string& o) const;
  const Word& map_arrow(const std::string& id) const;

  // Letterwise substitution with exponent handling, then free reduction.
  Word apply(const Word& w) const;

private:
  GroupoidPresentation source_;
  GroupoidPresentation target_;
  std::map<std::string, std::string> object_map_;
  std::map<std::string, Word> arrow_map_;
};

Word apply_morphism(const PresentationMorphism& m, const Word& w);

// f after g; requires g.target() == f.source() structurally.
PresentationMorphism compose(const PresentationMorphism& f, const PresentationMorphism& g);

} // namespace vkg
