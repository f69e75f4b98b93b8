// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "vkg/presentation.hpp"

namespace vkg {

struct SimplifiedPresentation {
  GroupoidPresentation presentation;
  // Original generator -> word over the surviving generators. Surviving
  // generators map to themselves.
  std::map<std::string, Word> rewrite;

  Word transport(const Word& w) const;
};

struct SimplifyLimits {
  std::size_t max_rounds = 256;
  std::size_t max_defining_length = 32;
};

// Tietze reduction: drop trivial and duplicate relators, eliminate a
// generator whenever some relator pins it to a word in the others
// (single occurrence across the pair). Deterministic scan order, so the
// output depends only on the input presentation.
SimplifiedPresentation simplify_presentation(const GroupoidPresentation& p,
                                             const SimplifyLimits& limits = {});

} // namespace vkg
