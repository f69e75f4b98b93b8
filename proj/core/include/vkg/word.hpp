// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vkg/errors.hpp"

namespace vkg {

// One signed occurrence of a generating arrow.
struct Letter {
  std::string arrow;
  int sign = 1; // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(const Letter& l) { return Letter{l.arrow, -l.sign}; }

inline bool cancels(const Letter& a, const Letter& b) {
  return a.arrow == b.arrow && a.sign == -b.sign;
}

// A word in a free groupoid: letters in path order (the first letter acts at
// `src`), endpoints tracked explicitly so identity words stay anchored.
// Presentation-level code keeps words freely reduced; raw construction goes
// through GroupoidPresentation::word_at which reduces and validates.
struct Word {
  std::vector<Letter> letters;
  std::string src;
  std::string dst;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

Word empty_word(const std::string& at);

// Unique freely reduced representative: endpoints preserved, idempotent.
Word free_reduce(Word w);

Word invert(const Word& w);

// Category-style composition: w1 after w2 (w2 acts first). Path order means
// the letters of w2 precede those of w1. Throws CompositionError on endpoint
// mismatch.
Word compose(const Word& w1, const Word& w2);

// Diagram-order concatenation: `a` then `b`. Same letters as compose(b, a).
Word concat(const Word& a, const Word& b);

std::string to_string(const Word& w);

} // namespace vkg
