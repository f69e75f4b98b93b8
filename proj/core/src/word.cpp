// SPDX-License-Identifier: Apache-2.0
#include "vkg/word.hpp"

#include <sstream>

namespace vkg {

Word empty_word(const std::string& at) { return Word{{}, at, at}; }

Word free_reduce(Word w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (auto& l : w.letters) {
    if (!out.empty() && cancels(out.back(), l)) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  w.letters = std::move(out);
  return w;
}

Word invert(const Word& w) {
  Word r;
  r.src = w.dst;
  r.dst = w.src;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(inverse(*it));
  return r;
}

Word compose(const Word& w1, const Word& w2) {
  if (w2.dst != w1.src)
    throw CompositionError("compose: target of second factor (" + w2.dst +
                           ") differs from source of first factor (" + w1.src + ")");
  Word r;
  r.src = w2.src;
  r.dst = w1.dst;
  r.letters = w2.letters;
  r.letters.insert(r.letters.end(), w1.letters.begin(), w1.letters.end());
  return free_reduce(std::move(r));
}

Word concat(const Word& a, const Word& b) { return compose(b, a); }

std::string to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) os << ' ';
    os << l.arrow;
    if (l.sign < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

} // namespace vkg
