// SPDX-License-Identifier: Apache-2.0
#include "vkg/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace vkg {

namespace {

Word substitute(const Word& w, const std::string& gen, const Word& def) {
  Word out;
  out.src = w.src;
  out.dst = w.dst;
  for (const auto& l : w.letters) {
    if (l.arrow == gen) {
      const Word& piece = def; // same endpoints as gen by construction
      if (l.sign > 0)
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
      else {
        Word inv = invert(piece);
        out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
      }
    } else {
      out.letters.push_back(l);
    }
  }
  return free_reduce(std::move(out));
}

std::string relator_key(const Relator& r) {
  std::string a = to_string(r.lhs) + "@" + r.lhs.src + ">" + r.lhs.dst;
  std::string b = to_string(r.rhs) + "@" + r.rhs.src + ">" + r.rhs.dst;
  return a < b ? a + "|" + b : b + "|" + a;
}

struct Candidate {
  std::size_t relator_index;
  std::string gen;
  Word defining;
};

// A relator pins `gen` when the letter occurs exactly once across both sides:
// l = A g^s B and l = r solve to g^s = A^-1 r B^-1.
std::optional<Candidate> find_elimination(const std::vector<Relator>& relators,
                                          std::size_t max_len) {
  std::optional<Candidate> best;
  for (std::size_t ri = 0; ri < relators.size(); ++ri) {
    for (int side = 0; side < 2; ++side) {
      const Word& l = side == 0 ? relators[ri].lhs : relators[ri].rhs;
      const Word& r = side == 0 ? relators[ri].rhs : relators[ri].lhs;
      for (std::size_t pos = 0; pos < l.letters.size(); ++pos) {
        const Letter& cand = l.letters[pos];
        std::size_t occurrences = 0;
        for (const auto& x : l.letters) occurrences += x.arrow == cand.arrow;
        for (const auto& x : r.letters) occurrences += x.arrow == cand.arrow;
        if (occurrences != 1) continue;

        // prefix/suffix endpoints are implied by the letters; rebuild words
        Word prefix{std::vector<Letter>(l.letters.begin(), l.letters.begin() + pos), l.src,
                    std::string()};
        Word suffix{std::vector<Letter>(l.letters.begin() + pos + 1, l.letters.end()),
                    std::string(), l.dst};
        // defining word for g^s, path order: inv(prefix) r inv(suffix)
        Word def;
        def.letters = invert(prefix).letters;
        def.letters.insert(def.letters.end(), r.letters.begin(), r.letters.end());
        Word inv_suffix = invert(suffix);
        def.letters.insert(def.letters.end(), inv_suffix.letters.begin(), inv_suffix.letters.end());
        def = free_reduce(std::move(def));
        if (cand.sign < 0) def = invert(def);
        if (def.letters.size() > max_len) continue;
        if (!best || def.letters.size() < best->defining.letters.size())
          best = Candidate{ri, cand.arrow, std::move(def)};
      }
    }
  }
  return best;
}

} // namespace

Word SimplifiedPresentation::transport(const Word& w) const {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    auto it = rewrite.find(l.arrow);
    if (it == rewrite.end())
      throw LookupError("simplified presentation: unknown generator '" + l.arrow + "'");
    const Word& img = it->second;
    if (l.sign > 0)
      out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    else {
      Word inv = invert(img);
      out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  out.src = w.src;
  out.dst = w.dst;
  return free_reduce(std::move(out));
}

SimplifiedPresentation simplify_presentation(const GroupoidPresentation& p,
                                             const SimplifyLimits& limits) {
  std::vector<Arrow> arrows = p.arrows();
  std::vector<Relator> relators = p.relators();
  std::map<std::string, Word> rewrite;
  std::map<std::string, Arrow> arrow_of;
  for (const auto& a : arrows) {
    rewrite[a.id] = Word{{Letter{a.id, 1}}, a.src, a.dst};
    arrow_of[a.id] = a;
  }

  for (std::size_t round = 0; round < limits.max_rounds; ++round) {
    // trivial / duplicate relators
    std::vector<Relator> kept;
    std::set<std::string> seen;
    for (auto& r : relators) {
      if (r.lhs == r.rhs) continue;
      std::string key = relator_key(r);
      if (!seen.insert(key).second) continue;
      kept.push_back(std::move(r));
    }
    relators = std::move(kept);

    auto cand = find_elimination(relators, limits.max_defining_length);
    if (!cand) break;

    // endpoints of the defining word come from the eliminated arrow
    const Arrow& dead = arrow_of.at(cand->gen);
    Word def = cand->defining;
    def.src = dead.src;
    def.dst = dead.dst;

    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(cand->relator_index));
    for (auto& r : relators) {
      r.lhs = substitute(r.lhs, cand->gen, def);
      r.rhs = substitute(r.rhs, cand->gen, def);
    }
    for (auto& [orig, w] : rewrite) w = substitute(w, cand->gen, def);
    arrows.erase(std::remove_if(arrows.begin(), arrows.end(),
                                [&](const Arrow& a) { return a.id == cand->gen; }),
                 arrows.end());
    arrow_of.erase(cand->gen);
  }

  SimplifiedPresentation out;
  out.presentation = GroupoidPresentation::make(p.objects(), std::move(arrows), std::move(relators));
  out.rewrite = std::move(rewrite);
  return out;
}

} // namespace vkg
