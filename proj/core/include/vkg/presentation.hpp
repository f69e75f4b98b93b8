// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vkg/word.hpp"

namespace vkg {

struct Arrow {
  std::string id;
  std::string src;
  std::string dst;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A pair of parallel words declared equal. Groupoid relators need not be
// loops, so both sides are kept explicitly.
struct Relator {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relator&, const Relator&) = default;
};

// Finitely presented groupoid: objects, generating arrows with endpoints,
// and relator pairs. Relator words are stored freely reduced.
class GroupoidPresentation {
public:
  GroupoidPresentation() = default;

  static GroupoidPresentation make(std::vector<std::string> objects,
                                   std::vector<Arrow> arrows,
                                   std::vector<Relator> relators);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relator>& relators() const { return relators_; }

  bool has_object(const std::string& o) const { return object_set_.count(o) > 0; }
  bool has_arrow(const std::string& id) const { return arrow_index_.count(id) > 0; }
  const Arrow& arrow(const std::string& id) const;

  std::string letter_src(const Letter& l) const;
  std::string letter_dst(const Letter& l) const;

  // Validates composability and endpoint bookkeeping of `w` against this
  // presentation's arrows; throws StructuralError.
  void validate_word(const Word& w) const;

  // Builds a reduced, validated word. Empty letter sequences need `at` to
  // anchor the identity.
  Word word_at(std::vector<Letter> letters, const std::string& at) const;
  Word word(std::vector<Letter> letters) const;

  friend bool operator==(const GroupoidPresentation&, const GroupoidPresentation&) = default;

private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Relator> relators_;
  std::set<std::string> object_set_;
  std::map<std::string, std::size_t> arrow_index_;
};

std::string to_string(const GroupoidPresentation& p);

} // namespace vkg
