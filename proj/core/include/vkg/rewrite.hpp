// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "vkg/presentation.hpp"

namespace vkg {

struct KbBudget {
  std::size_t max_rules = 400;
  std::size_t max_rounds = 4000;
  std::size_t max_pending = 100000;
};

struct RewriteRule {
  std::vector<std::int32_t> lhs;
  std::vector<std::int32_t> rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

// Shortlex string rewriting over the signed-arrow alphabet of a groupoid
// presentation. Because every rule is a parallel pair, symbol strings carry
// their typing implicitly: an occurrence of a rule's left side is composable
// wherever it appears, so plain string rewriting is sound here.
//
// Soundness does not need confluence: every derived rule is a consequence of
// the relators, so equal normal forms always certify equality. Distinctness
// of normal forms is conclusive only once completion finished.
class RewriteSystem {
public:
  RewriteSystem() = default;

  static RewriteSystem build(const GroupoidPresentation& p);

  struct CompletionStats {
    bool confluent = false;
    std::size_t rounds = 0;
    std::size_t rules = 0;
  };

  // Knuth-Bendix completion under the deterministic budget; idempotent.
  CompletionStats complete(const KbBudget& budget);

  bool confluent() const { return confluent_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  std::vector<std::int32_t> encode(const Word& w) const;
  std::vector<std::int32_t> normal_form(std::vector<std::int32_t> w) const;
  Word decode(const std::vector<std::int32_t>& w, const std::string& src) const;

private:
  void add_pending(std::vector<std::int32_t> a, std::vector<std::int32_t> b);
  bool shortlex_less(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) const;

  std::vector<std::string> symbols_;          // arrow id per symbol pair
  std::map<std::string, std::int32_t> index_; // arrow id -> positive symbol
  std::vector<RewriteRule> rules_;
  std::deque<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>> pending_;
  bool confluent_ = false;
  bool completed_ = false;
  GroupoidPresentation presentation_;
};

} // namespace vkg
