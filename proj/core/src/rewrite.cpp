// SPDX-License-Identifier: Apache-2.0
#include "vkg/rewrite.hpp"

#include <algorithm>

namespace vkg {

namespace {

std::int32_t inverse_symbol(std::int32_t s) { return s ^ 1; }

bool is_factor_at(const std::vector<std::int32_t>& hay, const std::vector<std::int32_t>& needle,
                  std::size_t pos) {
  if (pos + needle.size() > hay.size()) return false;
  return std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(pos));
}

} // namespace

RewriteSystem RewriteSystem::build(const GroupoidPresentation& p) {
  RewriteSystem rs;
  rs.presentation_ = p;
  std::vector<std::string> ids;
  for (const auto& a : p.arrows()) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  rs.symbols_ = ids;
  for (std::size_t i = 0; i < ids.size(); ++i)
    rs.index_[ids[i]] = static_cast<std::int32_t>(2 * i);

  // free cancellation, oriented from the start
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::int32_t x = static_cast<std::int32_t>(2 * i);
    rs.rules_.push_back(RewriteRule{{x, inverse_symbol(x)}, {}});
    rs.rules_.push_back(RewriteRule{{inverse_symbol(x), x}, {}});
  }
  for (const auto& r : p.relators()) rs.add_pending(rs.encode(r.lhs), rs.encode(r.rhs));
  return rs;
}

std::vector<std::int32_t> RewriteSystem::encode(const Word& w) const {
  std::vector<std::int32_t> out;
  out.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    auto it = index_.find(l.arrow);
    if (it == index_.end()) throw LookupError("rewrite: unknown arrow '" + l.arrow + "'");
    out.push_back(l.sign > 0 ? it->second : inverse_symbol(it->second));
  }
  return out;
}

Word RewriteSystem::decode(const std::vector<std::int32_t>& w, const std::string& src) const {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (std::int32_t s : w)
    letters.push_back(Letter{symbols_[static_cast<std::size_t>(s / 2)], s % 2 == 0 ? 1 : -1});
  return presentation_.word_at(std::move(letters), src);
}

std::vector<std::int32_t> RewriteSystem::normal_form(std::vector<std::int32_t> w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const auto& rule : rules_) {
        if (!is_factor_at(w, rule.lhs, pos)) continue;
        std::vector<std::int32_t> next;
        next.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
        next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()),
                    w.end());
        w = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return w;
}

bool RewriteSystem::shortlex_less(const std::vector<std::int32_t>& a,
                                  const std::vector<std::int32_t>& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void RewriteSystem::add_pending(std::vector<std::int32_t> a, std::vector<std::int32_t> b) {
  pending_.emplace_back(std::move(a), std::move(b));
}

RewriteSystem::CompletionStats RewriteSystem::complete(const KbBudget& budget) {
  CompletionStats stats;
  if (completed_) {
    stats.confluent = confluent_;
    stats.rules = rules_.size();
    return stats;
  }

  bool exhausted = false;
  while (!pending_.empty()) {
    if (stats.rounds >= budget.max_rounds || rules_.size() >= budget.max_rules ||
        pending_.size() >= budget.max_pending) {
      exhausted = true;
      break;
    }
    ++stats.rounds;

    auto [u, v] = std::move(pending_.front());
    pending_.pop_front();
    u = normal_form(std::move(u));
    v = normal_form(std::move(v));
    if (u == v) continue;

    RewriteRule fresh;
    if (shortlex_less(u, v)) {
      fresh = RewriteRule{std::move(v), std::move(u)};
    } else {
      fresh = RewriteRule{std::move(u), std::move(v)};
    }

    // Interreduce: rules whose left side the fresh rule touches go back to
    // the equation queue; right sides are kept normalized.
    std::vector<RewriteRule> survivors;
    survivors.reserve(rules_.size() + 1);
    for (auto& rule : rules_) {
      bool reducible = false;
      for (std::size_t pos = 0; pos + fresh.lhs.size() <= rule.lhs.size() && !reducible; ++pos)
        reducible = is_factor_at(rule.lhs, fresh.lhs, pos);
      if (reducible) {
        add_pending(std::move(rule.lhs), std::move(rule.rhs));
      } else {
        survivors.push_back(std::move(rule));
      }
    }
    rules_ = std::move(survivors);
    rules_.push_back(fresh);
    for (auto& rule : rules_) rule.rhs = normal_form(rule.rhs);

    // Critical pairs of the fresh rule against every rule (both orders).
    std::size_t fresh_index = rules_.size() - 1;
    for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
      for (int dir = 0; dir < 2; ++dir) {
        const RewriteRule& r1 = dir == 0 ? rules_[fresh_index] : rules_[ri];
        const RewriteRule& r2 = dir == 0 ? rules_[ri] : rules_[fresh_index];
        if (dir == 1 && ri == fresh_index) continue; // self pair already done

        // proper overlaps: suffix of l1 = prefix of l2
        std::size_t kmax = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
          if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + static_cast<std::ptrdiff_t>(k),
                          r1.lhs.end() - static_cast<std::ptrdiff_t>(k)))
            continue;
          std::vector<std::int32_t> left = r1.rhs;
          left.insert(left.end(), r2.lhs.begin() + static_cast<std::ptrdiff_t>(k), r2.lhs.end());
          std::vector<std::int32_t> right(r1.lhs.begin(),
                                          r1.lhs.end() - static_cast<std::ptrdiff_t>(k));
          right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
          add_pending(std::move(left), std::move(right));
        }
        // containment: l2 inside l1
        if (r2.lhs.size() < r1.lhs.size()) {
          for (std::size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos) {
            if (!is_factor_at(r1.lhs, r2.lhs, pos)) continue;
            std::vector<std::int32_t> right(r1.lhs.begin(),
                                            r1.lhs.begin() + static_cast<std::ptrdiff_t>(pos));
            right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
            right.insert(right.end(),
                         r1.lhs.begin() + static_cast<std::ptrdiff_t>(pos + r2.lhs.size()),
                         r1.lhs.end());
            add_pending(r1.rhs, std::move(right));
          }
        }
      }
    }
  }

  confluent_ = pending_.empty() && !exhausted;
  completed_ = confluent_ || exhausted;
  stats.confluent = confluent_;
  stats.rules = rules_.size();
  return stats;
}

} // namespace vkg
