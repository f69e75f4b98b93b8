// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkg/presentation.hpp"

namespace vkg {

// Explicit multiplication table of a finite group. Element 0 is the identity.
class GroupTable {
public:
  GroupTable() = default;
  GroupTable(std::string name, std::vector<std::vector<int>> table);

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  static GroupTable symmetric3();
  static GroupTable dihedral(int n); // order 2n, n >= 3
  static GroupTable quaternion8();
  static GroupTable alternating4();
  static GroupTable dicyclic3(); // order 12

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  static constexpr int identity() { return 0; }

  // Group axioms; quadratic/cubic scans, meant for tests and construction.
  bool valid() const;

private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// Complete isomorphism-class catalog for orders 1..max_order. Supported up to
// order 12; larger requests throw (the catalog is curated, not computed).
std::vector<GroupTable> groups_of_order_up_to(int max_order);

// Number of generator assignments satisfying all relators, by exhaustive
// backtracking with relator pruning; generators untouched by relators are
// counted in closed form. Requires a one-object presentation. `budget` caps
// relator evaluations.
std::uint64_t hom_count(const GroupoidPresentation& g, const GroupTable& target,
                        std::uint64_t budget = 100'000'000);

// All homomorphisms as generator-image vectors (indexed like g.arrows()).
// Same pruning and budget as hom_count; results capped at max_results
// (BudgetError beyond).
std::vector<std::vector<int>> enumerate_homs(const GroupoidPresentation& g,
                                             const GroupTable& target, std::uint64_t budget,
                                             std::size_t max_results);

// One-object presentation with a generator per element and the full
// multiplication table as relators; decidable by design, used as a concrete
// codomain for functors into finite groups.
GroupoidPresentation presentation_of_table(const GroupTable& t, const std::string& object = "o");

// Evaluate a word of presentation_of_table(t) in t.
int evaluate_in_table(const GroupTable& t, const Word& w);

} // namespace vkg
