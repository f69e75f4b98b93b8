// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "vkg/groups.hpp"

using namespace vkg;

namespace {

GroupoidPresentation infinite_cyclic() {
  return GroupoidPresentation::make({"o"}, {Arrow{"a", "o", "o"}}, {});
}

GroupoidPresentation z_mod(int n) {
  GroupoidPresentation base = GroupoidPresentation::make({"o"}, {Arrow{"a", "o", "o"}}, {});
  std::vector<Letter> letters(static_cast<std::size_t>(n), Letter{"a", 1});
  return GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}},
      {Relator{base.word_at(letters, "o"), empty_word("o")}});
}

} // namespace

TEST_CASE("the whole catalog satisfies the group axioms") {
  auto groups = groups_of_order_up_to(12);
  // orders 1..12 have 0+1+1+2+1+2+1+5+2+2+1+5 = 23 nontrivial classes
  CHECK(groups.size() == 23);
  for (const auto& g : groups) {
    CAPTURE(g.name());
    CHECK(g.valid());
  }
  CHECK_THROWS_AS(groups_of_order_up_to(13), ContractError);
}

TEST_CASE("catalog is complete for each order") {
  std::map<int, int> by_order;
  for (const auto& g : groups_of_order_up_to(12)) by_order[g.order()]++;
  CHECK(by_order[2] == 1);
  CHECK(by_order[4] == 2);
  CHECK(by_order[6] == 2);
  CHECK(by_order[8] == 5);
  CHECK(by_order[9] == 2);
  CHECK(by_order[10] == 2);
  CHECK(by_order[12] == 5);
}

TEST_CASE("hom_count examples") {
  CHECK(hom_count(infinite_cyclic(), GroupTable::cyclic(5)) == 5);
  CHECK(hom_count(z_mod(2), GroupTable::cyclic(3)) == 1);

  // oracle: brute force over the S3 table, frozen result
  GroupTable s3 = GroupTable::symmetric3();
  int involutions = 0;
  for (int g = 0; g < s3.order(); ++g)
    if (s3.mul(g, g) == GroupTable::identity()) ++involutions;
  CHECK(involutions == 4);
  CHECK(hom_count(z_mod(2), s3) == static_cast<std::uint64_t>(involutions));
}

TEST_CASE("hom_count budget and contract errors") {
  GroupoidPresentation big = [] {
    std::vector<Arrow> arrows;
    for (int i = 0; i < 6; ++i) arrows.push_back(Arrow{"g" + std::to_string(i), "o", "o"});
    GroupoidPresentation base = GroupoidPresentation::make({"o"}, arrows, {});
    // one long relator touching every generator so nothing is free
    std::vector<Letter> letters;
    for (int i = 0; i < 6; ++i) {
      letters.push_back(Letter{"g" + std::to_string(i), 1});
      letters.push_back(Letter{"g" + std::to_string(i), 1});
    }
    std::vector<Relator> relators{Relator{base.word_at(letters, "o"), empty_word("o")}};
    return GroupoidPresentation::make({"o"}, arrows, relators);
  }();
  CHECK_THROWS_AS(hom_count(big, GroupTable::dihedral(6), /*budget=*/50), BudgetError);

  GroupoidPresentation two =
      GroupoidPresentation::make({"x", "y"}, {Arrow{"a", "x", "y"}}, {});
  CHECK_THROWS_AS(hom_count(two, GroupTable::cyclic(2)), ContractError);
}

TEST_CASE("free generators contribute a closed-form factor") {
  GroupoidPresentation free2 = GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
  for (const auto& g : groups_of_order_up_to(8)) {
    CHECK(hom_count(free2, g) ==
          static_cast<std::uint64_t>(g.order()) * static_cast<std::uint64_t>(g.order()));
  }
}

TEST_CASE("table presentations evaluate back to the table") {
  GroupTable q8 = GroupTable::quaternion8();
  GroupoidPresentation p = presentation_of_table(q8);
  CHECK(p.arrows().size() == 7);
  for (int i = 1; i < q8.order(); ++i)
    for (int j = 1; j < q8.order(); ++j) {
      Word w = p.word_at({Letter{"g" + std::to_string(i), 1}, Letter{"g" + std::to_string(j), 1}},
                         "o");
      CHECK(evaluate_in_table(q8, w) == q8.mul(i, j));
    }
}

TEST_CASE("enumerate_homs lists exactly the relator-respecting assignments") {
  GroupTable z4 = GroupTable::cyclic(4);
  auto homs = enumerate_homs(z_mod(2), z4, 1000, 100);
  // elements of order dividing 2 in Z4: 0 and 2
  CHECK(homs.size() == 2);
  for (const auto& h : homs) CHECK(z4.mul(h[0], h[0]) == 0);
}

TEST_CASE("hom_count is invariant under random Tietze moves") {
  // Z/2 and the golden one-relator vertex groups
  auto one_relator = [](std::vector<Letter> relator) {
    GroupoidPresentation base = GroupoidPresentation::make(
        {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
    return GroupoidPresentation::make(
        {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}},
        {Relator{base.word_at(std::move(relator), "o"), empty_word("o")}});
  };
  const std::pair<const char*, GroupoidPresentation> cases[] = {
      {"z2", z_mod(2)},
      {"torus", one_relator({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", -1}, Letter{"b", -1}})},
      {"klein", one_relator({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", 1}, Letter{"b", -1}})},
  };
  GroupTable s3 = GroupTable::symmetric3();
  for (const auto& [name, p] : cases) {
    std::uint64_t reference = hom_count(p, s3);
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
      GroupoidPresentation q = vkgtest::random_tietze_moves(p, rng, 1 + rng.below(3));
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(hom_count(q, s3) == reference);
    }
  }
}
