// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "vkg/rng.hpp"
#include "vkg/snf.hpp"

using namespace vkg;

TEST_CASE("oracle values frozen for the golden relator matrices") {
  // Computed with the determinantal-divisor oracle; these literals are the
  // reference values the rest of the suite builds on.
  CHECK(vkgtest::snf_oracle({{2}}, 1) == AbelianInvariants{0, {2}});          // <a | a^2>
  CHECK(vkgtest::snf_oracle({{2, 0}}, 2) == AbelianInvariants{1, {2}});      // Klein bottle
  CHECK(vkgtest::snf_oracle({{0, 0}}, 2) == AbelianInvariants{2, {}});       // torus commutator
  CHECK(vkgtest::snf_oracle(IntMatrix{}, 0) == AbelianInvariants{0, {}});    // no generators
  CHECK(vkgtest::snf_oracle({{6, 4}, {4, 6}}, 2) == AbelianInvariants{0, {2, 10}});
}

TEST_CASE("production smith normal form matches the oracle on random matrices") {
  Rng rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = rng.below(5);
    std::size_t cols = 1 + rng.below(5);
    IntMatrix m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng.below(13)) - 6;

    GroupoidPresentation g = [&] {
      std::vector<Arrow> arrows;
      for (std::size_t j = 0; j < cols; ++j)
        arrows.push_back(Arrow{"g" + std::to_string(j), "o", "o"});
      std::vector<Relator> relators;
      for (const auto& row : m) {
        std::vector<Letter> letters;
        for (std::size_t j = 0; j < cols; ++j) {
          long long e = row[j];
          for (long long k = 0; k < std::abs(e); ++k)
            letters.push_back(Letter{"g" + std::to_string(j), e > 0 ? 1 : -1});
        }
        Word lhs{letters, "o", "o"};
        relators.push_back(Relator{lhs, empty_word("o")});
      }
      return GroupoidPresentation::make({"o"}, std::move(arrows), std::move(relators));
    }();

    CAPTURE(trial);
    CHECK(abelian_invariants(g) == vkgtest::snf_oracle(m, cols));
  }
}

TEST_CASE("smith diagonal is a divisibility chain") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng.below(4);
    std::size_t cols = 1 + rng.below(4);
    IntMatrix m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng.below(21)) - 10;
    SmithResult s = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i + 1] == 0) continue;
      CHECK(s.diagonal[i] != 0);
      CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
  }
}

TEST_CASE("abelian_invariants examples") {
  GroupoidPresentation z2 = [] {
    GroupoidPresentation base = GroupoidPresentation::make({"o"}, {Arrow{"a", "o", "o"}}, {});
    Word aa = base.word_at({Letter{"a", 1}, Letter{"a", 1}}, "o");
    return GroupoidPresentation::make({"o"}, {Arrow{"a", "o", "o"}},
                                      {Relator{aa, empty_word("o")}});
  }();
  CHECK(abelian_invariants(z2) == AbelianInvariants{0, {2}});

  GroupoidPresentation free2 = GroupoidPresentation::make(
      {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
  CHECK(abelian_invariants(free2) == AbelianInvariants{2, {}});

  GroupoidPresentation klein = [] {
    GroupoidPresentation base = GroupoidPresentation::make(
        {"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}}, {});
    Word r = base.word_at({Letter{"a", 1}, Letter{"b", 1}, Letter{"a", 1}, Letter{"b", -1}}, "o");
    return GroupoidPresentation::make({"o"}, {Arrow{"a", "o", "o"}, Arrow{"b", "o", "o"}},
                                      {Relator{r, empty_word("o")}});
  }();
  CHECK(abelian_invariants(klein) == AbelianInvariants{1, {2}});

  GroupoidPresentation two_objects =
      GroupoidPresentation::make({"x", "y"}, {Arrow{"a", "x", "y"}}, {});
  CHECK_THROWS_AS(abelian_invariants(two_objects), ContractError);
}

TEST_CASE("row lattice membership") {
  IntMatrix m{{2, 0}, {0, 3}};
  CHECK(in_row_lattice(m, {2, 3}));
  CHECK(in_row_lattice(m, {4, -3}));
  CHECK(!in_row_lattice(m, {1, 0}));
  CHECK(!in_row_lattice(m, {0, 1}));
  CHECK(in_row_lattice(IntMatrix{}, {}));
}
