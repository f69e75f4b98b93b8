// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "vkg/morphism.hpp"
#include "vkg/presentation.hpp"
#include "vkg/word.hpp"

using namespace vkg;

namespace {

GroupoidPresentation chain_presentation() {
  // a: x->y, b: y->z, c: y->w, plus a loop at x
  return GroupoidPresentation::make(
      {"w", "x", "y", "z"},
      {Arrow{"a", "x", "y"}, Arrow{"b", "y", "z"}, Arrow{"c", "y", "w"}, Arrow{"l", "x", "x"}},
      {});
}

} // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  GroupoidPresentation p = chain_presentation();

  Word w = p.word_at({Letter{"a", 1}, Letter{"a", -1}}, "x");
  CHECK(w.empty());
  CHECK(w.src == "x");
  CHECK(w.dst == "x");

  Word inner = p.word_at({Letter{"a", 1}, Letter{"b", 1}, Letter{"b", -1}, Letter{"c", 1}}, "x");
  CHECK(inner.letters == std::vector<Letter>{Letter{"a", 1}, Letter{"c", 1}});

  Word fixed = p.word_at({Letter{"a", 1}, Letter{"b", 1}}, "x");
  CHECK(free_reduce(fixed) == fixed);
}

TEST_CASE("compose follows the category convention") {
  GroupoidPresentation p = chain_presentation();

  Word ex = empty_word("x");
  CHECK(compose(ex, ex) == ex);

  Word a = p.word_at({Letter{"a", 1}}, "x");
  Word b = p.word_at({Letter{"b", 1}}, "y");
  Word ba = compose(b, a); // b after a = path a then b
  CHECK(ba.letters == std::vector<Letter>{Letter{"a", 1}, Letter{"b", 1}});
  CHECK(ba.src == "x");
  CHECK(ba.dst == "z");

  CHECK(compose(invert(a), a) == empty_word("x"));
  CHECK_THROWS_AS(compose(a, a), CompositionError);
}

TEST_CASE("malformed words are rejected") {
  GroupoidPresentation p = chain_presentation();
  CHECK_THROWS_AS(p.word_at({Letter{"c", 1}, Letter{"a", 1}}, "y"), StructuralError);
  CHECK_THROWS_AS(p.word_at({Letter{"missing", 1}}, "x"), LookupError);
  Word bad{{Letter{"a", 1}}, "x", "x"};
  CHECK_THROWS_AS(p.validate_word(bad), StructuralError);
}

TEST_CASE("apply_morphism substitutes letterwise with exponent handling") {
  GroupoidPresentation p = chain_presentation();
  PresentationMorphism id = PresentationMorphism::identity(p);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Word w = vkgtest::random_word(p, rng);
    CHECK(id.apply(w) == w);
  }

  // m(a) = [c, d] style: map a generator to a two-letter word
  GroupoidPresentation target = GroupoidPresentation::make(
      {"u", "v", "t"}, {Arrow{"c", "u", "v"}, Arrow{"d", "v", "t"}}, {});
  GroupoidPresentation source =
      GroupoidPresentation::make({"x", "y"}, {Arrow{"a", "x", "y"}}, {});
  PresentationMorphism m = PresentationMorphism::make(
      source, target, {{"x", "u"}, {"y", "t"}},
      {{"a", target.word_at({Letter{"c", 1}, Letter{"d", 1}}, "u")}});
  Word image = m.apply(source.word_at({Letter{"a", -1}}, "y"));
  CHECK(image.letters == std::vector<Letter>{Letter{"d", -1}, Letter{"c", -1}});

  CHECK_THROWS_AS(m.apply(Word{{Letter{"zz", 1}}, "x", "y"}), StructuralError);
}

TEST_CASE("interval collapse onto the integers sends the arrow to the loop") {
  // 0 --i--> 1 collapsed to one object with a loop z
  GroupoidPresentation interval =
      GroupoidPresentation::make({"0", "1"}, {Arrow{"i", "0", "1"}}, {});
  GroupoidPresentation circle = GroupoidPresentation::make({"o"}, {Arrow{"z", "o", "o"}}, {});
  PresentationMorphism collapse = PresentationMorphism::make(
      interval, circle, {{"0", "o"}, {"1", "o"}}, {{"i", circle.word_at({Letter{"z", 1}}, "o")}});
  CHECK(collapse.apply(interval.word_at({Letter{"i", 1}}, "0")) ==
        circle.word_at({Letter{"z", 1}}, "o"));
}

TEST_CASE("free reduction properties on random words") {
  GroupoidPresentation p = chain_presentation();
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    Word w = vkgtest::random_word(p, rng, 10);
    Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(r.letters.size() <= w.letters.size());
    CHECK(compose(invert(w), w) == empty_word(w.src));
  }
}

TEST_CASE("apply_morphism commutes with reduction and composition on random input") {
  GroupoidPresentation p = chain_presentation();
  // random-ish morphism into a small connected target
  GroupoidPresentation target = GroupoidPresentation::make(
      {"m", "n"}, {Arrow{"u", "m", "n"}, Arrow{"v", "n", "m"}, Arrow{"s", "m", "m"}}, {});
  Rng rng(2024);
  std::map<std::string, std::string> om{{"w", "m"}, {"x", "m"}, {"y", "n"}, {"z", "m"}};
  std::map<std::string, Word> am;
  auto word_between = [&](const std::string& a, const std::string& b) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      Word w = vkgtest::random_word_from(target, a, rng, 4);
      if (w.dst == b) return w;
    }
    throw std::runtime_error("no word found");
  };
  am["a"] = word_between(om["x"], om["y"]);
  am["b"] = word_between(om["y"], om["z"]);
  am["c"] = word_between(om["y"], om["w"]);
  am["l"] = word_between(om["x"], om["x"]);
  PresentationMorphism m = PresentationMorphism::make(p, target, om, am);

  for (int i = 0; i < 100; ++i) {
    Word w = vkgtest::random_word(p, rng, 8);
    Word u = vkgtest::random_word_from(p, w.dst, rng, 8);
    // functoriality: m(u . w) = m(u) . m(w) as reduced words
    Word uw = compose(u, w);
    CHECK(m.apply(uw) == compose(m.apply(u), m.apply(w)));
    CHECK(m.apply(free_reduce(w)) == m.apply(w));
  }
}
