// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vkg/equality.hpp"
#include "vkg/pi1.hpp"
#include "vkg/rng.hpp"

namespace vkg {

// A path in the base together with a subdivision, a cover piece containing
// each segment, and connector paths in E x_B E whose far ends lie over the
// base set.
struct WeightedPath {
  EdgePath path;                     // f, endpoints in S
  std::vector<std::size_t> breakpoints; // 0 = t_0 < ... < t_n = length(f)
  std::vector<std::string> pieces;      // piece names, one per segment
  std::vector<EdgePath> connectors;     // n-1 paths in E x_B E

  std::size_t segments() const { return pieces.size(); }
  EdgePath segment(const Complex2& base, std::size_t i) const;
};

// Finest weight: one segment per edge, first declared piece containing each
// edge, connectors found by BFS into the S-fiber of E x_B E.
WeightedPath weigh_path(const VkSetting& setting, const EdgePath& f);

// Weight with prescribed subdivision and pieces (the "chosen in advance"
// clause). ContractError naming the first edge outside its prescribed piece.
WeightedPath weigh_path_with(const VkSetting& setting, const EdgePath& f,
                             std::vector<std::size_t> breakpoints,
                             std::vector<std::string> piece_names);

// Checks every invariant of the weighted path against the setting.
void validate_weighted(const VkSetting& setting, const WeightedPath& w);

// New connectors with the same mandatory start vertices: a seeded random walk
// followed by the BFS closure into the S-fiber.
WeightedPath randomize_connectors(const VkSetting& setting, WeightedPath w, Rng& rng);

// The morphisms h_1 ... h_n of the weighted path, as words of pi1(E, S),
// together with the underlying edge paths in E.
struct AssociatedSequence {
  std::vector<Word> words;
  std::vector<EdgePath> underlying;
};

AssociatedSequence associated_sequence(const VkSetting& setting, const WeightedPath& w);

// All single-move combinatorial homotopies of f: backtrack insertion and
// deletion, and replacement of a boundary subword by its complement. f itself
// is never in the output.
std::vector<EdgePath> elementary_homotopies(const Complex2& x, const EdgePath& f);

// The functor epsilon of the coequalizer proof, evaluated via weights: for a
// coequalizing delta : pi1(E,S) -> G this sends [f] to delta(h_n)...delta(h_1).
// Construction verifies delta alpha = delta beta generator-wise with the
// target battery; an Unknown verdict there is a hard error.
class EpsilonEvaluator {
public:
  EpsilonEvaluator(const VkSetting& setting, PresentationMorphism delta, Budget budget = {});
  // Shares an existing battery over delta's target (it is cache-heavy).
  EpsilonEvaluator(const VkSetting& setting, PresentationMorphism delta,
                   std::shared_ptr<EqualityBattery> battery);

  Word evaluate(const EdgePath& f) const;
  Word evaluate(const WeightedPath& w) const;

  const PresentationMorphism& delta() const { return delta_; }
  EqualityBattery& target_battery() const { return *battery_; }

private:
  const VkSetting& setting_;
  PresentationMorphism delta_;
  mutable std::shared_ptr<EqualityBattery> battery_; // battery over delta's target
};

Word evaluate_epsilon(const VkSetting& setting, const PresentationMorphism& delta,
                      const EdgePath& f, const Budget& budget = {});

// Seeded random edge path helpers used by the property suites and the CLI
// trial mode. Paths end in the respective S-fiber by BFS closure.
EdgePath random_base_path(const VkSetting& setting, Rng& rng, std::size_t max_steps = 8);
EdgePath random_total_path(const VkSetting& setting, Rng& rng, std::size_t max_steps = 8);

} // namespace vkg
