// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vkg/colimits.hpp"
#include "vkg/groups.hpp"
#include "vkg/presentation.hpp"
#include "vkg/rewrite.hpp"
#include "vkg/snf.hpp"
#include "vkg/tietze.hpp"

namespace vkg {

// Deterministic work budget for a single battery. Wall-clock timeouts would
// make verdicts run-dependent, so effort is bounded by counts instead.
struct Budget {
  KbBudget kb{};
  std::uint64_t hom_budget = 100'000'000; // relator evaluations
  int fingerprint_order = 8;              // finite-group catalog bound, <= 12
  std::size_t hom_enum_cap = 100000;      // materialized homs per (object, group)
  std::size_t hom_gens_cap = 8;           // witness search skipped beyond this many generators
};

// A homomorphism into a finite group separating two words; enough data to
// re-verify the separation without the battery.
struct HomSeparation {
  std::string group;
  GroupoidPresentation vertex_group; // simplified, one object
  std::vector<std::string> generators;
  std::vector<int> images;
  Word loop; // u * v^-1 transported into vertex_group
  int value = 0;
};

struct EqualityVerdict {
  enum class Kind { Equal, Distinct, Unknown };

  Kind kind = Kind::Unknown;
  std::string method; // "free", "relator", "rewrite", "normal-form", "abelianization", "hom:<G>"
  std::string detail;
  std::optional<HomSeparation> hom_witness;
  std::optional<std::vector<long long>> abelian_vector; // exponent vector of u * v^-1

  bool equal() const { return kind == Kind::Equal; }
  bool distinct() const { return kind == Kind::Distinct; }
  bool unknown() const { return kind == Kind::Unknown; }
};

std::string to_string(EqualityVerdict::Kind k);

// Word-equality semi-decision battery for one presentation, in order: free
// reduction, direct relator lookup, Knuth-Bendix normal forms, abelianized
// vertex-group comparison, homomorphism fingerprints into the finite-group
// catalog. Distinct only from a separating invariant or a confluent system;
// Equal only from an actual derivation. Completion and per-object vertex
// group data are computed once and cached.
class EqualityBattery {
public:
  explicit EqualityBattery(GroupoidPresentation g, Budget budget = {});

  const GroupoidPresentation& presentation() const { return presentation_; }
  const Budget& budget() const { return budget_; }

  EqualityVerdict decide(const Word& u, const Word& v);

  // Battery-level access for reports and tests.
  const RewriteSystem& rewriting();
  bool rewriting_confluent();

private:
  struct ObjectCache {
    VertexGroupData vg;
    SimplifiedPresentation simplified;
    IntMatrix relator_matrix_simplified;
    std::optional<SmithResult> smith;
    // group catalog index -> enumerated homs (nullopt = skipped by budget)
    std::map<std::size_t, std::optional<std::vector<std::vector<int>>>> homs;
  };

  ObjectCache& object_cache(const std::string& object);

  GroupoidPresentation presentation_;
  Budget budget_;
  RewriteSystem rewrite_;
  bool rewrite_completed_ = false;
  std::map<std::string, ObjectCache> objects_;
  std::vector<GroupTable> catalog_;
};

EqualityVerdict decide_equal(const GroupoidPresentation& g, const Word& u, const Word& v,
                             const Budget& budget = {});

} // namespace vkg
