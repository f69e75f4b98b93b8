// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vkg/colimits.hpp"
#include "vkg/equality.hpp"
#include "vkg/pi1.hpp"
#include "vkg/snf.hpp"
#include "vkg/weighted.hpp"

namespace vkg {

// Falsifiable isomorphism evidence for a vertex group: abelian invariants
// plus homomorphism counts into the finite-group catalog. Counts skipped by
// budget are recorded as absent and compared only when both sides have them.
struct Fingerprint {
  AbelianInvariants invariants;
  std::vector<std::pair<std::string, std::optional<std::uint64_t>>> hom_counts;
};

Fingerprint fingerprint_at(const GroupoidPresentation& p, const std::string& object,
                           const Budget& budget);
bool fingerprints_agree(const Fingerprint& a, const Fingerprint& b);
std::string to_string(const Fingerprint& f);

struct ComparisonReport {
  struct ObjectEntry {
    std::string coeq_object;
    std::string base_object;
    Fingerprint coeq_fingerprint;
    Fingerprint base_fingerprint;
    bool agree = false;
  };

  bool object_bijection = false;
  bool fingerprints_equal = false;
  std::vector<ObjectEntry> objects;
  std::size_t roundtrip_equal = 0;
  std::size_t roundtrip_unknown = 0;
  std::size_t roundtrip_distinct = 0;
  std::vector<std::string> notes;

  bool roundtrips_all_equal() const { return roundtrip_unknown == 0 && roundtrip_distinct == 0; }
  bool pass() const {
    return object_bijection && fingerprints_equal && roundtrip_distinct == 0;
  }
};

enum class VkStatus { Pass, SectionFailure, HypothesisFailure, ComparisonFailure };
std::string to_string(VkStatus s);

struct VkRunResult {
  VkStatus status = VkStatus::Pass;
  SectionReport section_report;
  HypothesisReport hypothesis_report;
  std::shared_ptr<VkSetting> setting;
  std::optional<CoequalizerResult> coequalizer;
  std::optional<PresentationMorphism> comparison_map; // coequalizer -> pi1(B,S)
  std::optional<ComparisonReport> comparison;

  bool pass() const { return status == VkStatus::Pass; }
};

// The full pipeline: verify the cover, check the hypothesis,
// build the fork, coequalize, and compare the coequalizer against the
// directly computed pi1(B,S) via the canonical comparison functor.
VkRunResult run_vk(const SectionedCover& c, const BaseSet& s, const Budget& budget = {});

struct CrosscheckResult {
  VkRunResult given;
  VkRunResult coproduct; // cover replaced by the coproduct of its pieces
  VkRunResult pullback;  // composite E x_B E' -> B
  bool absolute = false; // the projection admits a global section
  bool agree = false;
  std::vector<std::string> notes;
};

// The comparison construction: the given cover, the coproduct cover E' built
// from the same pieces, and the pullback composite E x_B E' -> B must yield
// agreeing coequalizer fingerprints.
CrosscheckResult crosscheck_section4(const SectionedCover& c, const BaseSet& s,
                                     const Budget& budget = {});

struct InstanceBounds {
  std::size_t max_vertices = 8;
  std::size_t max_edges = 16;
  std::size_t max_faces = 6;
};

struct RandomInstance {
  Complex2 complex;
  SectionedCover cover;
  BaseSet base;
};

// Deterministic per seed: a random 2-complex, a star cover or a random 2-4
// piece family (both through cover_to_map), and a base set enlarged minimally
// until the hypothesis holds.
RandomInstance random_instance(std::uint64_t seed, const InstanceBounds& bounds = {});

} // namespace vkg
