// SPDX-License-Identifier: Apache-2.0
#include "vkg/equality.hpp"

#include <algorithm>
#include <set>

namespace vkg {

std::string to_string(EqualityVerdict::Kind k) {
  switch (k) {
    case EqualityVerdict::Kind::Equal: return "Equal";
    case EqualityVerdict::Kind::Distinct: return "Distinct";
    case EqualityVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

EqualityBattery::EqualityBattery(GroupoidPresentation g, Budget budget)
    : presentation_(std::move(g)), budget_(std::move(budget)) {
  rewrite_ = RewriteSystem::build(presentation_);
  catalog_ = groups_of_order_up_to(budget_.fingerprint_order);
}

const RewriteSystem& EqualityBattery::rewriting() {
  if (!rewrite_completed_) {
    rewrite_.complete(budget_.kb);
    rewrite_completed_ = true;
  }
  return rewrite_;
}

bool EqualityBattery::rewriting_confluent() { return rewriting().confluent(); }

EqualityBattery::ObjectCache& EqualityBattery::object_cache(const std::string& object) {
  auto it = objects_.find(object);
  if (it != objects_.end()) return it->second;

  ObjectCache cache;
  cache.vg = vertex_group_data(presentation_, object);
  cache.simplified = simplify_presentation(cache.vg.group);
  cache.relator_matrix_simplified = relator_matrix(cache.simplified.presentation);
  if (!cache.relator_matrix_simplified.empty())
    cache.smith = smith_normal_form(cache.relator_matrix_simplified);
  return objects_.emplace(object, std::move(cache)).first->second;
}

namespace {

std::vector<long long> exponent_vector(const GroupoidPresentation& p, const Word& w) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < p.arrows().size(); ++i) pos[p.arrows()[i].id] = i;
  std::vector<long long> out(p.arrows().size(), 0);
  for (const auto& l : w.letters) out[pos.at(l.arrow)] += l.sign;
  return out;
}

bool lattice_contains(const std::optional<SmithResult>& smith,
                      const std::vector<long long>& vec) {
  if (!smith) {
    return std::all_of(vec.begin(), vec.end(), [](long long x) { return x == 0; });
  }
  const SmithResult& s = *smith;
  std::vector<long long> cv(s.cols, 0);
  for (std::size_t j = 0; j < s.cols; ++j) {
    long long acc = 0;
    for (std::size_t i = 0; i < s.cols; ++i) acc += vec[i] * s.col_transform[i][j];
    cv[j] = acc;
  }
  for (std::size_t j = 0; j < s.cols; ++j) {
    long long d = j < s.diagonal.size() ? s.diagonal[j] : 0;
    if (d == 0) {
      if (cv[j] != 0) return false;
    } else if (cv[j] % d != 0) {
      return false;
    }
  }
  return true;
}

} // namespace

EqualityVerdict EqualityBattery::decide(const Word& u_in, const Word& v_in) {
  presentation_.validate_word(u_in);
  presentation_.validate_word(v_in);
  if (u_in.src != v_in.src || u_in.dst != v_in.dst)
    throw ContractError("decide_equal: words are not parallel (" + u_in.src + "->" + u_in.dst +
                        " vs " + v_in.src + "->" + v_in.dst + ")");

  Word u = free_reduce(u_in);
  Word v = free_reduce(v_in);

  if (u == v) return EqualityVerdict{EqualityVerdict::Kind::Equal, "free", "freely equal"};

  for (const auto& r : presentation_.relators()) {
    if ((u == r.lhs && v == r.rhs) || (u == r.rhs && v == r.lhs))
      return EqualityVerdict{EqualityVerdict::Kind::Equal, "relator", "declared relator pair"};
  }

  const RewriteSystem& rs = rewriting();
  auto nu = rs.normal_form(rs.encode(u));
  auto nv = rs.normal_form(rs.encode(v));
  if (nu == nv)
    return EqualityVerdict{EqualityVerdict::Kind::Equal, "rewrite",
                           "same normal form under the derived rewriting system"};
  if (rs.confluent()) {
    EqualityVerdict verdict{EqualityVerdict::Kind::Distinct, "normal-form",
                            "confluent system separates the normal forms"};
    return verdict;
  }

  // Abelianized comparison at the vertex group of the common source.
  ObjectCache& cache = object_cache(u.src);
  Word loop = concat(u, invert(v)); // loop at u.src
  Word anchored = reanchor_word(cache.vg, loop);
  Word transported = cache.simplified.transport(anchored);
  std::vector<long long> vec = exponent_vector(cache.simplified.presentation, transported);
  if (!lattice_contains(cache.smith, vec)) {
    EqualityVerdict verdict{EqualityVerdict::Kind::Distinct, "abelianization",
                            "u v^-1 is nonzero in the abelianized vertex group"};
    verdict.abelian_vector = std::move(vec);
    return verdict;
  }

  // Hom fingerprints: any assignment into a catalog group separating the
  // loop from the identity is a sound witness of distinctness. Enumerations
  // are per (object, group) and cached; the word only enters at evaluation.
  const GroupoidPresentation& vg = cache.simplified.presentation;
  bool hom_skipped = false;
  if (vg.arrows().size() <= budget_.hom_gens_cap) {
    std::map<std::string, std::size_t> arrow_pos;
    for (std::size_t i = 0; i < vg.arrows().size(); ++i) arrow_pos[vg.arrows()[i].id] = i;

    for (std::size_t gi = 0; gi < catalog_.size(); ++gi) {
      const GroupTable& group = catalog_[gi];
      auto homs_it = cache.homs.find(gi);
      if (homs_it == cache.homs.end()) {
        std::optional<std::vector<std::vector<int>>> homs;
        try {
          homs = enumerate_homs(vg, group, budget_.hom_budget, budget_.hom_enum_cap);
        } catch (const BudgetError&) {
          homs = std::nullopt;
        }
        homs_it = cache.homs.emplace(gi, std::move(homs)).first;
      }
      if (!homs_it->second) {
        hom_skipped = true;
        continue;
      }
      for (const auto& hom : *homs_it->second) {
        int acc = GroupTable::identity();
        for (const auto& l : transported.letters) {
          int img = hom[arrow_pos.at(l.arrow)];
          acc = group.mul(acc, l.sign > 0 ? img : group.inverse(img));
        }
        if (acc != GroupTable::identity()) {
          HomSeparation sep;
          sep.group = group.name();
          sep.vertex_group = vg;
          for (const auto& a : vg.arrows()) sep.generators.push_back(a.id);
          sep.images = hom;
          sep.loop = transported;
          sep.value = acc;
          EqualityVerdict verdict{EqualityVerdict::Kind::Distinct, "hom:" + group.name(),
                                  "separating homomorphism into " + group.name()};
          verdict.hom_witness = std::move(sep);
          return verdict;
        }
      }
    }
  } else {
    hom_skipped = true;
  }

  std::string detail = "rewriting not confluent within budget; abelianization and hom "
                       "fingerprints (order <= " +
                       std::to_string(budget_.fingerprint_order) + ") do not separate";
  if (hom_skipped) detail += "; some hom searches skipped by budget";
  return EqualityVerdict{EqualityVerdict::Kind::Unknown, "battery", detail};
}

EqualityVerdict decide_equal(const GroupoidPresentation& g, const Word& u, const Word& v,
                             const Budget& budget) {
  EqualityBattery battery(g, budget);
  return battery.decide(u, v);
}

} // namespace vkg
