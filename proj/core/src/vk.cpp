// SPDX-License-Identifier: Apache-2.0
#include "vkg/vk.hpp"

#include <algorithm>
#include <sstream>

#include "vkg/rng.hpp"
#include "vkg/tietze.hpp"

namespace vkg {

std::string to_string(VkStatus s) {
  switch (s) {
    case VkStatus::Pass: return "pass";
    case VkStatus::SectionFailure: return "section-failure";
    case VkStatus::HypothesisFailure: return "hypothesis-failure";
    case VkStatus::ComparisonFailure: return "comparison-failure";
  }
  return "?";
}

Fingerprint fingerprint_at(const GroupoidPresentation& p, const std::string& object,
                           const Budget& budget) {
  VertexGroupData vg = vertex_group_data(p, object);
  Fingerprint fp;
  fp.invariants = abelian_invariants(vg.group);

  SimplifiedPresentation simp = simplify_presentation(vg.group);
  std::set<std::string> touched;
  for (const auto& r : simp.presentation.relators()) {
    for (const auto& l : r.lhs.letters) touched.insert(l.arrow);
    for (const auto& l : r.rhs.letters) touched.insert(l.arrow);
  }
  for (const auto& group : groups_of_order_up_to(budget.fingerprint_order)) {
    // cheap admission bound before starting an exhaustive search
    long double worst = 1.0L;
    for (std::size_t i = 0; i < touched.size(); ++i)
      worst *= static_cast<long double>(group.order());
    std::optional<std::uint64_t> count;
    if (worst <= static_cast<long double>(budget.hom_budget) * 16) {
      try {
        count = hom_count(simp.presentation, group, budget.hom_budget);
      } catch (const BudgetError&) {
        count = std::nullopt;
      }
    }
    fp.hom_counts.emplace_back(group.name(), count);
  }
  return fp;
}

bool fingerprints_agree(const Fingerprint& a, const Fingerprint& b) {
  if (!(a.invariants == b.invariants)) return false;
  for (const auto& [name, count] : a.hom_counts) {
    if (!count) continue;
    auto it = std::find_if(b.hom_counts.begin(), b.hom_counts.end(),
                           [&](const auto& x) { return x.first == name; });
    if (it == b.hom_counts.end() || !it->second) continue;
    if (*count != *it->second) return false;
  }
  return true;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << to_string(f.invariants) << " homs{";
  bool first = true;
  for (const auto& [name, count] : f.hom_counts) {
    if (!first) os << ' ';
    os << name << '=';
    if (count)
      os << *count;
    else
      os << '?';
    first = false;
  }
  os << '}';
  return os.str();
}

VkRunResult run_vk(const SectionedCover& c, const BaseSet& s, const Budget& budget) {
  VkRunResult result;
  result.section_report = verify_locally_sectionable(c);
  if (!result.section_report.ok) {
    result.status = VkStatus::SectionFailure;
    return result;
  }

  CoverGeometry geometry = CoverGeometry::build(c);
  result.hypothesis_report = check_hypothesis(geometry, s);
  if (!result.hypothesis_report.ok) {
    result.status = VkStatus::HypothesisFailure;
    return result;
  }

  result.setting = std::make_shared<VkSetting>(VkSetting::build(std::move(geometry), s));
  const VkSetting& setting = *result.setting;
  const VkDiagram& d = setting.diagram;

  result.coequalizer = coequalize(d.lower.presentation, d.middle.presentation, d.alpha, d.beta);
  const CoequalizerResult& coeq = *result.coequalizer;

  // canonical comparison functor out of the universal property: kappa q = gamma
  {
    std::map<std::string, std::string> om;
    std::map<std::string, Word> am;
    for (const auto& o : coeq.presentation.objects()) om[o] = d.gamma.map_object(o);
    for (const auto& a : coeq.presentation.arrows()) am[a.id] = d.gamma.map_arrow(a.id);
    result.comparison_map = PresentationMorphism::make(coeq.presentation, d.target.presentation,
                                                       std::move(om), std::move(am));
  }
  const PresentationMorphism& kappa = *result.comparison_map;

  ComparisonReport report;

  // object bijectivity
  {
    std::set<std::string> images;
    for (const auto& o : coeq.presentation.objects()) images.insert(kappa.map_object(o));
    report.object_bijection =
        images.size() == coeq.presentation.objects().size() &&
        images.size() == d.target.presentation.objects().size();
    if (!report.object_bijection)
      report.notes.push_back("comparison functor is not an object bijection");
  }

  // per-object fingerprints
  report.fingerprints_equal = true;
  for (const auto& o : coeq.presentation.objects()) {
    ComparisonReport::ObjectEntry entry;
    entry.coeq_object = o;
    entry.base_object = kappa.map_object(o);
    entry.coeq_fingerprint = fingerprint_at(coeq.presentation, o, budget);
    entry.base_fingerprint = fingerprint_at(d.target.presentation, entry.base_object, budget);
    entry.agree = fingerprints_agree(entry.coeq_fingerprint, entry.base_fingerprint);
    if (!entry.agree) {
      report.fingerprints_equal = false;
      report.notes.push_back("fingerprint mismatch at object " + o + ": " +
                             to_string(entry.coeq_fingerprint) + " vs " +
                             to_string(entry.base_fingerprint));
    }
    report.objects.push_back(std::move(entry));
  }

  // generator round-trips through the epsilon construction
  auto battery_q = std::make_shared<EqualityBattery>(coeq.presentation, budget);
  EqualityBattery battery_b(d.target.presentation, budget);
  EpsilonEvaluator eps(setting, coeq.quotient_map, battery_q);

  auto record = [&report](const EqualityVerdict& v, const std::string& what) {
    if (v.equal())
      ++report.roundtrip_equal;
    else if (v.unknown())
      ++report.roundtrip_unknown;
    else {
      ++report.roundtrip_distinct;
      report.notes.push_back("round-trip Distinct at " + what + " (" + v.method + ")");
    }
  };

  for (const auto& gb : d.target.presentation.arrows()) {
    Word eps_word = eps.evaluate(d.target.witness.at(gb.id));
    Word lhs = kappa.apply(eps_word);
    Word rhs{{Letter{gb.id, 1}}, gb.src, gb.dst};
    record(battery_b.decide(lhs, rhs), "base generator " + gb.id);
  }
  for (const auto& gm : d.middle.presentation.arrows()) {
    EdgePath down = c.projection.map_path(d.middle.witness.at(gm.id));
    Word lhs = eps.evaluate(down);
    Word rhs = coeq.quotient_map.map_arrow(gm.id);
    record(battery_q->decide(lhs, rhs), "total-space generator " + gm.id);
  }

  result.comparison = std::move(report);
  result.status = result.comparison->pass() ? VkStatus::Pass : VkStatus::ComparisonFailure;
  return result;
}

namespace {

// Base-object -> fingerprint of the coequalizer vertex group, for pipeline
// agreement checks.
std::map<std::string, Fingerprint> fingerprints_by_base(const VkRunResult& r) {
  std::map<std::string, Fingerprint> out;
  if (!r.comparison) return out;
  for (const auto& entry : r.comparison->objects) out[entry.base_object] = entry.coeq_fingerprint;
  return out;
}

} // namespace

CrosscheckResult crosscheck_section4(const SectionedCover& c, const BaseSet& s,
                                     const Budget& budget) {
  CrosscheckResult out;
  out.given = run_vk(c, s, budget);

  std::vector<Subcomplex> pieces;
  for (const auto& p : c.pieces) pieces.push_back(p.piece);
  SectionedCover coproduct_cover = cover_to_map(c.base(), pieces);
  out.coproduct = run_vk(coproduct_cover, s, budget);

  // pullback composite E x_B E' -> B, sectioned over the same pieces by
  // pairing the two sections
  FiberProduct pb = fiber_product(c.projection, coproduct_cover.projection);
  CellMap composite = compose(c.projection, pb.pr1);
  SectionedCover pullback_cover;
  pullback_cover.projection = composite;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    const CoverPiece& left = c.pieces[i];
    const CoverPiece& right = coproduct_cover.pieces[i];
    Complex2 part = induced_complex(c.base(), left.piece);
    std::map<std::string, std::string> vm, em, fm;
    for (const auto& v : part.vertices())
      vm[v] = pair_id(left.section.map_vertex(v), right.section.map_vertex(v));
    for (const auto& e : part.edges())
      em[e.id] = pair_id(left.section.map_edge(e.id), right.section.map_edge(e.id));
    for (const auto& f : part.faces())
      fm[f.id] = pair_id(left.section.map_face(f.id), right.section.map_face(f.id));
    CellMap section = CellMap::make(part, pb.total, std::move(vm), std::move(em), std::move(fm));
    pullback_cover.pieces.push_back(CoverPiece{left.piece, std::move(section)});
  }
  out.pullback = run_vk(pullback_cover, s, budget);

  out.absolute = find_global_section(c.projection).has_value();

  out.agree = out.given.pass() && out.coproduct.pass() && out.pullback.pass();
  if (out.agree) {
    auto a = fingerprints_by_base(out.given);
    auto b = fingerprints_by_base(out.coproduct);
    auto d = fingerprints_by_base(out.pullback);
    for (const auto& [base_object, fp] : a) {
      auto itb = b.find(base_object);
      auto itd = d.find(base_object);
      if (itb == b.end() || itd == d.end()) {
        out.agree = false;
        out.notes.push_back("pipelines disagree on base objects at " + base_object);
        continue;
      }
      if (!fingerprints_agree(fp, itb->second) || !fingerprints_agree(fp, itd->second)) {
        out.agree = false;
        out.notes.push_back("pipeline fingerprints disagree at " + base_object);
      }
    }
  } else {
    out.notes.push_back("a pipeline did not pass");
  }
  return out;
}

RandomInstance random_instance(std::uint64_t seed, const InstanceBounds& bounds) {
  Rng rng(seed);

  const std::size_t nv = 1 + rng.below(bounds.max_vertices);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));

  const std::size_t ne = rng.below(bounds.max_edges + 1);
  std::vector<EdgeCell> edges;
  for (std::size_t i = 0; i < ne; ++i)
    edges.push_back(EdgeCell{"e" + std::to_string(i), vertices[rng.below(nv)],
                             vertices[rng.below(nv)]});

  Complex2 skeleton = Complex2::make(vertices, edges, {});
  auto adj = sorted_adjacency(skeleton);

  std::vector<FaceCell> faces;
  const std::size_t nf = rng.below(bounds.max_faces + 1);
  for (std::size_t i = 0; i < nf; ++i) {
    std::string start = vertices[rng.below(nv)];
    EdgePath walk = empty_path(start);
    std::size_t len = 1 + rng.below(6);
    for (std::size_t s = 0; s < len; ++s) {
      auto it = adj.find(walk.dst);
      if (it == adj.end() || it->second.empty()) break;
      const auto& [next, step] = it->second[rng.below(it->second.size())];
      walk = concat_paths(walk, EdgePath{{step}, walk.dst, next});
    }
    if (!walk.empty() && walk.dst == walk.src)
      faces.push_back(FaceCell{"f" + std::to_string(faces.size()), walk});
  }

  Complex2 complex = Complex2::make(vertices, edges, std::move(faces));

  std::vector<Subcomplex> pieces;
  if (rng.below(2) == 0) {
    for (const auto& v : complex.vertices()) pieces.push_back(star_closure(complex, v));
  } else {
    const std::size_t k = 2 + rng.below(3);
    pieces.assign(k, Subcomplex{});
    for (std::size_t i = 0; i < k; ++i) pieces[i].name = "P" + std::to_string(i);
    auto close_up = [&](Subcomplex& u) {
      for (const auto& f : u.faces)
        for (const auto& s : complex.face(f).boundary.steps) u.edges.insert(s.edge);
      for (const auto& e : u.edges) {
        u.vertices.insert(complex.edge(e).src);
        u.vertices.insert(complex.edge(e).dst);
      }
    };
    for (auto& u : pieces) {
      for (const auto& f : complex.faces())
        if (rng.chance(1, 2)) u.faces.insert(f.id);
      for (const auto& e : complex.edges())
        if (rng.chance(1, 2)) u.edges.insert(e.id);
      for (const auto& v : complex.vertices())
        if (rng.chance(1, 2)) u.vertices.insert(v);
      close_up(u);
    }
    for (const auto& f : complex.faces()) {
      bool covered = std::any_of(pieces.begin(), pieces.end(),
                                 [&](const Subcomplex& u) { return u.contains_face(f.id); });
      if (!covered) pieces[rng.below(k)].faces.insert(f.id);
    }
    for (auto& u : pieces) close_up(u);
    for (const auto& e : complex.edges()) {
      bool covered = std::any_of(pieces.begin(), pieces.end(),
                                 [&](const Subcomplex& u) { return u.contains_edge(e.id); });
      if (!covered) pieces[rng.below(k)].edges.insert(e.id);
    }
    for (auto& u : pieces) close_up(u);
    for (const auto& v : complex.vertices()) {
      bool covered = std::any_of(pieces.begin(), pieces.end(),
                                 [&](const Subcomplex& u) { return u.contains_vertex(v); });
      if (!covered) pieces[rng.below(k)].vertices.insert(v);
    }
  }

  RandomInstance out;
  out.complex = complex;
  out.cover = cover_to_map(complex, pieces);

  for (const auto& v : complex.vertices())
    if (rng.chance(1, 2)) out.base.vertices.insert(v);
  if (out.base.vertices.empty()) out.base.vertices.insert(vertices[rng.below(nv)]);

  CoverGeometry geometry = CoverGeometry::build(out.cover);
  for (std::size_t guard = 0; guard <= nv; ++guard) {
    HypothesisReport hyp = check_hypothesis(geometry, out.base);
    if (hyp.ok) break;
    out.base.vertices.insert(hyp.offenders.front().base);
  }
  return out;
}

} // namespace vkg
