// SPDX-License-Identifier: Apache-2.0
#include "vkg/weighted.hpp"

#include <algorithm>
#include <set>

namespace vkg {

namespace {

std::string vertex_at(const Complex2& x, const EdgePath& path, std::size_t position) {
  std::string at = path.src;
  for (std::size_t i = 0; i < position; ++i) at = x.step_dst(path.steps[i]);
  return at;
}

// Required start of connector i (1-based junction): the two section lifts of
// the junction vertex, paired.
std::string connector_start(const VkSetting& setting, const WeightedPath& w, std::size_t i) {
  const Complex2& base = setting.cover().base();
  std::string junction = vertex_at(base, w.path, w.breakpoints[i]);
  const CoverPiece& before = setting.cover().piece(w.pieces[i - 1]);
  const CoverPiece& after = setting.cover().piece(w.pieces[i]);
  return pair_id(before.section.map_vertex(junction), after.section.map_vertex(junction));
}

EdgePath closed_into_fiber(const Complex2& x, EdgePath walk,
                           const std::set<std::string>& fiber) {
  EdgePath tail = path_to_base(x, walk.dst, fiber);
  return concat_paths(std::move(walk), tail);
}

} // namespace

EdgePath WeightedPath::segment(const Complex2& base, std::size_t i) const {
  if (i >= segments()) throw ContractError("weighted path: segment index out of range");
  std::size_t from = breakpoints[i], to = breakpoints[i + 1];
  std::vector<EdgeStep> steps(path.steps.begin() + static_cast<std::ptrdiff_t>(from),
                              path.steps.begin() + static_cast<std::ptrdiff_t>(to));
  return base.path_at(std::move(steps), vertex_at(base, path, from));
}

WeightedPath weigh_path(const VkSetting& setting, const EdgePath& f) {
  const Complex2& base = setting.cover().base();
  base.validate_path(f);
  std::vector<std::size_t> breakpoints;
  std::vector<std::string> pieces;
  if (f.empty()) {
    breakpoints = {0, 0};
    pieces = {setting.cover().first_piece_with_vertex(f.src).piece.name};
  } else {
    for (std::size_t i = 0; i <= f.size(); ++i) breakpoints.push_back(i);
    for (const auto& s : f.steps)
      pieces.push_back(setting.cover().first_piece_with_edge(s.edge).piece.name);
  }
  return weigh_path_with(setting, f, std::move(breakpoints), std::move(pieces));
}

WeightedPath weigh_path_with(const VkSetting& setting, const EdgePath& f,
                             std::vector<std::size_t> breakpoints,
                             std::vector<std::string> piece_names) {
  const Complex2& base = setting.cover().base();
  base.validate_path(f);
  if (!setting.base.vertices.count(f.src) || !setting.base.vertices.count(f.dst))
    throw ContractError("weigh_path: endpoints (" + f.src + ", " + f.dst +
                        ") must lie in the base set");
  if (breakpoints.size() < 2 || breakpoints.front() != 0 || breakpoints.back() != f.size())
    throw ContractError("weigh_path: breakpoints must run from 0 to the path length");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    bool degenerate_ok = f.empty() && breakpoints.size() == 2;
    if (breakpoints[i] >= breakpoints[i + 1] && !degenerate_ok)
      throw ContractError("weigh_path: breakpoints must be strictly increasing");
  }
  if (piece_names.size() + 1 != breakpoints.size())
    throw ContractError("weigh_path: need one piece per segment");

  WeightedPath w;
  w.path = f;
  w.breakpoints = std::move(breakpoints);
  w.pieces = std::move(piece_names);

  // segment containment, named edge on failure
  for (std::size_t i = 0; i < w.segments(); ++i) {
    const CoverPiece& piece = setting.cover().piece(w.pieces[i]);
    EdgePath seg = w.segment(base, i);
    if (seg.empty()) {
      if (!piece.piece.contains_vertex(seg.src))
        throw ContractError("weigh_path: vertex " + seg.src + " of segment " +
                            std::to_string(i + 1) + " is not in piece " + piece.piece.name);
      continue;
    }
    for (const auto& s : seg.steps)
      if (!piece.piece.contains_edge(s.edge))
        throw ContractError("weigh_path: edge " + s.edge + " of segment " +
                            std::to_string(i + 1) + " leaves its prescribed piece " +
                            piece.piece.name);
  }

  for (std::size_t i = 1; i < w.segments(); ++i) {
    std::string start = connector_start(setting, w, i);
    w.connectors.push_back(path_to_base(setting.geometry.ebe.total, start, setting.s_ebe));
  }
  validate_weighted(setting, w);
  return w;
}

void validate_weighted(const VkSetting& setting, const WeightedPath& w) {
  const Complex2& base = setting.cover().base();
  base.validate_path(w.path);
  if (w.segments() == 0) throw StructuralError("weighted path: no segments");
  if (w.connectors.size() + 1 != w.segments())
    throw StructuralError("weighted path: need exactly n-1 connectors");
  for (std::size_t i = 0; i < w.segments(); ++i) {
    const CoverPiece& piece = setting.cover().piece(w.pieces[i]);
    EdgePath seg = w.segment(base, i);
    for (const auto& s : seg.steps)
      if (!piece.piece.contains_edge(s.edge))
        throw StructuralError("weighted path: segment " + std::to_string(i + 1) +
                              " leaves piece " + piece.piece.name + " at edge " + s.edge);
    if (seg.empty() && !piece.piece.contains_vertex(seg.src))
      throw StructuralError("weighted path: empty segment outside its piece");
  }
  for (std::size_t i = 1; i < w.segments(); ++i) {
    const EdgePath& g = w.connectors[i - 1];
    setting.geometry.ebe.total.validate_path(g);
    if (g.src != connector_start(setting, w, i))
      throw StructuralError("weighted path: connector " + std::to_string(i) +
                            " starts at " + g.src + ", expected " +
                            connector_start(setting, w, i));
    if (!setting.s_ebe.count(g.dst))
      throw StructuralError("weighted path: connector " + std::to_string(i) +
                            " does not end over the base set");
  }
}

WeightedPath randomize_connectors(const VkSetting& setting, WeightedPath w, Rng& rng) {
  const Complex2& ebe = setting.geometry.ebe.total;
  auto adj = sorted_adjacency(ebe);
  for (std::size_t i = 1; i < w.segments(); ++i) {
    std::string start = connector_start(setting, w, i);
    EdgePath walk = empty_path(start);
    std::size_t steps = rng.below(7);
    for (std::size_t s = 0; s < steps; ++s) {
      auto it = adj.find(walk.dst);
      if (it == adj.end() || it->second.empty()) break;
      const auto& [next, step] = it->second[rng.below(it->second.size())];
      walk = concat_paths(walk, EdgePath{{step}, walk.dst, next});
    }
    w.connectors[i - 1] = closed_into_fiber(ebe, std::move(walk), setting.s_ebe);
  }
  validate_weighted(setting, w);
  return w;
}

AssociatedSequence associated_sequence(const VkSetting& setting, const WeightedPath& w) {
  validate_weighted(setting, w);
  const Complex2& base = setting.cover().base();
  const Pi1Presentation& middle = setting.diagram.middle;
  const std::size_t n = w.segments();

  std::vector<EdgePath> lifted;
  for (std::size_t i = 0; i < n; ++i) {
    const CoverPiece& piece = setting.cover().piece(w.pieces[i]);
    lifted.push_back(piece.section.map_path(w.segment(base, i)));
  }
  std::vector<EdgePath> pr1g, pr2g;
  for (const auto& g : w.connectors) {
    pr1g.push_back(setting.geometry.ebe.pr1.map_path(g));
    pr2g.push_back(setting.geometry.ebe.pr2.map_path(g));
  }

  AssociatedSequence seq;
  for (std::size_t i = 0; i < n; ++i) {
    EdgePath h = lifted[i];
    if (i > 0) h = concat_paths(reverse_path(pr2g[i - 1]), h);
    if (i + 1 < n) h = concat_paths(h, pr1g[i]);
    seq.words.push_back(path_word(middle, h));
    seq.underlying.push_back(std::move(h));
  }
  return seq;
}

std::vector<EdgePath> elementary_homotopies(const Complex2& x, const EdgePath& f) {
  x.validate_path(f);
  std::vector<EdgePath> out;
  std::set<std::string> seen;
  std::string self_key = to_string(f) + "@" + f.src;
  auto push = [&](EdgePath candidate) {
    std::string key = to_string(candidate) + "@" + candidate.src;
    if (key == self_key) return;
    if (!seen.insert(key).second) return;
    out.push_back(std::move(candidate));
  };

  // backtrack deletion
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    if (f.steps[j].edge == f.steps[j + 1].edge && f.steps[j].sign == -f.steps[j + 1].sign) {
      EdgePath g = f;
      g.steps.erase(g.steps.begin() + static_cast<std::ptrdiff_t>(j),
                    g.steps.begin() + static_cast<std::ptrdiff_t>(j) + 2);
      push(std::move(g));
    }
  }

  // backtrack insertion
  for (std::size_t pos = 0; pos <= f.size(); ++pos) {
    std::string v = vertex_at(x, f, pos);
    for (const auto& e : x.edges()) {
      if (e.src == v) {
        EdgePath g = f;
        g.steps.insert(g.steps.begin() + static_cast<std::ptrdiff_t>(pos),
                       {EdgeStep{e.id, 1}, EdgeStep{e.id, -1}});
        push(std::move(g));
      }
      if (e.dst == v) {
        EdgePath g = f;
        g.steps.insert(g.steps.begin() + static_cast<std::ptrdiff_t>(pos),
                       {EdgeStep{e.id, -1}, EdgeStep{e.id, 1}});
        push(std::move(g));
      }
    }
  }

  // face moves: replace an occurrence of a boundary subword by the reversed
  // complement (u v closed implies u ~ v^-1 rel endpoints)
  for (const auto& face : x.faces()) {
    for (int dir = 0; dir < 2; ++dir) {
      EdgePath cycle = dir == 0 ? face.boundary : reverse_path(face.boundary);
      const std::size_t len = cycle.size();
      if (len == 0) continue;
      for (std::size_t rot = 0; rot < len; ++rot) {
        std::vector<EdgeStep> rotated;
        rotated.insert(rotated.end(), cycle.steps.begin() + static_cast<std::ptrdiff_t>(rot),
                       cycle.steps.end());
        rotated.insert(rotated.end(), cycle.steps.begin(),
                       cycle.steps.begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t m = 1; m <= len; ++m) {
          // u = rotated[0..m), v = rotated[m..len)
          for (std::size_t q = 0; q + m <= f.size(); ++q) {
            bool match = true;
            for (std::size_t k = 0; k < m && match; ++k)
              match = f.steps[q + k] == rotated[k];
            if (!match) continue;
            EdgePath g;
            g.src = f.src;
            g.dst = f.dst;
            g.steps.assign(f.steps.begin(), f.steps.begin() + static_cast<std::ptrdiff_t>(q));
            for (std::size_t k = len; k > m; --k) {
              const EdgeStep& s = rotated[k - 1];
              g.steps.push_back(EdgeStep{s.edge, -s.sign});
            }
            g.steps.insert(g.steps.end(),
                           f.steps.begin() + static_cast<std::ptrdiff_t>(q + m), f.steps.end());
            push(std::move(g));
          }
        }
      }
    }
  }
  for (const auto& g : out) x.validate_path(g);
  return out;
}

EpsilonEvaluator::EpsilonEvaluator(const VkSetting& setting, PresentationMorphism delta,
                                   Budget budget)
    : EpsilonEvaluator(setting, delta,
                       std::make_shared<EqualityBattery>(delta.target(), std::move(budget))) {}

EpsilonEvaluator::EpsilonEvaluator(const VkSetting& setting, PresentationMorphism delta,
                                   std::shared_ptr<EqualityBattery> battery)
    : setting_(setting), delta_(std::move(delta)), battery_(std::move(battery)) {
  if (!(delta_.source() == setting.diagram.middle.presentation))
    throw ContractError("evaluate_epsilon: delta must start at pi1 of the total space");
  if (!(battery_->presentation() == delta_.target()))
    throw ContractError("evaluate_epsilon: battery presentation differs from delta's target");

  const VkDiagram& d = setting.diagram;
  for (const auto& o : d.lower.presentation.objects()) {
    if (delta_.map_object(d.alpha.map_object(o)) != delta_.map_object(d.beta.map_object(o)))
      throw ContractError("evaluate_epsilon: delta alpha and delta beta differ on object " + o);
  }
  for (const auto& g : d.lower.presentation.arrows()) {
    Word a = delta_.apply(d.alpha.map_arrow(g.id));
    Word b = delta_.apply(d.beta.map_arrow(g.id));
    EqualityVerdict verdict = battery_->decide(a, b);
    if (verdict.distinct())
      throw ContractError("evaluate_epsilon: delta alpha != delta beta, separated at generator " +
                          g.id + " (" + verdict.method + ")");
    if (verdict.unknown())
      throw ContractError("evaluate_epsilon: delta alpha = delta beta undecided at generator " +
                          g.id + "; refusing to evaluate");
  }
}

Word EpsilonEvaluator::evaluate(const EdgePath& f) const {
  return evaluate(weigh_path(setting_, f));
}

Word EpsilonEvaluator::evaluate(const WeightedPath& w) const {
  AssociatedSequence seq = associated_sequence(setting_, w);
  Word acc;
  bool first = true;
  for (const auto& h : seq.words) {
    Word img = delta_.apply(h);
    if (first) {
      acc = img;
      first = false;
      continue;
    }
    // delta-images of consecutive entries always compose once delta
    // coequalizes; a mismatch here is a logic error, not user error
    if (acc.dst != img.src)
      throw Error("evaluate_epsilon: delta-images of the associated sequence do not compose");
    acc = concat(acc, img);
  }
  return acc;
}

Word evaluate_epsilon(const VkSetting& setting, const PresentationMorphism& delta,
                      const EdgePath& f, const Budget& budget) {
  return EpsilonEvaluator(setting, delta, budget).evaluate(f);
}

namespace {

EdgePath random_walk_then_fiber(const Complex2& x, const std::set<std::string>& fiber, Rng& rng,
                                std::size_t max_steps) {
  std::vector<std::string> starts(fiber.begin(), fiber.end());
  if (starts.empty()) throw ContractError("random path: empty fiber");
  EdgePath walk = empty_path(starts[rng.below(starts.size())]);
  auto adj = sorted_adjacency(x);
  std::size_t steps = rng.below(max_steps + 1);
  for (std::size_t s = 0; s < steps; ++s) {
    auto it = adj.find(walk.dst);
    if (it == adj.end() || it->second.empty()) break;
    const auto& [next, step] = it->second[rng.below(it->second.size())];
    walk = concat_paths(walk, EdgePath{{step}, walk.dst, next});
  }
  return concat_paths(walk, path_to_base(x, walk.dst, fiber));
}

} // namespace

EdgePath random_base_path(const VkSetting& setting, Rng& rng, std::size_t max_steps) {
  return random_walk_then_fiber(setting.cover().base(), setting.base.vertices, rng, max_steps);
}

EdgePath random_total_path(const VkSetting& setting, Rng& rng, std::size_t max_steps) {
  return random_walk_then_fiber(setting.cover().total(), setting.s_total, rng, max_steps);
}

} // namespace vkg
