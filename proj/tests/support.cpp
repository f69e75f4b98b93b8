// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "vkg/word.hpp"

namespace vkgtest {

using namespace vkg;

__int128 determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2)
    return static_cast<__int128>(m[0][0]) * m[1][1] - static_cast<__int128>(m[0][1]) * m[1][0];
  __int128 det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    __int128 term = static_cast<__int128>(m[0][j]) * determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

namespace {

void subsets_rec(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& acc,
                 std::vector<std::vector<std::size_t>>& out) {
  if (acc.size() == k) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + (k - acc.size()) <= n; ++i) {
    acc.push_back(i);
    subsets_rec(n, k, i + 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> acc;
  subsets_rec(n, k, 0, acc, out);
  return out;
}

__int128 int128_abs(__int128 x) { return x < 0 ? -x : x; }

__int128 int128_gcd(__int128 a, __int128 b) {
  a = int128_abs(a);
  b = int128_abs(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

AbelianInvariants snf_oracle(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != cols) throw ContractError("snf_oracle: ragged matrix");

  AbelianInvariants inv;
  if (rows == 0 || cols == 0) {
    inv.free_rank = static_cast<long long>(cols);
    return inv;
  }

  std::vector<__int128> dd; // determinantal divisors, dd[k-1] = D_k
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    __int128 g = 0;
    for (const auto& rsel : subsets(rows, k)) {
      for (const auto& csel : subsets(cols, k)) {
        std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rsel[i]][csel[j]];
        g = int128_gcd(g, determinant(minor));
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    dd.push_back(g);
    if (g == 0) break;
  }

  long long rank = 0;
  for (__int128 d : dd)
    if (d != 0) ++rank;
  inv.free_rank = static_cast<long long>(cols) - rank;

  __int128 prev = 1;
  for (long long k = 0; k < rank; ++k) {
    __int128 factor = dd[static_cast<std::size_t>(k)] / prev;
    prev = dd[static_cast<std::size_t>(k)];
    if (factor > 1) inv.torsion.push_back(static_cast<long long>(factor));
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

std::size_t pair_graph_components(const GraphMorphism& p, const GraphMorphism& q) {
  // pair vertices
  std::vector<std::pair<std::string, std::string>> pv;
  for (const auto& [x, bx] : p.vertex_image)
    for (const auto& [y, by] : q.vertex_image)
      if (bx == by) pv.emplace_back(x, y);

  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t i = 0; i < pv.size(); ++i) index[pv[i]] = i;
  std::vector<std::size_t> parent(pv.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  for (const auto& [eid, esrc, edst] : p.edges)
    for (const auto& [fid, fsrc, fdst] : q.edges) {
      if (p.edge_image.at(eid) != q.edge_image.at(fid)) continue;
      auto s = index.find({esrc, fsrc});
      auto d = index.find({edst, fdst});
      if (s == index.end() || d == index.end()) continue;
      std::size_t a = find(s->second), b = find(d->second);
      if (a != b) parent[a] = b;
    }

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < pv.size(); ++i) roots.insert(find(i));
  return roots.size();
}

Word random_word_from(const GroupoidPresentation& p, const std::string& src, Rng& rng,
                      std::size_t max_len) {
  std::map<std::string, std::vector<Letter>> out_letters;
  for (const auto& a : p.arrows()) {
    out_letters[a.src].push_back(Letter{a.id, 1});
    out_letters[a.dst].push_back(Letter{a.id, -1});
  }
  Word w = empty_word(src);
  std::size_t len = rng.below(max_len + 1);
  std::string at = src;
  for (std::size_t i = 0; i < len; ++i) {
    auto it = out_letters.find(at);
    if (it == out_letters.end() || it->second.empty()) break;
    Letter l = it->second[rng.below(it->second.size())];
    at = l.sign > 0 ? p.arrow(l.arrow).dst : p.arrow(l.arrow).src;
    w.letters.push_back(l);
    w.dst = at;
  }
  return free_reduce(std::move(w));
}

Word random_word(const GroupoidPresentation& p, Rng& rng, std::size_t max_len) {
  if (p.objects().empty()) throw ContractError("random_word: empty presentation");
  const std::string& src = p.objects()[rng.below(p.objects().size())];
  return random_word_from(p, src, rng, max_len);
}

GroupoidPresentation random_tietze_move(const GroupoidPresentation& p, Rng& rng) {
  std::vector<std::string> objects = p.objects();
  std::vector<Arrow> arrows = p.arrows();
  std::vector<Relator> relators = p.relators();

  switch (rng.below(3)) {
    case 0: { // add a consequence: pre- and post-compose a relator pair
      if (relators.empty()) return p;
      const Relator& r = relators[rng.below(relators.size())];
      Word prefix = random_word_from(p, r.lhs.src, rng, 3);
      Word suffix = random_word_from(p, r.lhs.dst, rng, 3);
      Word u = concat(concat(invert(prefix), r.lhs), suffix);
      Word v = concat(concat(invert(prefix), r.rhs), suffix);
      relators.push_back(Relator{u, v});
      break;
    }
    case 1: { // add a defined generator
      Word def = random_word(p, rng, 4);
      std::string id = "t" + std::to_string(arrows.size()) + "_" + std::to_string(rng.below(1000));
      arrows.push_back(Arrow{id, def.src, def.dst});
      // relator [g] = def; expressed in the enlarged presentation
      Word g{{Letter{id, 1}}, def.src, def.dst};
      relators.push_back(Relator{g, def});
      break;
    }
    default: { // eliminate: defer to a single simplification step by removing
               // a generator pinned by a relator, when one exists
      for (std::size_t ri = 0; ri < relators.size(); ++ri) {
        const Relator& r = relators[ri];
        for (const Word* side : {&r.lhs, &r.rhs}) {
          const Word* other = side == &r.lhs ? &r.rhs : &r.lhs;
          for (std::size_t pos = 0; pos < side->letters.size(); ++pos) {
            const Letter& cand = side->letters[pos];
            std::size_t occ = 0;
            for (const auto& l : side->letters) occ += l.arrow == cand.arrow;
            for (const auto& l : other->letters) occ += l.arrow == cand.arrow;
            if (occ != 1) continue;
            // defining word: inv(prefix) * other * inv(suffix)
            Word prefix{std::vector<Letter>(side->letters.begin(),
                                            side->letters.begin() + pos),
                        side->src, std::string()};
            Word suffix{std::vector<Letter>(side->letters.begin() + pos + 1,
                                            side->letters.end()),
                        std::string(), side->dst};
            Word def;
            def.letters = invert(prefix).letters;
            def.letters.insert(def.letters.end(), other->letters.begin(), other->letters.end());
            Word inv_suffix = invert(suffix);
            def.letters.insert(def.letters.end(), inv_suffix.letters.begin(),
                               inv_suffix.letters.end());
            if (cand.sign < 0) def = invert(def);
            const Arrow& dead = p.arrow(cand.arrow);
            def.src = dead.src;
            def.dst = dead.dst;
            def = free_reduce(std::move(def));

            auto substitute = [&](const Word& w) {
              Word out;
              out.src = w.src;
              out.dst = w.dst;
              for (const auto& l : w.letters) {
                if (l.arrow == cand.arrow) {
                  Word piece = l.sign > 0 ? def : invert(def);
                  out.letters.insert(out.letters.end(), piece.letters.begin(),
                                     piece.letters.end());
                } else {
                  out.letters.push_back(l);
                }
              }
              return free_reduce(std::move(out));
            };
            std::vector<Relator> next;
            for (std::size_t rj = 0; rj < relators.size(); ++rj) {
              if (rj == ri) continue;
              next.push_back(Relator{substitute(relators[rj].lhs), substitute(relators[rj].rhs)});
            }
            std::vector<Arrow> next_arrows;
            for (const auto& a : arrows)
              if (a.id != cand.arrow) next_arrows.push_back(a);
            return GroupoidPresentation::make(objects, next_arrows, next);
          }
        }
      }
      return p; // nothing eliminable
    }
  }
  return GroupoidPresentation::make(std::move(objects), std::move(arrows), std::move(relators));
}

GroupoidPresentation random_tietze_moves(const GroupoidPresentation& p, Rng& rng,
                                         std::size_t count) {
  GroupoidPresentation out = p;
  for (std::size_t i = 0; i < count; ++i) out = random_tietze_move(out, rng);
  return out;
}

namespace {

InstanceDocument make_doc(Complex2 complex, std::vector<Subcomplex> pieces,
                          InstanceDocument::BaseKind kind, std::vector<std::string> base) {
  InstanceDocument doc;
  doc.complex = std::move(complex);
  doc.pieces = std::move(pieces);
  doc.base_kind = kind;
  doc.base_vertices = std::move(base);
  return doc;
}

} // namespace

InstanceDocument circle_two_arcs() {
  Complex2 circle = Complex2::make({"v0", "v1"},
                                   {EdgeCell{"a", "v0", "v1"}, EdgeCell{"b", "v1", "v0"}}, {});
  Subcomplex u1{"U1", {"v0", "v1"}, {"a"}, {}};
  Subcomplex u2{"U2", {"v0", "v1"}, {"b"}, {}};
  return make_doc(std::move(circle), {u1, u2}, InstanceDocument::BaseKind::List, {"v0", "v1"});
}

InstanceDocument circle_double_cover() {
  Complex2 triangle = Complex2::make(
      {"w0", "w1", "w2"},
      {EdgeCell{"c0", "w0", "w1"}, EdgeCell{"c1", "w1", "w2"}, EdgeCell{"c2", "w2", "w0"}}, {});
  Complex2 hexagon = Complex2::make(
      {"x0", "x1", "x2", "x3", "x4", "x5"},
      {EdgeCell{"d0", "x0", "x1"}, EdgeCell{"d1", "x1", "x2"}, EdgeCell{"d2", "x2", "x3"},
       EdgeCell{"d3", "x3", "x4"}, EdgeCell{"d4", "x4", "x5"}, EdgeCell{"d5", "x5", "x0"}},
      {});

  InstanceDocument doc;
  doc.complex = triangle;
  InstanceDocument::MapSpec spec;
  spec.total = hexagon;
  for (int i = 0; i < 6; ++i) {
    spec.vertex_map["x" + std::to_string(i)] = "w" + std::to_string(i % 3);
    spec.edge_map["d" + std::to_string(i)] = "c" + std::to_string(i % 3);
  }
  spec.pieces = {Subcomplex{"star_w0", {"w0", "w1", "w2"}, {"c0", "c2"}, {}},
                 Subcomplex{"star_w1", {"w0", "w1", "w2"}, {"c0", "c1"}, {}},
                 Subcomplex{"star_w2", {"w1", "w2", "w0"}, {"c1", "c2"}, {}}};
  InstanceDocument::SectionSpec s0{"star_w0",
                                   {{"w0", "x0"}, {"w1", "x1"}, {"w2", "x5"}},
                                   {{"c0", "d0"}, {"c2", "d5"}},
                                   {}};
  InstanceDocument::SectionSpec s1{"star_w1",
                                   {{"w0", "x0"}, {"w1", "x1"}, {"w2", "x2"}},
                                   {{"c0", "d0"}, {"c1", "d1"}},
                                   {}};
  InstanceDocument::SectionSpec s2{"star_w2",
                                   {{"w0", "x3"}, {"w1", "x1"}, {"w2", "x2"}},
                                   {{"c1", "d1"}, {"c2", "d2"}},
                                   {}};
  spec.sections = {s0, s1, s2};
  doc.map = std::move(spec);
  doc.base_kind = InstanceDocument::BaseKind::Point;
  doc.base_vertices = {"w0"};
  return doc;
}

InstanceDocument point_instance() {
  Complex2 point = Complex2::make({"p"}, {}, {});
  Subcomplex whole{"U", {"p"}, {}, {}};
  return make_doc(std::move(point), {whole}, InstanceDocument::BaseKind::All, {});
}

namespace {

InstanceDocument one_vertex_instance(std::vector<EdgeCell> loops, std::vector<FaceCell> faces) {
  Complex2 x = Complex2::make({"v"}, std::move(loops), std::move(faces));
  Subcomplex star = star_closure(x, "v");
  return make_doc(std::move(x), {star}, InstanceDocument::BaseKind::All, {});
}

} // namespace

InstanceDocument torus_instance() {
  EdgePath bd{{EdgeStep{"a", 1}, EdgeStep{"b", 1}, EdgeStep{"a", -1}, EdgeStep{"b", -1}},
              "v", "v"};
  return one_vertex_instance({EdgeCell{"a", "v", "v"}, EdgeCell{"b", "v", "v"}},
                             {FaceCell{"T", bd}});
}

InstanceDocument rp2_instance() {
  EdgePath bd{{EdgeStep{"a", 1}, EdgeStep{"a", 1}}, "v", "v"};
  return one_vertex_instance({EdgeCell{"a", "v", "v"}}, {FaceCell{"R", bd}});
}

InstanceDocument klein_instance() {
  EdgePath bd{{EdgeStep{"a", 1}, EdgeStep{"b", 1}, EdgeStep{"a", 1}, EdgeStep{"b", -1}},
              "v", "v"};
  return one_vertex_instance({EdgeCell{"a", "v", "v"}, EdgeCell{"b", "v", "v"}},
                             {FaceCell{"K", bd}});
}

InstanceDocument wedge_instance() {
  return one_vertex_instance({EdgeCell{"a", "v", "v"}, EdgeCell{"b", "v", "v"}}, {});
}

InstanceDocument figure_eight_instance() {
  Complex2 x = Complex2::make(
      {"v0", "v1", "v2"},
      {EdgeCell{"a1", "v0", "v1"}, EdgeCell{"a2", "v1", "v0"}, EdgeCell{"b1", "v0", "v2"},
       EdgeCell{"b2", "v2", "v0"}},
      {});
  Subcomplex u1{"U1", {"v0", "v1"}, {"a1", "a2"}, {}};
  Subcomplex u2{"U2", {"v0", "v2"}, {"b1", "b2"}, {}};
  Subcomplex u3{"U3", {"v0", "v1", "v2"}, {"a1", "b1"}, {}};
  return make_doc(std::move(x), {u1, u2, u3}, InstanceDocument::BaseKind::All, {});
}

std::vector<std::pair<std::string, InstanceDocument>> golden_corpus() {
  return {{"circle", circle_two_arcs()},
          {"circle_double", circle_double_cover()},
          {"torus", torus_instance()},
          {"rp2", rp2_instance()},
          {"klein", klein_instance()},
          {"wedge", wedge_instance()},
          {"figure_eight", figure_eight_instance()}};
}

std::string data_dir() {
#ifdef VKG_DATA_DIR
  return VKG_DATA_DIR;
#else
  return "data";
#endif
}

} // namespace vkgtest
