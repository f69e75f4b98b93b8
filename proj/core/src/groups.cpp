// SPDX-License-Identifier: Apache-2.0
#include "vkg/groups.hpp"

#include <algorithm>
#include <map>

namespace vkg {

namespace {

std::vector<std::vector<int>> table_from_permutations(const std::vector<std::vector<int>>& perms) {
  // perms[0] must be the identity permutation.
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> c(perms[i].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = index.at(c);
    }
  return t;
}

bool is_even(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

} // namespace

GroupTable::GroupTable(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  if (!valid()) throw StructuralError("group table '" + name_ + "' violates group axioms");
}

bool GroupTable::valid() const {
  const int n = order();
  if (n == 0) return false;
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) return false;
    if (table_[0][a] != a || table_[a][0] != a) return false;
    if (inverse_[a] < 0) return false;
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      int r = table_[a][b], c = table_[b][a];
      if (r < 0 || r >= n || c < 0 || c >= n) return false;
      seen_row[r] = seen_col[c] = true;
    }
    for (int b = 0; b < n; ++b)
      if (!seen_row[b] || !seen_col[b]) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) return false;
  return true;
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw ContractError("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return GroupTable("Z" + std::to_string(n), std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order(), m = b.order();
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  auto idx = [m](int i, int j) { return i * m + j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < m; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2)
          t[idx(i1, j1)][idx(i2, j2)] = idx(a.mul(i1, i2), b.mul(j1, j2));
  return GroupTable(a.name() + "x" + b.name(), std::move(t));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return GroupTable("S3", table_from_permutations(perms));
}

GroupTable GroupTable::dihedral(int n) {
  if (n < 3) throw ContractError("dihedral: n must be >= 3");
  const int order = 2 * n;
  auto idx = [n](int rot, int flip) { return rot + n * flip; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          t[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return GroupTable("D" + std::to_string(n), std::move(t));
}

GroupTable GroupTable::quaternion8() {
  // axis: 0=1, 1=i, 2=j, 3=k; element index = axis + 4*sign.
  int axis_mul[4][4];
  int sign_mul[4][4];
  auto set = [&](int a, int b, int ax, int sg) {
    axis_mul[a][b] = ax;
    sign_mul[a][b] = sg;
  };
  for (int a = 0; a < 4; ++a) {
    set(0, a, a, 0);
    set(a, 0, a, 0);
  }
  set(1, 1, 0, 1); set(2, 2, 0, 1); set(3, 3, 0, 1);
  set(1, 2, 3, 0); set(2, 1, 3, 1);
  set(2, 3, 1, 0); set(3, 2, 1, 1);
  set(3, 1, 2, 0); set(1, 3, 2, 1);
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = axis_mul[a % 4][b % 4];
      int sg = (a / 4 + b / 4 + sign_mul[a % 4][b % 4]) % 2;
      t[a][b] = ax + 4 * sg;
    }
  return GroupTable("Q8", std::move(t));
}

GroupTable GroupTable::alternating4() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2, 3};
  do {
    if (is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return GroupTable("A4", table_from_permutations(perms));
}

GroupTable GroupTable::dicyclic3() {
  // Elements a^i x^j with i < 6, j < 2; x a = a^-1 x and x^2 = a^3.
  auto idx = [](int i, int j) { return i + 6 * j; };
  std::vector<std::vector<int>> t(12, std::vector<int>(12));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 2; ++l) {
          int r, f;
          if (j == 0) {
            r = (i + k) % 6;
            f = l;
          } else {
            r = ((i - k) % 6 + 6) % 6;
            f = 1 + l;
            if (f == 2) {
              r = (r + 3) % 6;
              f = 0;
            }
          }
          t[idx(i, j)][idx(k, l)] = idx(r, f);
        }
  return GroupTable("Dic3", std::move(t));
}

std::vector<GroupTable> groups_of_order_up_to(int max_order) {
  if (max_order < 1) throw ContractError("groups_of_order_up_to: order must be positive");
  if (max_order > 12)
    throw ContractError("groups_of_order_up_to: catalog is complete only up to order 12");
  std::vector<GroupTable> out;
  auto add = [&](GroupTable g) {
    if (g.order() <= max_order) out.push_back(std::move(g));
  };
  for (int n = 2; n <= max_order; ++n) add(GroupTable::cyclic(n));
  add(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)));
  add(GroupTable::symmetric3());
  add(GroupTable::direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2)));
  add(GroupTable::direct_product(
      GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
      GroupTable::cyclic(2)));
  add(GroupTable::dihedral(4));
  add(GroupTable::quaternion8());
  add(GroupTable::direct_product(GroupTable::cyclic(3), GroupTable::cyclic(3)));
  add(GroupTable::dihedral(5));
  add(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(6)));
  add(GroupTable::dihedral(6));
  add(GroupTable::alternating4());
  add(GroupTable::dicyclic3());
  std::stable_sort(out.begin(), out.end(),
                   [](const GroupTable& a, const GroupTable& b) { return a.order() < b.order(); });
  return out;
}

namespace {

struct CompiledHomProblem {
  std::vector<std::string> gen_ids;                // constrained generators, assignment order
  std::size_t free_gens = 0;                       // generators in no relator
  std::vector<std::vector<std::pair<int, int>>> loops; // (gen index, sign), grouped
  std::vector<std::size_t> ready_at;               // loop i evaluable at this depth
};

CompiledHomProblem compile_hom_problem(const GroupoidPresentation& g) {
  if (g.objects().size() != 1)
    throw ContractError("hom enumeration: presentation must have one object");
  CompiledHomProblem prob;
  std::map<std::string, int> gen_pos;
  std::vector<std::vector<std::string>> loops_raw;
  for (const auto& r : g.relators()) {
    Word loop = concat(r.lhs, invert(r.rhs));
    if (loop.empty()) continue;
    for (const auto& l : loop.letters)
      if (!gen_pos.count(l.arrow)) {
        gen_pos[l.arrow] = static_cast<int>(prob.gen_ids.size());
        prob.gen_ids.push_back(l.arrow);
      }
    std::vector<std::pair<int, int>> compiled;
    std::size_t ready = 0;
    for (const auto& l : loop.letters) {
      compiled.emplace_back(gen_pos.at(l.arrow), l.sign);
      ready = std::max(ready, static_cast<std::size_t>(gen_pos.at(l.arrow)) + 1);
    }
    prob.loops.push_back(std::move(compiled));
    prob.ready_at.push_back(ready);
  }
  prob.free_gens = g.arrows().size() - prob.gen_ids.size();
  return prob;
}

class HomSearch {
public:
  HomSearch(const CompiledHomProblem& prob, const GroupTable& t, std::uint64_t budget)
      : prob_(prob), t_(t), budget_(budget) {}

  // visit() is called with the constrained-generator image vector.
  template <typename Visit>
  void run(Visit&& visit) {
    images_.assign(prob_.gen_ids.size(), 0);
    descend(0, visit);
  }

  std::uint64_t evaluations() const { return evaluations_; }

private:
  bool check_ready(std::size_t depth) {
    for (std::size_t i = 0; i < prob_.loops.size(); ++i) {
      if (prob_.ready_at[i] != depth) continue;
      if (++evaluations_ > budget_)
        throw BudgetError("hom enumeration: relator evaluation budget exhausted");
      int acc = GroupTable::identity();
      for (auto [gi, sign] : prob_.loops[i])
        acc = t_.mul(acc, sign > 0 ? images_[gi] : t_.inverse(images_[gi]));
      if (acc != GroupTable::identity()) return false;
    }
    return true;
  }

  template <typename Visit>
  void descend(std::size_t depth, Visit&& visit) {
    if (depth == images_.size()) {
      visit(images_);
      return;
    }
    for (int x = 0; x < t_.order(); ++x) {
      images_[depth] = x;
      if (check_ready(depth + 1)) descend(depth + 1, visit);
    }
  }

  const CompiledHomProblem& prob_;
  const GroupTable& t_;
  std::uint64_t budget_;
  std::uint64_t evaluations_ = 0;
  std::vector<int> images_;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r))
      throw BudgetError("hom count: result exceeds 64 bits");
  }
  return r;
}

} // namespace

std::uint64_t hom_count(const GroupoidPresentation& g, const GroupTable& target,
                        std::uint64_t budget) {
  CompiledHomProblem prob = compile_hom_problem(g);
  const std::uint64_t order = static_cast<std::uint64_t>(target.order());

  std::uint64_t constrained = 0;
  HomSearch search(prob, target, budget);
  search.run([&](const std::vector<int>&) {
    if (__builtin_add_overflow(constrained, std::uint64_t{1}, &constrained))
      throw BudgetError("hom count: result exceeds 64 bits");
  });

  std::uint64_t free_factor = checked_pow(order, prob.free_gens);
  std::uint64_t result;
  if (__builtin_mul_overflow(constrained, free_factor, &result))
    throw BudgetError("hom count: result exceeds 64 bits");
  return result;
}

std::vector<std::vector<int>> enumerate_homs(const GroupoidPresentation& g,
                                             const GroupTable& target, std::uint64_t budget,
                                             std::size_t max_results) {
  CompiledHomProblem prob = compile_hom_problem(g);
  if (prob.free_gens > 0) {
    // Enumerating free generators multiplies the result count by order^free;
    // callers wanting witnesses should restrict to the relevant generators.
    long double total = 1.0L;
    for (std::size_t i = 0; i < g.arrows().size(); ++i)
      total *= static_cast<long double>(target.order());
    if (total > static_cast<long double>(max_results) * 64)
      throw BudgetError("enumerate_homs: search space too large");
  }

  // Map constrained-search images back to full arrow order; free generators
  // run over all elements.
  std::map<std::string, std::size_t> arrow_pos;
  for (std::size_t i = 0; i < g.arrows().size(); ++i) arrow_pos[g.arrows()[i].id] = i;

  std::vector<std::size_t> free_positions;
  {
    std::vector<bool> constrained_flag(g.arrows().size(), false);
    for (const auto& id : prob.gen_ids) constrained_flag[arrow_pos.at(id)] = true;
    for (std::size_t i = 0; i < g.arrows().size(); ++i)
      if (!constrained_flag[i]) free_positions.push_back(i);
  }

  std::vector<std::vector<int>> out;
  HomSearch search(prob, target, budget);
  search.run([&](const std::vector<int>& images) {
    std::vector<int> full(g.arrows().size(), 0);
    for (std::size_t i = 0; i < prob.gen_ids.size(); ++i)
      full[arrow_pos.at(prob.gen_ids[i])] = images[i];
    // odometer over free generators
    std::vector<int> counter(free_positions.size(), 0);
    bool more = true;
    while (more) {
      for (std::size_t i = 0; i < free_positions.size(); ++i)
        full[free_positions[i]] = counter[i];
      if (out.size() >= max_results)
        throw BudgetError("enumerate_homs: result cap exceeded");
      out.push_back(full);
      more = false;
      for (std::size_t c = 0; c < counter.size(); ++c) {
        if (++counter[c] < target.order()) {
          more = true;
          break;
        }
        counter[c] = 0;
      }
    }
  });
  return out;
}

GroupoidPresentation presentation_of_table(const GroupTable& t, const std::string& object) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < t.order(); ++i)
    arrows.push_back(Arrow{"g" + std::to_string(i), object, object});
  auto letter_of = [&](int elem) { return Letter{"g" + std::to_string(elem), 1}; };
  std::vector<Relator> relators;
  for (int i = 1; i < t.order(); ++i)
    for (int j = 1; j < t.order(); ++j) {
      Word lhs{{letter_of(i), letter_of(j)}, object, object};
      int prod = t.mul(i, j);
      Word rhs = prod == 0 ? empty_word(object) : Word{{letter_of(prod)}, object, object};
      relators.push_back(Relator{std::move(lhs), std::move(rhs)});
    }
  return GroupoidPresentation::make({object}, std::move(arrows), std::move(relators));
}

int evaluate_in_table(const GroupTable& t, const Word& w) {
  int acc = GroupTable::identity();
  for (const auto& l : w.letters) {
    if (l.arrow.empty() || l.arrow[0] != 'g')
      throw ContractError("evaluate_in_table: generator '" + l.arrow + "' is not of a table presentation");
    int elem = std::stoi(l.arrow.substr(1));
    if (elem <= 0 || elem >= t.order())
      throw ContractError("evaluate_in_table: element index out of range in '" + l.arrow + "'");
    acc = t.mul(acc, l.sign > 0 ? elem : t.inverse(elem));
  }
  return acc;
}

} // namespace vkg
