// SPDX-License-Identifier: Apache-2.0
#include "vkg/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

namespace vkg {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("smith normal form: 64-bit overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("smith normal form: 64-bit overflow");
  return r;
}

long long checked_neg(long long a) {
  if (a == std::numeric_limits<long long>::min())
    throw Error("smith normal form: 64-bit overflow");
  return -a;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j)
    m[dst][j] = checked_add(m[dst][j], checked_mul(q, m[src][j]));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][dst] = checked_add(m[i][dst], checked_mul(q, m[i][src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_col(IntMatrix& m, std::size_t j) {
  for (auto& row : m) row[j] = checked_neg(row[j]);
}

} // namespace

SmithResult smith_normal_form(IntMatrix a) {
  SmithResult res;
  res.rows = a.size();
  res.cols = res.rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != res.cols) throw ContractError("smith_normal_form: ragged matrix");

  IntMatrix v(res.cols, std::vector<long long>(res.cols, 0));
  for (std::size_t j = 0; j < res.cols; ++j) v[j][j] = 1;

  const std::size_t n = std::min(res.rows, res.cols);
  std::size_t k = 0;
  while (k < n) {
    // Smallest-absolute-value pivot in the trailing block, row-major ties.
    std::size_t pi = k, pj = k;
    long long best = 0;
    for (std::size_t i = k; i < res.rows; ++i)
      for (std::size_t j = k; j < res.cols; ++j) {
        long long x = a[i][j] == std::numeric_limits<long long>::min()
                          ? std::numeric_limits<long long>::max()
                          : std::llabs(a[i][j]);
        if (a[i][j] != 0 && (best == 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break; // trailing block is zero

    std::swap(a[pi], a[k]);
    if (pj != k) {
      swap_cols(a, pj, k);
      std::swap(v[pj], v[k]); // column swap of A = row swap of V^T; track V by rows of V^T
    }

    // NB: we store V transposed as rows for convenience; see note below.
    if (a[k][k] < 0) {
      negate_col(a, k);
      for (auto& x : v[k]) x = checked_neg(x);
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < res.rows; ++i) {
        if (a[i][k] == 0) continue;
        long long q = a[i][k] / a[k][k];
        if (q != 0) add_row_multiple(a, i, k, checked_neg(q));
        if (a[i][k] != 0) {
          // remainder smaller than pivot: swap up and restart reduction
          std::swap(a[i], a[k]);
          if (a[k][k] < 0) {
            negate_col(a, k);
            for (auto& x : v[k]) x = checked_neg(x);
          }
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < res.cols; ++j) {
        if (a[k][j] == 0) continue;
        long long q = a[k][j] / a[k][k];
        if (q != 0) {
          add_col_multiple(a, j, k, checked_neg(q));
          for (std::size_t t = 0; t < res.cols; ++t)
            v[j][t] = checked_add(v[j][t], checked_mul(checked_neg(q), v[k][t]));
        }
        if (a[k][j] != 0) {
          swap_cols(a, j, k);
          std::swap(v[j], v[k]);
          if (a[k][k] < 0) {
            negate_col(a, k);
            for (auto& x : v[k]) x = checked_neg(x);
          }
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility sweep: pivot must divide every trailing entry.
      for (std::size_t i = k + 1; i < res.rows && clean; ++i)
        for (std::size_t j = k + 1; j < res.cols && clean; ++j)
          if (a[i][j] % a[k][k] != 0) {
            add_row_multiple(a, k, i, 1);
            clean = false;
          }
    }
    ++k;
  }

  res.diagonal.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) res.diagonal[i] = a[i][i];

  // v currently holds V^T (rows = columns of V); expose V itself.
  IntMatrix vt(res.cols, std::vector<long long>(res.cols, 0));
  for (std::size_t i = 0; i < res.cols; ++i)
    for (std::size_t j = 0; j < res.cols; ++j) vt[i][j] = v[j][i];
  res.col_transform = std::move(vt);
  return res;
}

bool in_row_lattice(const IntMatrix& a, const std::vector<long long>& vec) {
  if (a.empty()) {
    for (long long x : vec)
      if (x != 0) return false;
    return true;
  }
  if (vec.size() != a[0].size()) throw ContractError("in_row_lattice: dimension mismatch");
  SmithResult s = smith_normal_form(a);
  // x*A = vec  <=>  y*D = vec*V with y unconstrained integer.
  std::vector<long long> cv(s.cols, 0);
  for (std::size_t j = 0; j < s.cols; ++j) {
    long long acc = 0;
    for (std::size_t i = 0; i < s.cols; ++i)
      acc = checked_add(acc, checked_mul(vec[i], s.col_transform[i][j]));
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

IntMatrix relator_matrix(const GroupoidPresentation& g) {
  std::map<std::string, std::size_t> col;
  for (const auto& a : g.arrows()) col[a.id] = col.size();
  IntMatrix m;
  m.reserve(g.relators().size());
  for (const auto& r : g.relators()) {
    std::vector<long long> row(g.arrows().size(), 0);
    for (const auto& l : r.lhs.letters) row[col.at(l.arrow)] += l.sign;
    for (const auto& l : r.rhs.letters) row[col.at(l.arrow)] -= l.sign;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelian_invariants(const GroupoidPresentation& g) {
  if (g.objects().size() != 1)
    throw ContractError("abelian_invariants: presentation has " +
                        std::to_string(g.objects().size()) +
                        " objects; take a vertex group first");
  IntMatrix m = relator_matrix(g);
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = static_cast<long long>(g.arrows().size());
    return inv;
  }
  SmithResult s = smith_normal_form(std::move(m));
  long long rank = 0;
  for (long long d : s.diagonal) {
    if (d != 0) {
      ++rank;
      if (d != 1 && d != -1) inv.torsion.push_back(std::llabs(d));
    }
  }
  inv.free_rank = static_cast<long long>(g.arrows().size()) - rank;
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

std::string to_string(const AbelianInvariants& a) {
  std::ostringstream os;
  os << "free_rank=" << a.free_rank << " torsion=[";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    if (i) os << ',';
    os << a.torsion[i];
  }
  os << ']';
  return os.str();
}

} // namespace vkg
