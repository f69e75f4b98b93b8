// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkg/presentation.hpp"

namespace vkg {

using IntMatrix = std::vector<std::vector<long long>>;

// Canonical fingerprint of a finitely generated abelian group:
// Z^free_rank x Z/d1 x ... x Z/dk with d1 | d2 | ... and every di >= 2.
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

struct SmithResult {
  // Nonnegative diagonal in divisibility order, zeros trailing.
  std::vector<long long> diagonal;
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Unimodular column transform V with U*A*V = diag. Row transform is not
  // tracked; lattice membership only needs V.
  IntMatrix col_transform;
};

// Deterministic SNF: pivot = smallest absolute value in the working block,
// ties broken by row-major scan order. All arithmetic overflow-checked in
// 64 bits; overflow raises Error rather than silently wrapping.
SmithResult smith_normal_form(IntMatrix a);

// Is `v` an integer combination of the rows of `a`?
bool in_row_lattice(const IntMatrix& a, const std::vector<long long>& v);

// Exponent-sum matrix of a one-object presentation: one row per relator
// (lhs * rhs^-1), one column per generator in arrow order.
IntMatrix relator_matrix(const GroupoidPresentation& g);

// Smith invariants of the relator matrix. Requires a one-object presentation;
// multi-object input is a contract error (take a vertex group first).
AbelianInvariants abelian_invariants(const GroupoidPresentation& g);

} // namespace vkg
