// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vkg/errors.hpp"

namespace vkg {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard and
// all derived draws below avoid std::uniform_int_distribution (whose mapping
// is implementation-defined), so seeded runs are byte-identical across
// platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, n). Modulo bias is irrelevant at the sizes used
  // here and keeps the mapping portable.
  std::size_t below(std::size_t n) {
    if (n == 0) throw ContractError("Rng::below: empty range");
    return static_cast<std::size_t>(next() % n);
  }

  // True with probability k/n.
  bool chance(std::size_t k, std::size_t n) { return below(n) < k; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    if (xs.empty()) throw ContractError("Rng::pick: empty vector");
    return xs[below(xs.size())];
  }

  // Independent child stream.
  Rng fork() { return Rng(next()); }

private:
  std::mt19937_64 engine_;
};

} // namespace vkg
