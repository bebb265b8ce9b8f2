#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "stlyap/modular/subgroup.hpp"

namespace stlyap {

namespace detail {

/// Random permutation whose cycles all have length 1 or k.
inline Permutation random_cycle_type(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::size_t moved = std::uniform_int_distribution<std::size_t>(0, n / k)(rng) * k;
  std::vector<std::vector<int>> cycles;
  for (std::size_t i = 0; i < moved; i += k) cycles.emplace_back(pts.begin() + i, pts.begin() + i + k);
  return Permutation::from_cycles(n, cycles);
}

}  // namespace detail

/// Uniform-ish random subgroup of PSL₂(ℤ) of the given index, from a random
/// transitive pair σ_S of order ≤ 2 and σ_S·σ_T of order ≤ 3.
inline ModularSubgroup random_subgroup(std::size_t index, std::mt19937_64& rng) {
  for (;;) {
    auto x = detail::random_cycle_type(index, 2, rng);
    auto y = detail::random_cycle_type(index, 3, rng);
    auto t = compose(y, x);
    if (!is_transitive({x, t})) continue;
    return ModularSubgroup::from_action(x, t);
  }
}

}  // namespace stlyap
