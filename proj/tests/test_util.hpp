#ifndef ACB_TESTS_TEST_UTIL_HPP_
#define ACB_TESTS_TEST_UTIL_HPP_

#include <vector>

#include "acb/analytic.hpp"
#include "acb/core.hpp"

namespace acb::testutil {

// Random nondecreasing composition of `total` into n parts: n-1 uniform
// cuts, diff, sort ascending.
inline std::vector<long long> random_composition(SplitMix64& rng,
                                                 long long total, int n) {
  std::vector<long long> cuts;
  for (int i = 0; i < n - 1; ++i) {
    cuts.push_back(static_cast<long long>(
        rng.next_below(static_cast<std::uint64_t>(total) + 1)));
  }
  cuts.push_back(total);
  std::sort(cuts.begin(), cuts.end());
  std::vector<long long> parts;
  long long prev = 0;
  for (long long c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

inline Allocation random_allocation(SplitMix64& rng, int n, long long total,
                                    long long q) {
  const auto parts = random_composition(rng, total, n);
  std::vector<Rat> levels;
  for (long long p : parts) levels.emplace_back(p, q);
  return Allocation(std::move(levels), Rat(total, q));
}

// Random strategy with atom levels of denominator q and at most max_atoms
// atoms (duplicates merge, so there may be fewer).
inline FiniteMixedStrategy random_strategy(SplitMix64& rng, int n,
                                           long long total, long long q,
                                           int max_atoms) {
  const int atom_count = 1 + static_cast<int>(rng.next_below(max_atoms));
  std::vector<long long> weights;
  long long weight_sum = 0;
  for (int i = 0; i < atom_count; ++i) {
    weights.push_back(1 + static_cast<long long>(rng.next_below(10)));
    weight_sum += weights.back();
  }
  std::vector<WeightedAllocation> atoms;
  for (int i = 0; i < atom_count; ++i) {
    atoms.push_back({random_allocation(rng, n, total, q),
                     Rat(weights[i], weight_sum)});
  }
  return FiniteMixedStrategy(std::move(atoms));
}

}  // namespace acb::testutil

#endif  // ACB_TESTS_TEST_UTIL_HPP_
