#include "acb/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace acb {

MarginalCDF MarginalCDF::for_battlefield(int j) {
  switch (j) {
    case 1:
      return {1, Rat(0), Rat(1, 3)};
    case 2:
      return {2, Rat(1, 6), Rat(1, 2)};
    case 3:
      return {3, Rat(1, 3), Rat(2, 3)};
    default:
      throw InputError("battlefield index must be 1, 2 or 3");
  }
}

Rat MarginalCDF::operator()(const Rat& u) const {
  if (u < lower) return Rat(0);
  if (u > upper) return Rat(1);
  return (u - lower) / (upper - lower);
}

Rat marginal_cdf(int j, const Rat& u) {
  return MarginalCDF::for_battlefield(j)(u);
}

Rat payoff_vs_triangle(const Allocation& p) {
  if (p.size() != 3 || p.owner_budget() != 1) {
    throw InputError("payoff_vs_triangle needs a budget-1 allocation with n=3");
  }
  return (marginal_cdf(1, p[0]) + marginal_cdf(2, p[1]) +
          marginal_cdf(3, p[2])) /
         3;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

Rat SplitMix64::next_unit_rational() {
  const std::uint64_t k = next() >> 11;  // top 53 bits
  return Rat(Int(k), Int(1) << 53);
}

std::array<TrianglePoint, 3> triangle_base_vertices() {
  return {TrianglePoint{Rat(1, 3), Rat(1, 3), Rat(1, 3)},
          TrianglePoint{Rat(0), Rat(1, 2), Rat(1, 2)},
          TrianglePoint{Rat(1, 6), Rat(1, 6), Rat(2, 3)}};
}

namespace {

TrianglePoint affine(const TrianglePoint& a, const TrianglePoint& b,
                     const Rat& theta) {
  TrianglePoint out;
  for (int i = 0; i < 3; ++i) out[i] = a[i] + theta * (b[i] - a[i]);
  return out;
}

void validate_mixture(const TriangleFamilySpec& spec) {
  if (spec.depth < 0) throw InputError("depth must be >= 0");
  if (spec.mixture.empty()) return;
  Rat total = 0;
  for (const auto& [depth, weight] : spec.mixture) {
    if (depth < 0) throw InputError("mixture depth must be >= 0");
    if (weight <= 0) throw InputError("mixture weights must be > 0");
    total += weight;
  }
  if (total != 1) throw InputError("mixture weights must sum to 1");
}

}  // namespace

std::vector<Allocation> sample_triangle_strategy(const TriangleFamilySpec& spec,
                                                 long long count,
                                                 std::uint64_t seed) {
  if (count < 1) throw InputError("count must be >= 1");
  validate_mixture(spec);
  SplitMix64 rng(seed);
  std::vector<Allocation> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    int depth = spec.depth;
    if (!spec.mixture.empty()) {
      const Rat u = rng.next_unit_rational();
      Rat acc = 0;
      depth = spec.mixture.back().depth;
      for (const auto& [d, w] : spec.mixture) {
        acc += w;
        if (u < acc) {
          depth = d;
          break;
        }
      }
    }
    auto v = triangle_base_vertices();
    for (int level = 0; level < depth; ++level) {
      const int corner = static_cast<int>(rng.next_below(3));
      auto next = v;
      for (int other = 0; other < 3; ++other) {
        if (other == corner) continue;
        for (int coord = 0; coord < 3; ++coord) {
          next[other][coord] = (2 * v[corner][coord] + v[other][coord]) / 3;
        }
      }
      v = next;
    }
    const int side = static_cast<int>(rng.next_below(3));
    const Rat theta = rng.next_unit_rational();
    const TrianglePoint p = affine(v[side], v[(side + 1) % 3], theta);
    out.emplace_back(std::vector<Rat>{p[0], p[1], p[2]}, Rat(1));
  }
  return out;
}

double empirical_sup_distance(const std::vector<Allocation>& samples, int j) {
  if (samples.empty()) throw InputError("need at least one sample");
  if (j < 1 || j > 3) throw InputError("battlefield index must be 1, 2 or 3");
  const MarginalCDF cdf = MarginalCDF::for_battlefield(j);
  std::vector<Rat> values;
  values.reserve(samples.size());
  for (const Allocation& a : samples) {
    if (a.size() != 3) throw InputError("samples must have n=3");
    values.push_back(a[j - 1]);
  }
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = rat_double(cdf(values[i]));
    sup = std::max(sup, std::abs((static_cast<double>(i) + 1.0) / n - f));
    sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
  }
  return sup;
}

}  // namespace acb
