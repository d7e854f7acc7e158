#ifndef ACB_ANALYTIC_HPP_
#define ACB_ANALYTIC_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "acb/core.hpp"

namespace acb {

// Equilibrium marginal CDF of one battlefield in ACB(1,1,3). Each marginal
// is uniform on [lower, upper] with upper - lower = 1/3:
//   j=1: [0, 1/3]   j=2: [1/6, 1/2]   j=3: [1/3, 2/3]
struct MarginalCDF {
  int battlefield;
  Rat lower;
  Rat upper;

  static MarginalCDF for_battlefield(int j);
  Rat operator()(const Rat& u) const;
};

// F^j(u), exact. j in {1,2,3}.
Rat marginal_cdf(int j, const Rat& u);

// Payoff of the pure allocation p (budget 1, n = 3) against any strategy
// with the equilibrium marginals: (F1(a) + F2(b) + F3(c)) / 3. Equals 1/2
// exactly on the box [0,1/3] x [1/6,1/2] x [1/3,2/3], strictly less outside.
Rat payoff_vs_triangle(const Allocation& p);

struct DepthWeight {
  int depth;
  Rat weight;
};

// The triangle-boundary family: mass uniform on the sides of the base
// triangle with vertices (1/3,1/3,1/3), (0,1/2,1/2), (1/6,1/6,2/3), or of
// its depth-d corner subdivisions (three corner triangles at scale 1/3 per
// level). An optional depth mixture picks the depth per sample.
struct TriangleFamilySpec {
  int depth = 0;
  std::vector<DepthWeight> mixture;  // empty: use `depth` for every sample
};

// SplitMix64: the stated portable generator behind every sampler here.
// state += 0x9E3779B97F4A7C15; z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
// z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in {0, ..., bound-1} via the 128-bit multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound);
  // Uniform rational k / 2^53 with k drawn from the top 53 bits.
  Rat next_unit_rational();

 private:
  std::uint64_t state_;
};

using TrianglePoint = std::array<Rat, 3>;
std::array<TrianglePoint, 3> triangle_base_vertices();

// Deterministic given the seed. Per sample the draws are, in order: the
// depth (only when a mixture is present), one corner choice per depth
// level, the side choice, and the segment parameter k/2^53. All points are
// exact rationals on the plane x+y+z = 1, nondecreasing.
std::vector<Allocation> sample_triangle_strategy(const TriangleFamilySpec& spec,
                                                 long long count,
                                                 std::uint64_t seed);

// Kolmogorov-Smirnov distance between the empirical CDF of coordinate j of
// the samples and F^j, evaluated at all order statistics (both one-sided
// gaps).
double empirical_sup_distance(const std::vector<Allocation>& samples, int j);

}  // namespace acb

#endif  // ACB_ANALYTIC_HPP_
