#ifndef ACB_DISCRETE_SOLVER_HPP_
#define ACB_DISCRETE_SOLVER_HPP_

#include <stdexcept>
#include <vector>

#include "acb/core.hpp"

namespace acb {

// Both players restricted to multiples of 1/m; rows/cols are all
// nondecreasing compositions of X_A*m and X_B*m (which must be integers).
struct DiscreteMatrixGame {
  GameSpec spec;
  int grid;
  std::vector<Allocation> rows;  // A's grid strategies, lexicographic
  std::vector<Allocation> cols;  // B's
  std::vector<std::vector<Rat>> matrix;  // payoff_pure(rows[r], cols[c])
};

// All nondecreasing n-tuples of nonnegative integers summing to `total`,
// in lexicographic order.
std::vector<std::vector<long long>> enumerate_grid_strategies(long long total,
                                                              int n);

DiscreteMatrixGame build_matrix(const GameSpec& spec, int m);

enum class SolveMethod { Simplex, FictitiousPlay };

struct SolveReport {
  Rat value;
  std::vector<Rat> row_mixture;
  std::vector<Rat> col_mixture;
  SolveMethod method;
  long long iterations = 0;  // fictitious play only
};

// Raised when fictitious play hits the iteration cap before the bound gap
// closes; carries the best bounds on the value found so far.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(std::string what, Rat lo, Rat hi)
      : std::runtime_error(std::move(what)),
        lower(std::move(lo)),
        upper(std::move(hi)) {}
  Rat lower;
  Rat upper;
};

// Solve an arbitrary matrix game for the row player.
//
// Simplex: the standard value LP in exact rational arithmetic (Bland's
// rule); the returned mixtures satisfy the minimax certificate
//   min_c (row_mixture . M)_c >= value   and   max_r (M . col_mixture)_r <= value
// exactly, and the certificate is checked before returning.
//
// Fictitious play: alternating exact best replies against empirical
// averages, ties broken toward the lowest index. Every iteration certifies
// min_c (ybar M)_c <= value <= max_r (M xbar)_r, from the full average and
// from the tail window since the last doubling checkpoint; the loop keeps
// the best bounds seen and stops once their gap is at most 2*tolerance,
// reporting the midpoint, which is then provably within `tolerance` of the
// game value. All bookkeeping is exact.
SolveReport solve_matrix_game(const std::vector<std::vector<Rat>>& matrix,
                              SolveMethod method,
                              const Rat& tolerance = Rat(1, 10000),
                              long long max_iterations = 1000000);

SolveReport solve_zero_sum(const DiscreteMatrixGame& game, SolveMethod method,
                           const Rat& tolerance = Rat(1, 10000),
                           long long max_iterations = 1000000);

// build_matrix then the exact simplex value.
Rat discrete_value(const GameSpec& spec, int m);

}  // namespace acb

#endif  // ACB_DISCRETE_SOLVER_HPP_
