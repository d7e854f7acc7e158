#include "acb/discrete_solver.hpp"

#include <algorithm>
#include <numeric>

#include "acb/simplex.hpp"

namespace acb {

std::vector<std::vector<long long>> enumerate_grid_strategies(long long total,
                                                              int n) {
  if (total < 0) throw InputError("total must be >= 0");
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<std::vector<long long>> out;
  std::vector<long long> current(n);
  auto rec = [&](auto&& self, int slot, long long minimum,
                 long long remaining) -> void {
    if (slot == n - 1) {
      if (remaining >= minimum) {
        current[slot] = remaining;
        out.push_back(current);
      }
      return;
    }
    for (long long v = minimum; v * (n - slot) <= remaining; ++v) {
      current[slot] = v;
      self(self, slot + 1, v, remaining - v);
    }
  };
  rec(rec, 0, 0, total);
  return out;
}

namespace {

std::vector<Allocation> grid_allocations(const Rat& budget, int m, int n,
                                         const char* side) {
  const Rat scaled = budget * m;
  if (denominator(scaled) != 1) {
    throw InputError(std::string(side) + " budget " + rat_str(budget) +
                     " times grid " + std::to_string(m) +
                     " must be an integer; use a grid divisible by " +
                     denominator(budget).str());
  }
  const long long total = numerator(scaled).convert_to<long long>();
  std::vector<Allocation> out;
  for (const auto& parts : enumerate_grid_strategies(total, n)) {
    std::vector<Rat> levels;
    levels.reserve(parts.size());
    for (long long k : parts) levels.emplace_back(k, m);
    out.emplace_back(std::move(levels), budget);
  }
  return out;
}

}  // namespace

DiscreteMatrixGame build_matrix(const GameSpec& spec, int m) {
  if (m < 1) throw InputError("grid must be >= 1");
  DiscreteMatrixGame game{spec, m, {}, {}, {}};
  game.rows = grid_allocations(spec.budget_a, m, spec.battlefields, "row");
  game.cols = grid_allocations(spec.budget_b, m, spec.battlefields, "col");
  game.matrix.assign(game.rows.size(),
                     std::vector<Rat>(game.cols.size(), Rat(0)));
  for (std::size_t r = 0; r < game.rows.size(); ++r) {
    for (std::size_t c = 0; c < game.cols.size(); ++c) {
      game.matrix[r][c] = payoff_pure(game.rows[r], game.cols[c], spec);
    }
  }
  return game;
}

namespace {

SolveReport solve_by_simplex(const std::vector<std::vector<Rat>>& M) {
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());

  Rat min_entry = M[0][0];
  for (const auto& row : M) {
    for (const Rat& v : row) min_entry = std::min(min_entry, v);
  }
  const Rat shift = min_entry < 1 ? 1 - min_entry : Rat(0);

  // max 1.z  s.t.  (M + shift) z <= 1, z >= 0. The optimum is 1/(value +
  // shift); the duals normalize to the row mixture.
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) A[r][c] = M[r][c] + shift;
  }
  const LpSolution lp = simplex_max(A, std::vector<Rat>(rows, Rat(1)),
                                    std::vector<Rat>(cols, Rat(1)));
  if (lp.objective <= 0) {
    throw std::logic_error("shifted game must have positive value");
  }
  const Rat shifted_value = 1 / lp.objective;

  SolveReport report;
  report.method = SolveMethod::Simplex;
  report.value = shifted_value - shift;
  report.col_mixture.resize(cols);
  for (int c = 0; c < cols; ++c) report.col_mixture[c] = lp.x[c] * shifted_value;
  report.row_mixture.resize(rows);
  for (int r = 0; r < rows; ++r) {
    report.row_mixture[r] = lp.dual[r] * shifted_value;
  }

  // Exact minimax certificate; a failure here is a solver bug.
  Rat row_sum = 0, col_sum = 0;
  for (const Rat& p : report.row_mixture) {
    if (p < 0) throw std::logic_error("negative row mixture");
    row_sum += p;
  }
  for (const Rat& p : report.col_mixture) {
    if (p < 0) throw std::logic_error("negative col mixture");
    col_sum += p;
  }
  if (row_sum != 1 || col_sum != 1) {
    throw std::logic_error("mixtures must sum to 1");
  }
  for (int c = 0; c < cols; ++c) {
    Rat against = 0;
    for (int r = 0; r < rows; ++r) against += report.row_mixture[r] * M[r][c];
    if (against < report.value) {
      throw std::logic_error("row certificate violated");
    }
  }
  for (int r = 0; r < rows; ++r) {
    Rat against = 0;
    for (int c = 0; c < cols; ++c) against += M[r][c] * report.col_mixture[c];
    if (against > report.value) {
      throw std::logic_error("col certificate violated");
    }
  }
  return report;
}

SolveReport solve_by_fictitious_play(const std::vector<std::vector<Rat>>& M,
                                     const Rat& tolerance,
                                     long long max_iterations) {
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());

  // Scale payoffs to integers so the whole loop is exact 64-bit arithmetic.
  Int denom = 1;
  for (const auto& row : M) {
    for (const Rat& v : row) denom = lcm(denom, denominator(v));
  }
  if (denom > 1000000) {
    throw InputError("fictitious play needs a common payoff denominator <= 1e6");
  }
  const long long L = denom.convert_to<long long>();
  std::vector<std::vector<long long>> K(rows, std::vector<long long>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      K[r][c] = (numerator(M[r][c]) * L / denominator(M[r][c]))
                    .convert_to<long long>();
    }
  }

  std::vector<long long> row_count(rows, 0), col_count(cols, 0);
  // score_row[r] = sum_c K[r][c] * col_count[c]; score_col analogous.
  std::vector<long long> score_row(rows, 0), score_col(cols, 0);

  const auto play_row = [&](int r) {
    row_count[r] += 1;
    for (int c = 0; c < cols; ++c) score_col[c] += K[r][c];
  };
  const auto play_col = [&](int c) {
    col_count[c] += 1;
    for (int r = 0; r < rows; ++r) score_row[r] += K[r][c];
  };
  play_row(0);
  play_col(0);

  // Any mixture certifies bounds: min_c (yM)_c <= V <= max_r (Mx)_r.
  // Bounds are taken from the full empirical average and from the tail
  // window since the last doubling checkpoint (the tail is free of the
  // early transient); the best bounds seen are kept. Once
  // best_upper - best_lower <= 2*tolerance the midpoint is within
  // tolerance of the game value.
  std::vector<long long> snap_score_row(rows, 0), snap_score_col(cols, 0);
  long long snap_t = 0, next_snap = 2;
  long long iterations = 1;
  Rat best_lower(-1), best_upper(2);
  for (;; ++iterations) {
    long long best_row = 0, best_col = 0;
    for (int r = 1; r < rows; ++r) {
      if (score_row[r] > score_row[best_row]) best_row = r;
    }
    for (int c = 1; c < cols; ++c) {
      if (score_col[c] < score_col[best_col]) best_col = c;
    }
    const Rat upper(score_row[best_row], L * iterations);
    const Rat lower(score_col[best_col], L * iterations);
    if (upper < best_upper) best_upper = upper;
    if (lower > best_lower) best_lower = lower;
    if (iterations > snap_t) {
      const long long window = iterations - snap_t;
      long long wr = 0, wc = 0;
      for (int r = 1; r < rows; ++r) {
        if (score_row[r] - snap_score_row[r] >
            score_row[wr] - snap_score_row[wr]) {
          wr = r;
        }
      }
      for (int c = 1; c < cols; ++c) {
        if (score_col[c] - snap_score_col[c] <
            score_col[wc] - snap_score_col[wc]) {
          wc = c;
        }
      }
      const Rat wupper(score_row[wr] - snap_score_row[wr], L * window);
      const Rat wlower(score_col[wc] - snap_score_col[wc], L * window);
      if (wupper < best_upper) best_upper = wupper;
      if (wlower > best_lower) best_lower = wlower;
    }
    if (best_upper - best_lower <= 2 * tolerance) break;
    if (iterations >= max_iterations) {
      throw ConvergenceError(
          "fictitious play did not close the bound gap within " +
              std::to_string(max_iterations) + " iterations; value in [" +
              rat_str(best_lower) + ", " + rat_str(best_upper) + "]",
          best_lower, best_upper);
    }
    if (iterations >= next_snap) {
      snap_t = iterations;
      snap_score_row = score_row;
      snap_score_col = score_col;
      next_snap = 2 * iterations;
    }
    play_row(static_cast<int>(best_row));
    play_col(static_cast<int>(best_col));
  }

  SolveReport report;
  report.method = SolveMethod::FictitiousPlay;
  report.iterations = iterations;
  report.value = (best_lower + best_upper) / 2;
  report.row_mixture.resize(rows);
  report.col_mixture.resize(cols);
  for (int r = 0; r < rows; ++r) report.row_mixture[r] = Rat(row_count[r], iterations);
  for (int c = 0; c < cols; ++c) report.col_mixture[c] = Rat(col_count[c], iterations);
  return report;
}

}  // namespace

SolveReport solve_matrix_game(const std::vector<std::vector<Rat>>& matrix,
                              SolveMethod method, const Rat& tolerance,
                              long long max_iterations) {
  if (matrix.empty() || matrix[0].empty()) {
    throw InputError("payoff matrix must be nonempty");
  }
  for (const auto& row : matrix) {
    if (row.size() != matrix[0].size()) throw InputError("ragged matrix");
  }
  if (method == SolveMethod::Simplex) return solve_by_simplex(matrix);
  return solve_by_fictitious_play(matrix, tolerance, max_iterations);
}

SolveReport solve_zero_sum(const DiscreteMatrixGame& game, SolveMethod method,
                           const Rat& tolerance, long long max_iterations) {
  return solve_matrix_game(game.matrix, method, tolerance, max_iterations);
}

Rat discrete_value(const GameSpec& spec, int m) {
  return solve_zero_sum(build_matrix(spec, m), SolveMethod::Simplex).value;
}

}  // namespace acb
