#include <doctest.h>

#include <algorithm>

#include "acb/discrete_solver.hpp"
#include "test_util.hpp"

using namespace acb;

TEST_CASE("grid strategy enumeration") {
  const auto six_three = enumerate_grid_strategies(6, 3);
  const std::vector<std::vector<long long>> expected = {
      {0, 0, 6}, {0, 1, 5}, {0, 2, 4}, {0, 3, 3},
      {1, 1, 4}, {1, 2, 3}, {2, 2, 2}};
  CHECK(six_three == expected);
  CHECK(enumerate_grid_strategies(2, 2) ==
        std::vector<std::vector<long long>>{{0, 2}, {1, 1}});
  CHECK(enumerate_grid_strategies(0, 3) ==
        std::vector<std::vector<long long>>{{0, 0, 0}});
  CHECK_THROWS_AS(enumerate_grid_strategies(-1, 2), InputError);
  CHECK_THROWS_AS(enumerate_grid_strategies(3, 0), InputError);
}

TEST_CASE("matrix construction") {
  SUBCASE("ACB(1,1,2) at m=2 is flat") {
    const auto game = build_matrix(GameSpec(Rat(1), Rat(1), 2), 2);
    REQUIRE(game.rows.size() == 2);
    REQUIRE(game.cols.size() == 2);
    for (const auto& row : game.matrix) {
      for (const Rat& v : row) CHECK(v == Rat(1, 2));
    }
  }
  SUBCASE("ACB(1,1,3) at m=3") {
    const auto game = build_matrix(GameSpec(Rat(1), Rat(1), 3), 3);
    REQUIRE(game.rows.size() == 3);
    CHECK(game.rows[0].levels() == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    CHECK(game.rows[1].levels() ==
          std::vector<Rat>{Rat(0), Rat(1, 3), Rat(2, 3)});
    CHECK(game.rows[2].levels() ==
          std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  }
  SUBCASE("asymmetric budgets scale the column side") {
    const auto game = build_matrix(GameSpec(Rat(1), Rat(2, 3), 3), 3);
    REQUIRE(game.cols.size() == 2);
    CHECK(game.cols[0].levels() ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(2, 3)});
    CHECK(game.cols[1].levels() ==
          std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1, 3)});
  }
  SUBCASE("divisibility is reported") {
    CHECK_THROWS_WITH_AS(build_matrix(GameSpec(Rat(1), Rat(2, 3), 2), 2),
                         doctest::Contains("divisible by 3"), InputError);
  }
}

TEST_CASE("matching pennies") {
  const std::vector<std::vector<Rat>> pennies = {{Rat(0), Rat(1)},
                                                 {Rat(1), Rat(0)}};
  for (const auto method : {SolveMethod::Simplex, SolveMethod::FictitiousPlay}) {
    const auto report = solve_matrix_game(pennies, method);
    if (method == SolveMethod::Simplex) {
      CHECK(report.value == Rat(1, 2));
      CHECK(report.row_mixture == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
      CHECK(report.col_mixture == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    } else {
      const Rat gap = report.value - Rat(1, 2);
      CHECK(gap <= Rat(1, 10000));
      CHECK(-gap <= Rat(1, 10000));
      CHECK(report.iterations > 0);
    }
  }
}

TEST_CASE("symmetric games have value exactly 1/2") {
  for (int m : {2, 5, 8}) {
    CHECK(discrete_value(GameSpec(Rat(1), Rat(1), 2), m) == Rat(1, 2));
  }
  CHECK(discrete_value(GameSpec(Rat(1), Rat(1), 3), 12) == Rat(1, 2));
  CHECK(discrete_value(GameSpec(Rat(1), Rat(1), 3), 6) == Rat(1, 2));
}

TEST_CASE("a fine enough grid lets A overwhelm at t=1/2") {
  CHECK(discrete_value(GameSpec(Rat(1), Rat(1, 2), 2), 6) == Rat(1));
}

TEST_CASE("mid grid values stay sane without a continuity claim") {
  const auto game = build_matrix(GameSpec(Rat(1), Rat(3, 4), 2), 8);
  const auto simplex = solve_zero_sum(game, SolveMethod::Simplex);
  const auto fp = solve_zero_sum(game, SolveMethod::FictitiousPlay);
  CHECK(simplex.value >= Rat(1, 2));
  CHECK(simplex.value <= Rat(1));
  Rat gap = simplex.value - fp.value;
  if (gap < 0) gap = -gap;
  CHECK(gap <= Rat(1, 10000));
}

TEST_CASE("simplex certificate holds exactly on random matrices") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(rng.next_below(6));
    const int cols = 1 + static_cast<int>(rng.next_below(6));
    std::vector<std::vector<Rat>> matrix(rows, std::vector<Rat>(cols));
    for (auto& row : matrix) {
      for (Rat& v : row) {
        v = Rat(static_cast<long long>(rng.next_below(13)), 12);
      }
    }
    const auto report = solve_matrix_game(matrix, SolveMethod::Simplex);
    for (int c = 0; c < cols; ++c) {
      Rat against = 0;
      for (int r = 0; r < rows; ++r) against += report.row_mixture[r] * matrix[r][c];
      CHECK(against >= report.value);
    }
    for (int r = 0; r < rows; ++r) {
      Rat against = 0;
      for (int c = 0; c < cols; ++c) against += matrix[r][c] * report.col_mixture[c];
      CHECK(against <= report.value);
    }
    // The exact value is row-order invariant.
    auto reversed = matrix;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(solve_matrix_game(reversed, SolveMethod::Simplex).value ==
          report.value);
  }
}

TEST_CASE("fictitious play reports bounds when capped") {
  const std::vector<std::vector<Rat>> pennies = {{Rat(0), Rat(1)},
                                                 {Rat(1), Rat(0)}};
  try {
    solve_matrix_game(pennies, SolveMethod::FictitiousPlay, Rat(1, 1000000000),
                      3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.lower <= Rat(1, 2));
    CHECK(e.upper >= Rat(1, 2));
  }
}

TEST_CASE("value is monotone in the weaker budget") {
  Rat prev(2);
  for (const Rat& tb : {Rat(1, 2), Rat(7, 12), Rat(2, 3), Rat(3, 4),
                        Rat(11, 12), Rat(1)}) {
    const Rat value = discrete_value(GameSpec(Rat(1), tb, 2), 12);
    CHECK(value <= prev);
    prev = value;
  }
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(solve_matrix_game({}, SolveMethod::Simplex), InputError);
  CHECK_THROWS_AS(build_matrix(GameSpec(Rat(1), Rat(1), 2), 0), InputError);
}
